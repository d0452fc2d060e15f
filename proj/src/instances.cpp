#include "qitineq/instances.hpp"

namespace qitineq {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {
std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}
}  // namespace

std::uint64_t derive_seed(std::uint64_t master, const std::string& stream_name,
                          std::uint64_t index) {
    std::uint64_t s = master ^ fnv1a(stream_name);
    std::uint64_t a = splitmix64(s);
    std::uint64_t t = a ^ index;
    return splitmix64(t);
}

double Rng::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

std::size_t Rng::next_index(std::size_t n) {
    return static_cast<std::size_t>(next_double() * static_cast<double>(n)) % n;
}

std::string pair_family_name(PairFamily family) {
    switch (family) {
        case PairFamily::alpha_powers: return "alpha_powers";
        case PairFamily::random_powers: return "random_powers";
        case PairFamily::poly_exp_mix: return "poly_exp_mix";
        case PairFamily::adversarial_non_monotone: return "adversarial_non_monotone";
    }
    throw ParseError("pair_family_name: invalid family");
}

PairFamily pair_family_from_name(const std::string& name) {
    if (name == "alpha_powers") return PairFamily::alpha_powers;
    if (name == "random_powers") return PairFamily::random_powers;
    if (name == "poly_exp_mix") return PairFamily::poly_exp_mix;
    if (name == "adversarial_non_monotone") return PairFamily::adversarial_non_monotone;
    throw ParseError("unknown pair family: " + name);
}

ComplexMatrix gen_matrix(std::uint64_t seed, std::size_t dim) {
    Rng rng(seed);
    ComplexMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            m(i, j) = cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    return m;
}

ComplexMatrix gen_hermitian(std::uint64_t seed, std::size_t dim) {
    return gen_matrix(seed, dim).hermitized();
}

BlockDiagonalElement gen_hermitian_element(std::uint64_t seed, const AlgebraShape& shape) {
    std::vector<ComplexMatrix> blocks;
    for (std::size_t i = 0; i < shape.block_count(); ++i)
        blocks.push_back(gen_hermitian(derive_seed(seed, "block", i), shape.block_dims[i]));
    return {shape, std::move(blocks)};
}

BlockDiagonalElement gen_element(std::uint64_t seed, const AlgebraShape& shape) {
    std::vector<ComplexMatrix> blocks;
    for (std::size_t i = 0; i < shape.block_count(); ++i)
        blocks.push_back(gen_matrix(derive_seed(seed, "block", i), shape.block_dims[i]));
    return {shape, std::move(blocks)};
}

DensityElement gen_density(std::uint64_t seed, const TracialMap& phi) {
    const AlgebraShape& shape = phi.domain_shape();
    std::vector<ComplexMatrix> blocks;
    for (std::size_t i = 0; i < shape.block_count(); ++i) {
        const std::size_t n = shape.block_dims[i];
        ComplexMatrix g = gen_matrix(derive_seed(seed, "density", i), n);
        // floor keeps the spectrum away from zero so fractional powers stay smooth
        blocks.push_back(g.adjoint() * g + ComplexMatrix::identity(n) * cplx(1e-6));
    }
    return normalize_density(phi, BlockDiagonalElement(shape, std::move(blocks)));
}

FunctionPair gen_function_pair(std::uint64_t seed, PairFamily family) {
    Rng rng(seed);
    switch (family) {
        case PairFamily::alpha_powers: {
            double alpha = rng.uniform(0.0, 1.0);
            return {ScalarFunction::power(1.0 - alpha), ScalarFunction::power(alpha)};
        }
        case PairFamily::random_powers: {
            double p = rng.uniform(0.0, 3.0);
            double q = rng.uniform(0.0, 3.0);
            // (0, 3]: both increasing on x >= 0
            if (p == 0.0) p = 3.0;
            if (q == 0.0) q = 3.0;
            return {ScalarFunction::power(p), ScalarFunction::power(q)};
        }
        case PairFamily::poly_exp_mix: {
            std::size_t degree = 1 + rng.next_index(3);
            std::vector<double> coeffs;
            coeffs.push_back(rng.uniform(0.1, 1.0));  // positive constant term
            for (std::size_t k = 0; k < degree; ++k) coeffs.push_back(rng.uniform(0.0, 1.0));
            return {ScalarFunction::polynomial(std::move(coeffs)),
                    ScalarFunction::exponential()};
        }
        case PairFamily::adversarial_non_monotone:
            // increasing against decreasing; fails the same-monotone certificate
            return {ScalarFunction::power(1.0), ScalarFunction::affine(-1.0, 1.0)};
    }
    throw ParseError("gen_function_pair: invalid family");
}

}  // namespace qitineq
