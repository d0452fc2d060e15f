#pragma once

#include <cstdint>
#include <string>

#include "qitineq/functions.hpp"
#include "qitineq/tracial_map.hpp"

namespace qitineq {

// splitmix64 step; the fixed mixer behind all instance derivation.
std::uint64_t splitmix64(std::uint64_t& state);

// Derived seed for instance i of a named stream:
// splitmix64(splitmix64(master ^ fnv1a(name)) ^ i).
std::uint64_t derive_seed(std::uint64_t master, const std::string& stream_name,
                          std::uint64_t index);

// Deterministic generator over a splitmix64 stream.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next_u64() { return splitmix64(state_); }
    double next_double();                 // [0, 1)
    double uniform(double lo, double hi); // [lo, hi)
    std::size_t next_index(std::size_t n);

private:
    std::uint64_t state_;
};

enum class PairFamily { alpha_powers, random_powers, poly_exp_mix, adversarial_non_monotone };

std::string pair_family_name(PairFamily family);
PairFamily pair_family_from_name(const std::string& name);

// Hermitian matrix with real/imaginary parts uniform in [-1, 1], symmetrized.
ComplexMatrix gen_hermitian(std::uint64_t seed, std::size_t dim);
ComplexMatrix gen_matrix(std::uint64_t seed, std::size_t dim);  // no symmetrization

BlockDiagonalElement gen_hermitian_element(std::uint64_t seed, const AlgebraShape& shape);
BlockDiagonalElement gen_element(std::uint64_t seed, const AlgebraShape& shape);

// P = G*G + 1e-6 I blockwise, then normalize_density.
DensityElement gen_density(std::uint64_t seed, const TracialMap& phi);

FunctionPair gen_function_pair(std::uint64_t seed, PairFamily family);

}  // namespace qitineq
