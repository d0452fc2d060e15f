#include "qitineq/measures.hpp"

#include <algorithm>
#include <cmath>

namespace qitineq {

MeasureContext::MeasureContext(TracialMap map, BlockDiagonalElement rho, FunctionPair pair,
                               CorrRoute route)
    : map_(std::move(map)), rho_(std::move(rho)), pair_(std::move(pair)), route_(route) {
    if (!(rho_.shape() == map_.domain_shape()))
        throw ShapeMismatch("MeasureContext: rho shape does not match the map domain");
    if (rho_.hermiticity_defect() > 1e-10 * std::max(1.0, rho_.frobenius_norm()))
        throw NotHermitian("MeasureContext: rho not Hermitian");
    rho_ = rho_.hermitized();
    spectrum_ = element_eigenvalues(rho_);
    for (double lambda : spectrum_) {
        if (!pair_.f.in_domain(lambda) || !pair_.g.in_domain(lambda))
            throw DomainViolation("MeasureContext: rho spectrum outside a function domain");
    }
    f_rho_ = element_apply_function(rho_, pair_.f);
    g_rho_ = element_apply_function(rho_, pair_.g);
    same_monotone_ = pair_.certify_same_monotone(spectrum_);
}

MeasureContext MeasureContext::with_route(CorrRoute route) const {
    MeasureContext copy = *this;
    copy.route_ = route;
    return copy;
}

MeasureContext alpha_context(const TracialMap& map, const BlockDiagonalElement& rho,
                             double alpha, CorrRoute route) {
    if (alpha < 0.0 || alpha > 1.0)
        throw DomainViolation("alpha_context: alpha outside [0, 1]");
    FunctionPair pair{ScalarFunction::power(1.0 - alpha), ScalarFunction::power(alpha)};
    return {map, rho, pair, route};
}

BlockDiagonalElement covariance_with(const TracialMap& map, const BlockDiagonalElement& f_rho,
                                     const BlockDiagonalElement& g_rho,
                                     const BlockDiagonalElement& a,
                                     const BlockDiagonalElement& b) {
    BlockDiagonalElement normalizer =
        map.apply_effective(f_rho * g_rho * g_rho).hermitized();
    if (element_min_eigenvalue(normalizer) <=
        1e-10 * std::max(1.0, normalizer.frobenius_norm()))
        throw SingularNormalizer("gen_covariance: Phi(f g^2) not strictly positive");
    BlockDiagonalElement inv = element_inverse_strictly_positive(normalizer);
    BlockDiagonalElement left = map.apply_effective(f_rho * g_rho * a.adjoint());
    BlockDiagonalElement right = map.apply_effective(f_rho * g_rho * b);
    return map.apply_effective(f_rho * a.adjoint() * b) - left * inv * right;
}

BlockDiagonalElement gen_covariance(const MeasureContext& ctx, const BlockDiagonalElement& a,
                                    const BlockDiagonalElement& b) {
    if (!(a.shape() == ctx.rho().shape()) || !(b.shape() == ctx.rho().shape()))
        throw ShapeMismatch("gen_covariance: operand shape mismatch");
    return covariance_with(ctx.map(), ctx.f_rho(), ctx.g_rho(), a, b);
}

BlockDiagonalElement gen_variance(const MeasureContext& ctx, const BlockDiagonalElement& a) {
    return gen_covariance(ctx, a, a);
}

BlockDiagonalElement correlation_with(const TracialMap& map, const BlockDiagonalElement& f_rho,
                                      const BlockDiagonalElement& g_rho,
                                      const BlockDiagonalElement& a,
                                      const BlockDiagonalElement& b) {
    return map.apply_effective(f_rho * g_rho * a.adjoint() * b) -
           map.apply_effective(f_rho * a.adjoint() * g_rho * b);
}

BlockDiagonalElement gen_correlation(const MeasureContext& ctx, const BlockDiagonalElement& a,
                                     const BlockDiagonalElement& b) {
    if (!(a.shape() == ctx.rho().shape()) || !(b.shape() == ctx.rho().shape()))
        throw ShapeMismatch("gen_correlation: operand shape mismatch");
    if (ctx.route() == CorrRoute::spectral_sum) return spectral_sum_correlation(ctx, a, b);
    return correlation_with(ctx.map(), ctx.f_rho(), ctx.g_rho(), a, b);
}

BlockDiagonalElement skew_information(const MeasureContext& ctx,
                                      const BlockDiagonalElement& a) {
    return gen_correlation(ctx, a, a);
}

BlockDiagonalElement sym_correlation(const MeasureContext& ctx, const BlockDiagonalElement& a,
                                     const BlockDiagonalElement& b) {
    return (gen_correlation(ctx, a, b) + gen_correlation(ctx, b.adjoint(), a.adjoint())) *
           cplx(0.5);
}

BlockDiagonalElement sym_skew_information(const MeasureContext& ctx,
                                          const BlockDiagonalElement& a) {
    return sym_correlation(ctx, a, a);
}

std::vector<EigenProjection> eigenprojections(const BlockDiagonalElement& rho) {
    struct Entry {
        double value;
        std::size_t block;
        std::size_t column;
        HermitianSpectrum const* spec;
    };
    std::vector<HermitianSpectrum> specs;
    specs.reserve(rho.block_count());
    for (const auto& b : rho.blocks()) specs.push_back(eig_hermitian(b));

    std::vector<Entry> entries;
    for (std::size_t bi = 0; bi < specs.size(); ++bi)
        for (std::size_t k = 0; k < specs[bi].eigenvalues.size(); ++k)
            entries.push_back({specs[bi].eigenvalues[k], bi, k, &specs[bi]});
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.value < b.value; });

    const double spread = entries.back().value - entries.front().value;
    const double gap = 1e-8 * spread;

    std::vector<EigenProjection> out;
    std::size_t start = 0;
    while (start < entries.size()) {
        std::size_t end = start + 1;
        while (end < entries.size() && entries[end].value - entries[end - 1].value <= gap)
            ++end;
        double mean = 0.0;
        std::vector<ComplexMatrix> blocks(rho.blocks().begin(), rho.blocks().end());
        for (auto& b : blocks) b = ComplexMatrix::zero(b.rows(), b.cols());
        for (std::size_t k = start; k < end; ++k) {
            const Entry& e = entries[k];
            mean += e.value;
            const ComplexMatrix& u = e.spec->eigenvectors;
            ComplexMatrix& blk = blocks[e.block];
            for (std::size_t i = 0; i < blk.rows(); ++i)
                for (std::size_t j = 0; j < blk.cols(); ++j)
                    blk(i, j) += u(i, e.column) * std::conj(u(j, e.column));
        }
        mean /= static_cast<double>(end - start);
        out.push_back({mean, BlockDiagonalElement(rho.shape(), std::move(blocks))});
        start = end;
    }
    return out;
}

BlockDiagonalElement spectral_sum_correlation(const MeasureContext& ctx,
                                              const BlockDiagonalElement& a,
                                              const BlockDiagonalElement& b) {
    if (!(a.shape() == ctx.rho().shape()) || !(b.shape() == ctx.rho().shape()))
        throw ShapeMismatch("spectral_sum_correlation: operand shape mismatch");
    auto projections = eigenprojections(ctx.rho());
    std::vector<double> fv, gv;
    for (const auto& p : projections) {
        if (!ctx.pair().f.in_domain(p.eigenvalue) || !ctx.pair().g.in_domain(p.eigenvalue))
            throw DomainViolation("spectral_sum_correlation: eigenvalue outside domain");
        fv.push_back(ctx.pair().f.eval(p.eigenvalue));
        gv.push_back(ctx.pair().g.eval(p.eigenvalue));
    }
    BlockDiagonalElement acc =
        BlockDiagonalElement::zero(ctx.map().effective_codomain_shape());
    const BlockDiagonalElement a_adj = a.adjoint();
    for (std::size_t i = 0; i < projections.size(); ++i) {
        const BlockDiagonalElement ei_aadj = projections[i].projection * a_adj;
        for (std::size_t j = 0; j < projections.size(); ++j) {
            const double weight = fv[i] * gv[i] - fv[i] * gv[j];
            if (weight == 0.0) continue;
            acc = acc + cplx(weight) * ctx.map().apply_effective(
                                            ei_aadj * projections[j].projection * b);
        }
    }
    return acc;
}

}  // namespace qitineq
