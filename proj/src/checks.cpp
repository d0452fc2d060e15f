#include "qitineq/checks.hpp"

#include <algorithm>
#include <cmath>

namespace qitineq {

namespace {

void require_hermitian(const BlockDiagonalElement& x, const char* what) {
    if (x.hermiticity_defect() > 1e-10 * std::max(1.0, x.frobenius_norm()))
        throw NotHermitian(std::string(what) + ": element not Hermitian");
}

void require_scalar_trace(const DensityElement& rho, const char* what) {
    if (rho.map.kind() != MapKind::scalar_trace)
        throw WrongKind(std::string(what) + ": requires a scalar-trace context");
}

void require_positive_pair(const MeasureContext& ctx, const char* what) {
    for (double lambda : ctx.spectrum())
        if (ctx.pair().f.eval(lambda) <= 0.0 || ctx.pair().g.eval(lambda) <= 0.0)
            throw DomainViolation(std::string(what) +
                                  ": f and g must be positive on the spectrum");
}

void gate_same_monotone(const MeasureContext& ctx, bool allow, const char* what) {
    if (!allow && !ctx.pair_same_monotone())
        throw NotSameMonotone(std::string(what) + ": pair not certified same-monotone");
}

double scalar_real(const BlockDiagonalElement& x) { return x.trace().real(); }
cplx scalar_value(const BlockDiagonalElement& x) { return x.block(0)(0, 0); }

double normalized_scalar(double raw) { return raw / std::max(1.0, std::abs(raw)); }

// normalized lambda_min of a (nearly) Hermitian element
double element_margin(const BlockDiagonalElement& x) {
    return element_normalized_min_eigenvalue(x.hermitized());
}

double block2x2_margin(const BlockDiagonalElement& p, const BlockDiagonalElement& q,
                       const BlockDiagonalElement& qadj, const BlockDiagonalElement& s,
                       double* scale_out = nullptr) {
    ComplexMatrix m = assemble_element_block_2x2(p, q, qadj, s).hermitized();
    if (scale_out) *scale_out = m.frobenius_norm();
    return normalized_min_eigenvalue(m);
}

}  // namespace

MeasureContext classical_context(const DensityElement& rho) {
    return {rho.map, rho.rho,
            FunctionPair{ScalarFunction::identity(), ScalarFunction::constant(1.0)}};
}

MarginReport check_classical_heisenberg(const DensityElement& rho,
                                        const BlockDiagonalElement& a,
                                        const BlockDiagonalElement& b) {
    require_scalar_trace(rho, "check_classical_heisenberg");
    require_hermitian(a, "check_classical_heisenberg");
    require_hermitian(b, "check_classical_heisenberg");
    MeasureContext ctx = classical_context(rho);
    double var_a = scalar_real(gen_variance(ctx, a));
    double var_b = scalar_real(gen_variance(ctx, b));
    cplx comm = scalar_value(ctx.map().apply_effective(rho.rho * element_commutator(a, b)));
    double raw = var_a * var_b - 0.25 * std::norm(comm);

    MarginReport report;
    report.check_id = "classical_heisenberg";
    report.scale = std::abs(raw);
    report.add_margin("heisenberg", normalized_scalar(raw));
    report.finalize();
    return report;
}

MarginReport check_classical_schrodinger(const DensityElement& rho,
                                         const BlockDiagonalElement& a,
                                         const BlockDiagonalElement& b) {
    require_scalar_trace(rho, "check_classical_schrodinger");
    require_hermitian(a, "check_classical_schrodinger");
    require_hermitian(b, "check_classical_schrodinger");
    MeasureContext ctx = classical_context(rho);
    double var_a = scalar_real(gen_variance(ctx, a));
    double var_b = scalar_real(gen_variance(ctx, b));
    double re_cov = scalar_value(gen_covariance(ctx, a, b)).real();
    cplx comm = scalar_value(ctx.map().apply_effective(rho.rho * element_commutator(a, b)));
    double heis_raw = var_a * var_b - 0.25 * std::norm(comm);
    double schr_raw = heis_raw - re_cov * re_cov;

    MarginReport report;
    report.check_id = "classical_schrodinger";
    report.scale = std::abs(schr_raw);
    report.add_margin("schrodinger", normalized_scalar(schr_raw));
    // Eq. refinement: the Schroedinger bound is at least as strong
    report.add_margin("refinement_gap", normalized_scalar(heis_raw - schr_raw));
    report.finalize();
    return report;
}

MarginReport check_classical_corr_cs(const DensityElement& rho, double alpha,
                                     const BlockDiagonalElement& a,
                                     const BlockDiagonalElement& b) {
    require_scalar_trace(rho, "check_classical_corr_cs");
    require_hermitian(a, "check_classical_corr_cs");
    require_hermitian(b, "check_classical_corr_cs");
    MeasureContext ctx = alpha_context(rho.map, rho.rho, alpha);
    double i_a = scalar_real(skew_information(ctx, a));
    double i_b = scalar_real(skew_information(ctx, b));
    double re_corr = scalar_value(gen_correlation(ctx, a, b)).real();
    double raw = i_a * i_b - re_corr * re_corr;

    MarginReport report;
    report.check_id = "classical_corr_cs";
    report.scale = std::abs(raw);
    report.add_margin("corr_cs", normalized_scalar(raw));
    report.finalize();
    return report;
}

MarginReport check_var_cov_matrix(const MeasureContext& ctx, const BlockDiagonalElement& a,
                                  const BlockDiagonalElement& b) {
    BlockDiagonalElement var_a = gen_variance(ctx, a);
    BlockDiagonalElement var_b = gen_variance(ctx, b);
    BlockDiagonalElement cov_ab = gen_covariance(ctx, a, b);
    BlockDiagonalElement cov_ba = gen_covariance(ctx, b, a);

    MarginReport report;
    report.check_id = "var_cov_matrix";
    double scale = 0.0;
    report.add_margin("var_cov_matrix",
                      block2x2_margin(var_a, cov_ab, cov_ba, var_b, &scale));
    report.scale = scale;
    report.finalize();
    return report;
}

MarginReport check_schrodinger_commutative(const MeasureContext& ctx,
                                           const BlockDiagonalElement& a,
                                           const BlockDiagonalElement& b) {
    if (!ctx.map().has_commutative_range())
        throw NonCommutativeRange("check_schrodinger_commutative: range not commutative");
    require_hermitian(a, "check_schrodinger_commutative");
    require_hermitian(b, "check_schrodinger_commutative");
    require_positive_pair(ctx, "check_schrodinger_commutative");

    BlockDiagonalElement var_a = gen_variance(ctx, a);
    BlockDiagonalElement var_b = gen_variance(ctx, b);
    BlockDiagonalElement re_cov = element_real_part(gen_covariance(ctx, a, b));
    BlockDiagonalElement half_comm =
        ctx.map().apply_effective(ctx.f_rho() * element_commutator(a, b)) * cplx(0.5);

    MarginReport report;
    report.check_id = "schrodinger_commutative";
    double scale = 0.0;
    report.add_margin("with_recov", block2x2_margin(var_a, re_cov + half_comm,
                                                    re_cov - half_comm, var_b, &scale));
    report.scale = scale;
    report.add_margin("commutator_only",
                      block2x2_margin(var_a, half_comm, -half_comm, var_b));
    report.finalize();
    return report;
}

MarginReport check_heisenberg_general(const MeasureContext& ctx,
                                      const BlockDiagonalElement& a,
                                      const BlockDiagonalElement& b) {
    require_hermitian(a, "check_heisenberg_general");
    require_hermitian(b, "check_heisenberg_general");
    require_positive_pair(ctx, "check_heisenberg_general");

    BlockDiagonalElement var_a = gen_variance(ctx, a);
    BlockDiagonalElement var_b = gen_variance(ctx, b);
    BlockDiagonalElement half_comm =
        ctx.map().apply_effective(ctx.f_rho() * element_commutator(a, b)) * cplx(0.5);

    MarginReport report;
    report.check_id = "heisenberg_general";
    double scale = 0.0;
    report.add_margin("heisenberg_general",
                      block2x2_margin(var_a, half_comm, -half_comm, var_b, &scale));
    report.scale = scale;
    report.finalize();
    return report;
}

MarginReport check_skew_positivity(const MeasureContext& ctx, const BlockDiagonalElement& a,
                                   bool allow_non_monotone) {
    require_hermitian(a, "check_skew_positivity");
    gate_same_monotone(ctx, allow_non_monotone, "check_skew_positivity");

    BlockDiagonalElement lhs =
        ctx.map().apply_effective(ctx.f_rho() * ctx.g_rho() * a * a);
    BlockDiagonalElement rhs =
        ctx.map().apply_effective(ctx.f_rho() * a * ctx.g_rho() * a);
    BlockDiagonalElement diff = (lhs - rhs).hermitized();
    BlockDiagonalElement skew = skew_information(ctx, a).hermitized();

    MarginReport report;
    report.check_id = "skew_positivity";
    report.scale = diff.frobenius_norm();
    report.add_margin("operator_inequality", element_margin(diff));
    report.add_margin("skew_information", element_margin(skew));
    report.finalize();
    return report;
}

MarginReport check_skew_sum_nonneg(const MeasureContext& ctx, const BlockDiagonalElement& a,
                                   bool allow_non_monotone) {
    gate_same_monotone(ctx, allow_non_monotone, "check_skew_sum_nonneg");
    BlockDiagonalElement sum =
        (skew_information(ctx, a) + skew_information(ctx, a.adjoint())).hermitized();

    MarginReport report;
    report.check_id = "skew_sum_nonneg";
    report.scale = sum.frobenius_norm();
    report.add_margin("skew_sum", element_margin(sum));
    report.finalize();
    return report;
}

MarginReport check_corr_cs_matrix(const MeasureContext& ctx, const BlockDiagonalElement& a,
                                  const BlockDiagonalElement& b, bool allow_non_monotone) {
    require_hermitian(a, "check_corr_cs_matrix");
    require_hermitian(b, "check_corr_cs_matrix");
    gate_same_monotone(ctx, allow_non_monotone, "check_corr_cs_matrix");

    BlockDiagonalElement i_a = skew_information(ctx, a).hermitized();
    BlockDiagonalElement i_b = skew_information(ctx, b).hermitized();
    BlockDiagonalElement re_corr = element_real_part(gen_correlation(ctx, a, b));

    MarginReport report;
    report.check_id = "corr_cs_matrix";
    double scale = 0.0;
    report.add_margin("corr_cs_matrix",
                      block2x2_margin(i_a, re_corr, re_corr, i_b, &scale));
    report.scale = scale;
    report.finalize();
    return report;
}

MarginReport check_corr_cs_norm(const MeasureContext& ctx, const BlockDiagonalElement& a,
                                const BlockDiagonalElement& b, bool allow_non_monotone) {
    require_hermitian(a, "check_corr_cs_norm");
    require_hermitian(b, "check_corr_cs_norm");
    gate_same_monotone(ctx, allow_non_monotone, "check_corr_cs_norm");

    BlockDiagonalElement i_a = skew_information(ctx, a).hermitized();
    BlockDiagonalElement i_b = skew_information(ctx, b).hermitized();
    BlockDiagonalElement re_corr = element_real_part(gen_correlation(ctx, a, b));
    // C*-norm of the PSD I(B): its largest eigenvalue
    double op_norm = std::max(0.0, element_max_eigenvalue(i_b));
    BlockDiagonalElement lhs = (cplx(op_norm) * i_a - re_corr * re_corr).hermitized();

    MarginReport report;
    report.check_id = "corr_cs_norm";
    report.scale = lhs.frobenius_norm();
    report.add_margin("norm_form", element_margin(lhs));
    if (ctx.map().has_commutative_range()) {
        BlockDiagonalElement refined = (i_a * i_b - re_corr * re_corr).hermitized();
        report.add_margin("refined_commutative", element_margin(refined));
    }
    report.finalize();
    return report;
}

MarginReport check_conditional_expectation_cs(const MeasureContext& ctx,
                                              const BlockDiagonalElement& a,
                                              const BlockDiagonalElement& b,
                                              bool allow_non_monotone) {
    if (ctx.map().kind() != MapKind::center_expectation)
        throw WrongKind("check_conditional_expectation_cs: requires center expectation");
    gate_same_monotone(ctx, allow_non_monotone, "check_conditional_expectation_cs");

    const double tol = 1e-10;
    auto hermitian = [&](const BlockDiagonalElement& x) {
        return x.hermiticity_defect() <= tol * std::max(1.0, x.frobenius_norm());
    };
    if (!hermitian(a) || !hermitian(b)) {
        // normal elements are admitted when f = g
        auto normal = [&](const BlockDiagonalElement& x) {
            return element_commutator(x, x.adjoint()).frobenius_norm() <=
                   1e-9 * std::max(1.0, x.frobenius_norm());
        };
        if (ctx.pair().f.to_string() != ctx.pair().g.to_string() || !normal(a) || !normal(b))
            throw NotHermitian(
                "check_conditional_expectation_cs: operands must be Hermitian (or normal "
                "with f = g)");
    }

    BlockDiagonalElement i_a = sym_skew_information(ctx, a).hermitized();
    BlockDiagonalElement i_b = sym_skew_information(ctx, b).hermitized();
    BlockDiagonalElement corr = sym_correlation(ctx, a, b);
    BlockDiagonalElement cs = (i_a * i_b - corr.adjoint() * corr).hermitized();

    MarginReport report;
    report.check_id = "conditional_expectation_cs";
    report.scale = cs.frobenius_norm();
    report.add_margin("cauchy_schwarz", element_margin(cs));

    // module law <A, BC> = <A, B> C for a central C (fixed per-block scalars)
    std::vector<ComplexMatrix> central;
    for (std::size_t i = 0; i < ctx.rho().block_count(); ++i) {
        double t = static_cast<double>(i + 1);
        central.push_back(ComplexMatrix::identity(ctx.rho().block(i).rows()) *
                          cplx(1.0 + 0.5 * std::sin(t), 0.25 * std::cos(t)));
    }
    BlockDiagonalElement c(ctx.rho().shape(), std::move(central));
    BlockDiagonalElement law_lhs = sym_correlation(ctx, a, b * c);
    BlockDiagonalElement law_rhs = corr * c;
    double law_err = (law_lhs - law_rhs).frobenius_norm() /
                     std::max(1.0, law_rhs.frobenius_norm());
    report.add_margin("module_law", -law_err);
    report.finalize();
    return report;
}

MarginReport check_chain(const MeasureContext& ctx, const BlockDiagonalElement& a) {
    require_positive_pair(ctx, "check_chain");
    const auto& f = ctx.pair().f;
    const auto& g = ctx.pair().g;
    BlockDiagonalElement s = element_apply_pointwise(
        ctx.rho(), [&](double x) { return std::sqrt(f.eval(x) * g.eval(x)); });
    BlockDiagonalElement fg = element_apply_pointwise(
        ctx.rho(), [&](double x) { return f.eval(x) * g.eval(x); });

    const TracialMap& phi = ctx.map();
    const BlockDiagonalElement& fr = ctx.f_rho();
    const BlockDiagonalElement& gr = ctx.g_rho();
    const BlockDiagonalElement a_adj = a.adjoint();

    BlockDiagonalElement mid = phi.apply_effective(s * a_adj * s * a);
    BlockDiagonalElement upper = (phi.apply_effective(fr * a_adj * gr * a) +
                                  phi.apply_effective(fr * a * gr * a_adj)) *
                                 cplx(0.5);

    BlockDiagonalElement normalizer = phi.apply_effective(fg).hermitized();
    if (element_min_eigenvalue(normalizer) <=
        1e-10 * std::max(1.0, normalizer.frobenius_norm()))
        throw SingularNormalizer("check_chain: Phi(f g) not strictly positive");
    BlockDiagonalElement inv = element_inverse_strictly_positive(normalizer);
    BlockDiagonalElement x = phi.apply_effective(fr * a_adj * gr);
    BlockDiagonalElement y = phi.apply_effective(gr * a * fr);
    BlockDiagonalElement lower = x * inv * y;

    MarginReport report;
    report.check_id = "chain";
    BlockDiagonalElement first = (upper - mid).hermitized();
    report.scale = first.frobenius_norm();
    report.add_margin("symmetrized_vs_mid", element_margin(first));
    report.add_margin("mid_vs_schur", element_margin((mid - lower).hermitized()));

    if (a.hermiticity_defect() <= 1e-10 * std::max(1.0, a.frobenius_norm())) {
        BlockDiagonalElement i_fg = (phi.apply_effective(fr * gr * a * a) -
                                     phi.apply_effective(fr * a * gr * a))
                                        .hermitized();
        BlockDiagonalElement i_s = (phi.apply_effective(s * s * a * a) -
                                    phi.apply_effective(s * a * s * a))
                                       .hermitized();
        BlockDiagonalElement var_fg1 =
            (phi.apply_effective(fg * a_adj * a) -
             phi.apply_effective(fg * a_adj) * inv * phi.apply_effective(fg * a))
                .hermitized();
        report.add_margin("skew_fg_vs_sqrt", element_margin(i_s - i_fg));
        report.add_margin("sqrt_vs_variance", element_margin(var_fg1 - i_s));
    }
    report.finalize();
    return report;
}

MarginReport check_alpha_chain(const DensityElement& rho, double alpha,
                               const BlockDiagonalElement& a) {
    require_hermitian(a, "check_alpha_chain");
    MeasureContext ctx_alpha = alpha_context(rho.map, rho.rho, alpha);
    MeasureContext ctx_half = alpha_context(rho.map, rho.rho, 0.5);
    MeasureContext ctx_classical = classical_context(rho);

    BlockDiagonalElement i_alpha = skew_information(ctx_alpha, a).hermitized();
    BlockDiagonalElement i_half = skew_information(ctx_half, a).hermitized();
    BlockDiagonalElement var = gen_variance(ctx_classical, a).hermitized();

    MarginReport report;
    report.check_id = "alpha_chain";
    BlockDiagonalElement first = (i_half - i_alpha).hermitized();
    report.scale = first.frobenius_norm();
    report.add_margin("alpha_vs_half", element_margin(first));
    report.add_margin("half_vs_variance", element_margin((var - i_half).hermitized()));
    report.finalize();
    return report;
}

MarginReport check_variance_covariance_classical(const DensityElement& rho,
                                                 const BlockDiagonalElement& a,
                                                 const BlockDiagonalElement& b) {
    require_scalar_trace(rho, "check_variance_covariance_classical");
    require_hermitian(a, "check_variance_covariance_classical");
    require_hermitian(b, "check_variance_covariance_classical");
    MeasureContext ctx = classical_context(rho);
    double var_a = scalar_real(gen_variance(ctx, a));
    double var_b = scalar_real(gen_variance(ctx, b));
    if (var_b <= 1e-10)
        throw SingularNormalizer("check_variance_covariance_classical: Var(B) ~ 0");
    cplx cov_ab = scalar_value(gen_covariance(ctx, a, b));
    double raw = var_a - std::norm(cov_ab) / var_b;

    MarginReport report;
    report.check_id = "variance_covariance";
    report.scale = std::abs(raw);
    report.add_margin("variance_covariance", normalized_scalar(raw));
    report.finalize();
    return report;
}

}  // namespace qitineq
