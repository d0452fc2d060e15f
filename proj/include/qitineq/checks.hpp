#pragma once

#include "qitineq/measures.hpp"
#include "qitineq/report.hpp"

namespace qitineq {

// One checker per inequality. Each assembles the operator(s) the statement
// claims positive and reports normalized minimum eigenvalues. All expect the
// preconditions of the statement; checkers gated on a same-monotone pair
// throw NotSameMonotone unless allow_non_monotone is set (negative controls).

// Var(A) Var(B) >= |Tr(rho [A,B])|^2 / 4, scalar trace, f = x, g = 1.
MarginReport check_classical_heisenberg(const DensityElement& rho,
                                        const BlockDiagonalElement& a,
                                        const BlockDiagonalElement& b);

// Var(A) Var(B) - |Re Cov(A,B)|^2 >= |Tr(rho [A,B])|^2 / 4; also reports the
// refinement gap against the plain Heisenberg margin.
MarginReport check_classical_schrodinger(const DensityElement& rho,
                                         const BlockDiagonalElement& a,
                                         const BlockDiagonalElement& b);

// |Re Corr^alpha(A,B)|^2 <= I^alpha(A) I^alpha(B), scalar trace.
MarginReport check_classical_corr_cs(const DensityElement& rho, double alpha,
                                     const BlockDiagonalElement& a,
                                     const BlockDiagonalElement& b);

// [[Var(A), Cov(A,B)], [Cov(B,A), Var(B)]] >= 0 over the codomain.
MarginReport check_var_cov_matrix(const MeasureContext& ctx, const BlockDiagonalElement& a,
                                  const BlockDiagonalElement& b);

// Commutative-range Schroedinger matrices (two margins).
MarginReport check_schrodinger_commutative(const MeasureContext& ctx,
                                           const BlockDiagonalElement& a,
                                           const BlockDiagonalElement& b);

// [[Var(A), Phi(f[A,B])/2], [-Phi(f[A,B])/2, Var(B)]] >= 0, any map kind.
MarginReport check_heisenberg_general(const MeasureContext& ctx,
                                      const BlockDiagonalElement& a,
                                      const BlockDiagonalElement& b);

// Phi(f g A^2) >= Phi(f A g A) and I(A) >= 0 for Hermitian A.
MarginReport check_skew_positivity(const MeasureContext& ctx, const BlockDiagonalElement& a,
                                   bool allow_non_monotone = false);

// I(A) + I(A*) >= 0 for arbitrary A.
MarginReport check_skew_sum_nonneg(const MeasureContext& ctx, const BlockDiagonalElement& a,
                                   bool allow_non_monotone = false);

// [[I(A), Re Corr(A,B)], [Re Corr(A,B), I(B)]] >= 0.
MarginReport check_corr_cs_matrix(const MeasureContext& ctx, const BlockDiagonalElement& a,
                                  const BlockDiagonalElement& b,
                                  bool allow_non_monotone = false);

// ||I(B)|| I(A) >= (Re Corr)* (Re Corr); for commutative ranges also the
// refined I(A) I(B) >= |Re Corr|^2.
MarginReport check_corr_cs_norm(const MeasureContext& ctx, const BlockDiagonalElement& a,
                                const BlockDiagonalElement& b,
                                bool allow_non_monotone = false);

// Conditional-expectation Cauchy-Schwarz in the center, plus the module law
// <A, BC> = <A, B> C for random central C.
MarginReport check_conditional_expectation_cs(const MeasureContext& ctx,
                                              const BlockDiagonalElement& a,
                                              const BlockDiagonalElement& b,
                                              bool allow_non_monotone = false);

// The two operator inequalities of the covariance/correlation chain and, for
// Hermitian A, the ordering I^{f,g}(A) <= I^{sqrt(fg),sqrt(fg)}(A) <=
// Var^{fg,1}(A).
MarginReport check_chain(const MeasureContext& ctx, const BlockDiagonalElement& a);

// I^alpha(A) <= I^{1/2}(A) <= Var(A) for a Phi-density rho.
MarginReport check_alpha_chain(const DensityElement& rho, double alpha,
                               const BlockDiagonalElement& a);

// Var(A) >= Cov(A,B) Var(B)^{-1} Cov(B,A), scalar trace, f = x, g = 1.
MarginReport check_variance_covariance_classical(const DensityElement& rho,
                                                 const BlockDiagonalElement& a,
                                                 const BlockDiagonalElement& b);

// classical f = x, g = 1 context over the density's map
MeasureContext classical_context(const DensityElement& rho);

}  // namespace qitineq
