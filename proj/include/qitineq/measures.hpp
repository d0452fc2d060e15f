#pragma once

#include "qitineq/functions.hpp"
#include "qitineq/tracial_map.hpp"

namespace qitineq {

// Which formula backs gen_correlation: the operator-product definition or the
// eigenprojection sum used as its independent oracle.
enum class CorrRoute { product, spectral_sum };

// Everything a generalized covariance/correlation evaluation needs: the map
// Phi, the state rho, and the function pair (f, g). f(rho) and g(rho) are
// computed once on construction.
class MeasureContext {
public:
    MeasureContext(TracialMap map, BlockDiagonalElement rho, FunctionPair pair,
                   CorrRoute route = CorrRoute::product);

    const TracialMap& map() const { return map_; }
    const BlockDiagonalElement& rho() const { return rho_; }
    const FunctionPair& pair() const { return pair_; }
    CorrRoute route() const { return route_; }

    const BlockDiagonalElement& f_rho() const { return f_rho_; }
    const BlockDiagonalElement& g_rho() const { return g_rho_; }
    const std::vector<double>& spectrum() const { return spectrum_; }

    bool pair_same_monotone() const { return same_monotone_; }

    MeasureContext with_route(CorrRoute route) const;

private:
    TracialMap map_;
    BlockDiagonalElement rho_;
    FunctionPair pair_;
    CorrRoute route_;
    BlockDiagonalElement f_rho_;
    BlockDiagonalElement g_rho_;
    std::vector<double> spectrum_;
    bool same_monotone_ = false;
};

// pair = (x^(1-alpha), x^alpha); rho must be PSD.
MeasureContext alpha_context(const TracialMap& map, const BlockDiagonalElement& rho,
                             double alpha, CorrRoute route = CorrRoute::product);

// Cov(A,B) = Phi(f A*B) - Phi(f g A*) Phi(f g^2)^{-1} Phi(f g B); requires
// Phi(f g^2) strictly positive (SingularNormalizer otherwise).
BlockDiagonalElement gen_covariance(const MeasureContext& ctx, const BlockDiagonalElement& a,
                                    const BlockDiagonalElement& b);
BlockDiagonalElement gen_variance(const MeasureContext& ctx, const BlockDiagonalElement& a);

// Corr(A,B) = Phi(f g A*B) - Phi(f A* g B); no strict positivity needed.
BlockDiagonalElement gen_correlation(const MeasureContext& ctx, const BlockDiagonalElement& a,
                                     const BlockDiagonalElement& b);
BlockDiagonalElement skew_information(const MeasureContext& ctx,
                                      const BlockDiagonalElement& a);

// Corr'(A,B) = (Corr(A,B) + Corr(B*,A*)) / 2.
BlockDiagonalElement sym_correlation(const MeasureContext& ctx, const BlockDiagonalElement& a,
                                     const BlockDiagonalElement& b);
BlockDiagonalElement sym_skew_information(const MeasureContext& ctx,
                                          const BlockDiagonalElement& a);

// Independent oracle for gen_correlation: sum_{ij} (f_i g_i - f_i g_j)
// Phi(E_i A* E_j B) over explicit eigenprojections E_i of rho (eigenvalues
// grouped within 1e-8 * spread).
BlockDiagonalElement spectral_sum_correlation(const MeasureContext& ctx,
                                              const BlockDiagonalElement& a,
                                              const BlockDiagonalElement& b);

// Generic variants over arbitrary spectral functions of rho, used by the
// chain inequalities (sqrt(fg) etc.).
BlockDiagonalElement covariance_with(const TracialMap& map, const BlockDiagonalElement& f_rho,
                                     const BlockDiagonalElement& g_rho,
                                     const BlockDiagonalElement& a,
                                     const BlockDiagonalElement& b);
BlockDiagonalElement correlation_with(const TracialMap& map, const BlockDiagonalElement& f_rho,
                                      const BlockDiagonalElement& g_rho,
                                      const BlockDiagonalElement& a,
                                      const BlockDiagonalElement& b);

// Eigenprojections of a Hermitian element, grouped by eigenvalue cluster;
// sum of projections is the identity.
struct EigenProjection {
    double eigenvalue;  // cluster mean
    BlockDiagonalElement projection;
};
std::vector<EigenProjection> eigenprojections(const BlockDiagonalElement& rho);

}  // namespace qitineq
