#pragma once

#include <memory>
#include <string>

#include "qitineq/algebra.hpp"
#include "qitineq/report.hpp"

namespace qitineq {

enum class MapKind { scalar_trace, block_trace, center_expectation, doubling };

std::string map_kind_name(MapKind kind);
MapKind map_kind_from_name(const std::string& name);

// Descriptor of a tracial positive linear map Phi on the block-diagonal
// algebra of `domain_shape`:
//   scalar_trace        X -> [sum_i Tr(X_i)]                 codomain (1)
//   block_trace         X -> diag(Tr(X_1), ..., Tr(X_k))     codomain (1,...,1)
//   center_expectation  X -> (+)_i (Tr(X_i)/n_i) I_{n_i}     codomain = domain
//   doubling            [[A,B],[C,D]] -> [[(Phi(A)+Phi(D))/2, 0],[0,0]]
// The doubling map lives on M_2 over its inner map's domain, realized as
// blocks of doubled dimension.
class TracialMap {
public:
    static TracialMap scalar_trace(AlgebraShape domain);
    static TracialMap block_trace(AlgebraShape domain);
    static TracialMap center_expectation(AlgebraShape domain);
    static TracialMap doubling(TracialMap inner);

    static TracialMap make(MapKind kind, AlgebraShape domain);

    MapKind kind() const { return kind_; }
    const AlgebraShape& domain_shape() const { return domain_; }
    // Codomain of the literal apply(); for doubling this is the padded
    // M_2-over-inner-codomain shape.
    const AlgebraShape& codomain_shape() const { return codomain_; }
    // Codomain of apply_effective(); differs from codomain_shape() only for
    // doubling, where the padded lower-right zero corner is dropped so the
    // map output can be strictly positive.
    const AlgebraShape& effective_codomain_shape() const { return effective_codomain_; }

    const TracialMap& inner() const;

    BlockDiagonalElement apply(const BlockDiagonalElement& x) const;
    // Same map with the doubling zero-padding removed: for doubling returns
    // (Phi(A) + Phi(D))/2 in the inner codomain, itself a tracial positive
    // map; identical to apply() for the other kinds. All measure and checker
    // arithmetic uses this route.
    BlockDiagonalElement apply_effective(const BlockDiagonalElement& x) const;

    bool has_commutative_range() const {
        return kind_ == MapKind::scalar_trace || kind_ == MapKind::block_trace;
    }

private:
    TracialMap(MapKind kind, AlgebraShape domain, AlgebraShape codomain,
               AlgebraShape effective_codomain, std::shared_ptr<const TracialMap> inner)
        : kind_(kind),
          domain_(std::move(domain)),
          codomain_(std::move(codomain)),
          effective_codomain_(std::move(effective_codomain)),
          inner_(std::move(inner)) {}

    MapKind kind_;
    AlgebraShape domain_;
    AlgebraShape codomain_;
    AlgebraShape effective_codomain_;
    std::shared_ptr<const TracialMap> inner_;
};

// A Phi-density: Hermitian PSD rho with Phi(rho) = I (effective codomain).
struct DensityElement {
    BlockDiagonalElement rho;
    TracialMap map;
};

// Scales a PSD element so that Phi(rho) = I. Blocks whose trace falls below
// `floor` are rejected (DegenerateBlock).
DensityElement normalize_density(const TracialMap& phi, const BlockDiagonalElement& p,
                                 double floor = 1e-8);

// Kadison-type inequality Phi(A* B^{-1} A) >= Phi(A)* Phi(B)^{-1} Phi(A)
// for strictly positive B.
MarginReport kadison_check(const TracialMap& phi, const BlockDiagonalElement& a,
                           const BlockDiagonalElement& b);

// Factorization of a blockwise trace through a commutative algebra:
// phi1 = the same blockwise trace onto (1,...,1), phi2 = identity embedding.
std::pair<TracialMap, TracialMap> factorize_block_trace(const TracialMap& phi);

}  // namespace qitineq
