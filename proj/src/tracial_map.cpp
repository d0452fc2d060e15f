#include "qitineq/tracial_map.hpp"

#include <algorithm>
#include <cmath>

namespace qitineq {

std::string map_kind_name(MapKind kind) {
    switch (kind) {
        case MapKind::scalar_trace: return "scalar_trace";
        case MapKind::block_trace: return "block_trace";
        case MapKind::center_expectation: return "center_expectation";
        case MapKind::doubling: return "doubling";
    }
    throw WrongKind("map_kind_name: invalid kind");
}

MapKind map_kind_from_name(const std::string& name) {
    if (name == "scalar_trace") return MapKind::scalar_trace;
    if (name == "block_trace") return MapKind::block_trace;
    if (name == "center_expectation") return MapKind::center_expectation;
    if (name == "doubling") return MapKind::doubling;
    throw ParseError("unknown map kind: " + name);
}

TracialMap TracialMap::scalar_trace(AlgebraShape domain) {
    domain.validate();
    return {MapKind::scalar_trace, domain, AlgebraShape{{1}}, AlgebraShape{{1}}, nullptr};
}

TracialMap TracialMap::block_trace(AlgebraShape domain) {
    domain.validate();
    AlgebraShape codomain{std::vector<std::size_t>(domain.block_count(), 1)};
    return {MapKind::block_trace, domain, codomain, codomain, nullptr};
}

TracialMap TracialMap::center_expectation(AlgebraShape domain) {
    domain.validate();
    return {MapKind::center_expectation, domain, domain, domain, nullptr};
}

TracialMap TracialMap::doubling(TracialMap inner) {
    AlgebraShape domain, codomain;
    for (std::size_t n : inner.domain_shape().block_dims) domain.block_dims.push_back(2 * n);
    for (std::size_t m : inner.codomain_shape().block_dims)
        codomain.block_dims.push_back(2 * m);
    domain.validate();
    codomain.validate();
    AlgebraShape effective = inner.effective_codomain_shape();
    return {MapKind::doubling, std::move(domain), std::move(codomain), std::move(effective),
            std::make_shared<const TracialMap>(std::move(inner))};
}

TracialMap TracialMap::make(MapKind kind, AlgebraShape domain) {
    switch (kind) {
        case MapKind::scalar_trace: return scalar_trace(std::move(domain));
        case MapKind::block_trace: return block_trace(std::move(domain));
        case MapKind::center_expectation: return center_expectation(std::move(domain));
        case MapKind::doubling: return doubling(scalar_trace(std::move(domain)));
    }
    throw WrongKind("TracialMap::make: invalid kind");
}

const TracialMap& TracialMap::inner() const {
    if (!inner_) throw WrongKind("TracialMap::inner: map has no inner map");
    return *inner_;
}

namespace {

// Split a doubled block element [[A,B],[C,D]] into its diagonal corners.
std::pair<BlockDiagonalElement, BlockDiagonalElement> doubling_corners(
    const AlgebraShape& inner_domain, const BlockDiagonalElement& x) {
    std::vector<ComplexMatrix> tops, bottoms;
    for (std::size_t i = 0; i < inner_domain.block_count(); ++i) {
        const std::size_t n = inner_domain.block_dims[i];
        const ComplexMatrix& blk = x.block(i);
        ComplexMatrix top(n, n), bottom(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                top(r, c) = blk(r, c);
                bottom(r, c) = blk(n + r, n + c);
            }
        tops.push_back(std::move(top));
        bottoms.push_back(std::move(bottom));
    }
    return {BlockDiagonalElement(inner_domain, std::move(tops)),
            BlockDiagonalElement(inner_domain, std::move(bottoms))};
}

}  // namespace

BlockDiagonalElement TracialMap::apply(const BlockDiagonalElement& x) const {
    if (!(x.shape() == domain_)) throw ShapeMismatch("apply_map: element shape mismatch");
    switch (kind_) {
        case MapKind::scalar_trace: {
            ComplexMatrix m(1, 1);
            m(0, 0) = x.trace();
            return {codomain_, {m}};
        }
        case MapKind::block_trace: {
            std::vector<ComplexMatrix> blocks;
            for (const auto& b : x.blocks()) {
                ComplexMatrix m(1, 1);
                m(0, 0) = b.trace();
                blocks.push_back(std::move(m));
            }
            return {codomain_, std::move(blocks)};
        }
        case MapKind::center_expectation: {
            std::vector<ComplexMatrix> blocks;
            for (const auto& b : x.blocks()) {
                const std::size_t n = b.rows();
                ComplexMatrix m = ComplexMatrix::identity(n) * (b.trace() / cplx(double(n)));
                blocks.push_back(std::move(m));
            }
            return {codomain_, std::move(blocks)};
        }
        case MapKind::doubling: {
            auto [top, bottom] = doubling_corners(inner_->domain_shape(), x);
            BlockDiagonalElement avg =
                (inner_->apply(top) + inner_->apply(bottom)) * cplx(0.5);
            std::vector<ComplexMatrix> blocks;
            for (std::size_t j = 0; j < avg.block_count(); ++j) {
                const std::size_t m = avg.block(j).rows();
                ComplexMatrix padded(2 * m, 2 * m);
                for (std::size_t r = 0; r < m; ++r)
                    for (std::size_t c = 0; c < m; ++c) padded(r, c) = avg.block(j)(r, c);
                blocks.push_back(std::move(padded));
            }
            return {codomain_, std::move(blocks)};
        }
    }
    throw WrongKind("apply_map: invalid kind");
}

BlockDiagonalElement TracialMap::apply_effective(const BlockDiagonalElement& x) const {
    if (kind_ != MapKind::doubling) return apply(x);
    if (!(x.shape() == domain_)) throw ShapeMismatch("apply_map: element shape mismatch");
    auto [top, bottom] = doubling_corners(inner_->domain_shape(), x);
    return (inner_->apply_effective(top) + inner_->apply_effective(bottom)) * cplx(0.5);
}

DensityElement normalize_density(const TracialMap& phi, const BlockDiagonalElement& p,
                                 double floor) {
    if (!(p.shape() == phi.domain_shape()))
        throw ShapeMismatch("normalize_density: element shape mismatch");
    if (p.hermiticity_defect() > 1e-10 * std::max(1.0, p.frobenius_norm()))
        throw NotHermitian("normalize_density: element not Hermitian");

    auto block_trace_of = [](const ComplexMatrix& b) { return b.trace().real(); };

    switch (phi.kind()) {
        case MapKind::scalar_trace: {
            double t = p.trace().real();
            if (t < floor) throw DegenerateBlock("normalize_density: total trace below floor");
            return {p * cplx(1.0 / t), phi};
        }
        case MapKind::block_trace: {
            std::vector<ComplexMatrix> blocks;
            for (const auto& b : p.blocks()) {
                double t = block_trace_of(b);
                if (t < floor)
                    throw DegenerateBlock("normalize_density: block trace below floor");
                blocks.push_back(b * cplx(1.0 / t));
            }
            return {BlockDiagonalElement(p.shape(), std::move(blocks)), phi};
        }
        case MapKind::center_expectation: {
            std::vector<ComplexMatrix> blocks;
            for (const auto& b : p.blocks()) {
                double t = block_trace_of(b);
                if (t < floor)
                    throw DegenerateBlock("normalize_density: block trace below floor");
                blocks.push_back(b * cplx(double(b.rows()) / t));
            }
            return {BlockDiagonalElement(p.shape(), std::move(blocks)), phi};
        }
        case MapKind::doubling: {
            const TracialMap& inner = phi.inner();
            if (inner.kind() == MapKind::scalar_trace) {
                double t = 0.5 * p.trace().real();
                if (t < floor)
                    throw DegenerateBlock("normalize_density: total trace below floor");
                return {p * cplx(1.0 / t), phi};
            }
            if (inner.kind() == MapKind::block_trace) {
                std::vector<ComplexMatrix> blocks;
                for (const auto& b : p.blocks()) {
                    double t = 0.5 * block_trace_of(b);
                    if (t < floor)
                        throw DegenerateBlock("normalize_density: block trace below floor");
                    blocks.push_back(b * cplx(1.0 / t));
                }
                return {BlockDiagonalElement(p.shape(), std::move(blocks)), phi};
            }
            throw WrongKind("normalize_density: unsupported inner map for doubling");
        }
    }
    throw WrongKind("normalize_density: invalid kind");
}

MarginReport kadison_check(const TracialMap& phi, const BlockDiagonalElement& a,
                           const BlockDiagonalElement& b) {
    const double bscale = std::max(1.0, b.frobenius_norm());
    if (b.hermiticity_defect() > 1e-10 * bscale)
        throw NotHermitian("kadison_check: B not Hermitian");
    if (element_min_eigenvalue(b.hermitized()) <= 1e-10 * bscale)
        throw SingularB("kadison_check: B not strictly positive");

    BlockDiagonalElement binv = element_inverse_strictly_positive(b.hermitized());
    BlockDiagonalElement lhs = phi.apply_effective(a.adjoint() * binv * a);
    BlockDiagonalElement phi_a = phi.apply_effective(a);
    BlockDiagonalElement phi_b_inv =
        element_inverse_strictly_positive(phi.apply_effective(b).hermitized());
    BlockDiagonalElement rhs = phi_a.adjoint() * phi_b_inv * phi_a;
    BlockDiagonalElement diff = (lhs - rhs).hermitized();

    MarginReport report;
    report.check_id = "kadison";
    report.scale = diff.frobenius_norm();
    report.add_margin("kadison", element_normalized_min_eigenvalue(diff));
    report.finalize();
    return report;
}

std::pair<TracialMap, TracialMap> factorize_block_trace(const TracialMap& phi) {
    if (phi.kind() != MapKind::block_trace)
        throw WrongKind("factorize_block_trace: map is not a block trace");
    TracialMap phi1 = TracialMap::block_trace(phi.domain_shape());
    // identity embedding of the commutative algebra (1,...,1) into itself
    TracialMap phi2 = TracialMap::center_expectation(phi1.codomain_shape());
    return {std::move(phi1), std::move(phi2)};
}

}  // namespace qitineq
