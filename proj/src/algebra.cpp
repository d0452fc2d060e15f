#include "qitineq/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qitineq {

std::size_t AlgebraShape::total_dim() const {
    return std::accumulate(block_dims.begin(), block_dims.end(), std::size_t{0});
}

void AlgebraShape::validate() const {
    if (block_dims.empty()) throw ShapeMismatch("AlgebraShape: no blocks");
    for (std::size_t n : block_dims)
        if (n == 0) throw ShapeMismatch("AlgebraShape: zero block dimension");
    if (total_dim() > 32) throw ShapeMismatch("AlgebraShape: total dimension exceeds 32");
}

BlockDiagonalElement::BlockDiagonalElement(AlgebraShape shape,
                                           std::vector<ComplexMatrix> blocks)
    : shape_(std::move(shape)), blocks_(std::move(blocks)) {
    shape_.validate();
    if (blocks_.size() != shape_.block_count())
        throw ShapeMismatch("BlockDiagonalElement: block count mismatch");
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (blocks_[i].rows() != shape_.block_dims[i] ||
            blocks_[i].cols() != shape_.block_dims[i])
            throw ShapeMismatch("BlockDiagonalElement: block size mismatch");
        if (!blocks_[i].all_finite())
            throw ShapeMismatch("BlockDiagonalElement: non-finite entry");
    }
}

BlockDiagonalElement BlockDiagonalElement::zero(const AlgebraShape& shape) {
    std::vector<ComplexMatrix> blocks;
    for (std::size_t n : shape.block_dims) blocks.push_back(ComplexMatrix::zero(n, n));
    return {shape, std::move(blocks)};
}

BlockDiagonalElement BlockDiagonalElement::identity(const AlgebraShape& shape) {
    std::vector<ComplexMatrix> blocks;
    for (std::size_t n : shape.block_dims) blocks.push_back(ComplexMatrix::identity(n));
    return {shape, std::move(blocks)};
}

BlockDiagonalElement BlockDiagonalElement::adjoint() const {
    return map_blocks([](const ComplexMatrix& b) { return b.adjoint(); });
}

double BlockDiagonalElement::frobenius_norm() const {
    double s = 0.0;
    for (const auto& b : blocks_) {
        double f = b.frobenius_norm();
        s += f * f;
    }
    return std::sqrt(s);
}

double BlockDiagonalElement::hermiticity_defect() const {
    double s = 0.0;
    for (const auto& b : blocks_) {
        double d = b.hermiticity_defect();
        s += d * d;
    }
    return std::sqrt(s);
}

BlockDiagonalElement BlockDiagonalElement::hermitized() const {
    return map_blocks([](const ComplexMatrix& b) { return b.hermitized(); });
}

cplx BlockDiagonalElement::trace() const {
    cplx t = 0.0;
    for (const auto& b : blocks_) t += b.trace();
    return t;
}

ComplexMatrix BlockDiagonalElement::to_dense() const {
    const std::size_t d = shape_.total_dim();
    ComplexMatrix out(d, d);
    std::size_t off = 0;
    for (const auto& b : blocks_) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) out(off + i, off + j) = b(i, j);
        off += b.rows();
    }
    return out;
}

BlockDiagonalElement BlockDiagonalElement::map_blocks(
    const std::function<ComplexMatrix(const ComplexMatrix&)>& fn) const {
    std::vector<ComplexMatrix> blocks;
    blocks.reserve(blocks_.size());
    for (const auto& b : blocks_) blocks.push_back(fn(b));
    return {shape_, std::move(blocks)};
}

namespace {
void require_same_shape(const BlockDiagonalElement& a, const BlockDiagonalElement& b) {
    if (!(a.shape() == b.shape()))
        throw ShapeMismatch("BlockDiagonalElement: shape mismatch");
}
}  // namespace

BlockDiagonalElement BlockDiagonalElement::operator+(const BlockDiagonalElement& o) const {
    require_same_shape(*this, o);
    std::vector<ComplexMatrix> blocks;
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks.push_back(blocks_[i] + o.blocks_[i]);
    return {shape_, std::move(blocks)};
}

BlockDiagonalElement BlockDiagonalElement::operator-(const BlockDiagonalElement& o) const {
    require_same_shape(*this, o);
    std::vector<ComplexMatrix> blocks;
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks.push_back(blocks_[i] - o.blocks_[i]);
    return {shape_, std::move(blocks)};
}

BlockDiagonalElement BlockDiagonalElement::operator*(const BlockDiagonalElement& o) const {
    require_same_shape(*this, o);
    std::vector<ComplexMatrix> blocks;
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks.push_back(blocks_[i] * o.blocks_[i]);
    return {shape_, std::move(blocks)};
}

BlockDiagonalElement BlockDiagonalElement::operator*(cplx s) const {
    return map_blocks([&](const ComplexMatrix& b) { return b * s; });
}

BlockDiagonalElement BlockDiagonalElement::operator-() const {
    return map_blocks([](const ComplexMatrix& b) { return -b; });
}

std::vector<double> element_eigenvalues(const BlockDiagonalElement& x) {
    std::vector<double> all;
    for (const auto& b : x.blocks()) {
        auto spec = eig_hermitian(b);
        all.insert(all.end(), spec.eigenvalues.begin(), spec.eigenvalues.end());
    }
    std::sort(all.begin(), all.end());
    return all;
}

double element_min_eigenvalue(const BlockDiagonalElement& x) {
    return element_eigenvalues(x).front();
}

double element_max_eigenvalue(const BlockDiagonalElement& x) {
    return element_eigenvalues(x).back();
}

double element_normalized_min_eigenvalue(const BlockDiagonalElement& x) {
    return element_min_eigenvalue(x) / std::max(1.0, x.frobenius_norm());
}

BlockDiagonalElement element_apply_function(const BlockDiagonalElement& x,
                                            const ScalarFunction& f) {
    return x.map_blocks([&](const ComplexMatrix& b) { return apply_function(b, f); });
}

BlockDiagonalElement element_apply_pointwise(const BlockDiagonalElement& x,
                                             const std::function<double(double)>& fn) {
    return x.map_blocks([&](const ComplexMatrix& b) { return apply_pointwise(b, fn); });
}

BlockDiagonalElement element_inverse_strictly_positive(const BlockDiagonalElement& x) {
    // strict positivity is a property of the whole element, not per block
    const double scale = std::max(1.0, x.frobenius_norm());
    if (element_min_eigenvalue(x.hermitized()) <= 1e-10 * scale)
        throw SingularB("element inverse: not strictly positive");
    return x.map_blocks(
        [&](const ComplexMatrix& b) { return inverse_strictly_positive(b); });
}

BlockDiagonalElement element_real_part(const BlockDiagonalElement& x) {
    return x.map_blocks([](const ComplexMatrix& b) { return real_part(b); });
}

BlockDiagonalElement element_commutator(const BlockDiagonalElement& a,
                                        const BlockDiagonalElement& b) {
    return a * b - b * a;
}

ComplexMatrix assemble_element_block_2x2(const BlockDiagonalElement& p,
                                         const BlockDiagonalElement& q,
                                         const BlockDiagonalElement& qadj,
                                         const BlockDiagonalElement& s) {
    return assemble_block_2x2(p.to_dense(), q.to_dense(), qadj.to_dense(), s.to_dense());
}

}  // namespace qitineq
