#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "qitineq/complex_matrix.hpp"
#include "qitineq/eig.hpp"

namespace qitineq {

// A finite-dimensional C*-algebra, fixed as the block-diagonal family
// M_{n1} (+) ... (+) M_{nk}.
struct AlgebraShape {
    std::vector<std::size_t> block_dims;

    std::size_t block_count() const { return block_dims.size(); }
    std::size_t total_dim() const;
    bool operator==(const AlgebraShape&) const = default;

    void validate() const;  // k >= 1, total dimension <= 32
};

// An element of the block-diagonal algebra; block i is n_i x n_i.
class BlockDiagonalElement {
public:
    BlockDiagonalElement() = default;
    BlockDiagonalElement(AlgebraShape shape, std::vector<ComplexMatrix> blocks);

    static BlockDiagonalElement zero(const AlgebraShape& shape);
    static BlockDiagonalElement identity(const AlgebraShape& shape);

    const AlgebraShape& shape() const { return shape_; }
    const std::vector<ComplexMatrix>& blocks() const { return blocks_; }
    const ComplexMatrix& block(std::size_t i) const { return blocks_[i]; }
    std::size_t block_count() const { return blocks_.size(); }

    BlockDiagonalElement adjoint() const;
    double frobenius_norm() const;
    double hermiticity_defect() const;
    BlockDiagonalElement hermitized() const;
    cplx trace() const;  // sum of block traces

    // Full dense realization (direct sum), for positivity checks.
    ComplexMatrix to_dense() const;

    // Blockwise map over all blocks.
    BlockDiagonalElement map_blocks(
        const std::function<ComplexMatrix(const ComplexMatrix&)>& fn) const;

    BlockDiagonalElement operator+(const BlockDiagonalElement& o) const;
    BlockDiagonalElement operator-(const BlockDiagonalElement& o) const;
    BlockDiagonalElement operator*(const BlockDiagonalElement& o) const;
    BlockDiagonalElement operator*(cplx s) const;
    BlockDiagonalElement operator-() const;

    bool operator==(const BlockDiagonalElement& o) const = default;

private:
    AlgebraShape shape_;
    std::vector<ComplexMatrix> blocks_;
};

inline BlockDiagonalElement operator*(cplx s, const BlockDiagonalElement& x) { return x * s; }
inline BlockDiagonalElement operator*(double s, const BlockDiagonalElement& x) {
    return x * cplx(s, 0.0);
}

// Eigenvalues of a Hermitian element, ascending across all blocks.
std::vector<double> element_eigenvalues(const BlockDiagonalElement& x);

double element_min_eigenvalue(const BlockDiagonalElement& x);
double element_max_eigenvalue(const BlockDiagonalElement& x);
double element_normalized_min_eigenvalue(const BlockDiagonalElement& x);

// Spectral calculus applied block by block.
BlockDiagonalElement element_apply_function(const BlockDiagonalElement& x,
                                            const ScalarFunction& f);
BlockDiagonalElement element_apply_pointwise(const BlockDiagonalElement& x,
                                             const std::function<double(double)>& fn);
BlockDiagonalElement element_inverse_strictly_positive(const BlockDiagonalElement& x);

BlockDiagonalElement element_real_part(const BlockDiagonalElement& x);
BlockDiagonalElement element_commutator(const BlockDiagonalElement& a,
                                        const BlockDiagonalElement& b);

// Dense [[P, Q], [Q*, S]] over the element's ambient dimension; P, Q, S must
// share one shape. Used to test positivity of 2x2 operator matrices over a
// codomain algebra.
ComplexMatrix assemble_element_block_2x2(const BlockDiagonalElement& p,
                                         const BlockDiagonalElement& q,
                                         const BlockDiagonalElement& qadj,
                                         const BlockDiagonalElement& s);

}  // namespace qitineq
