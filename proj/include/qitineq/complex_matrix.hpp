#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "qitineq/errors.hpp"

namespace qitineq {

using cplx = std::complex<double>;

// Dense row-major complex matrix. Values are immutable by convention once
// built; all operations return fresh matrices.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, cplx(0.0, 0.0)) {}

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }
    static ComplexMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    std::size_t size() const { return data_.size(); }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    ComplexMatrix adjoint() const;
    cplx trace() const;
    double frobenius_norm() const;
    // ||M - M*||_F, the asymmetry used by Hermiticity gates
    double hermiticity_defect() const;
    bool all_finite() const;

    // (M + M*)/2
    ComplexMatrix hermitized() const;

    ComplexMatrix operator+(const ComplexMatrix& o) const;
    ComplexMatrix operator-(const ComplexMatrix& o) const;
    ComplexMatrix operator*(const ComplexMatrix& o) const;
    ComplexMatrix operator*(cplx s) const;
    ComplexMatrix operator-() const;

    bool operator==(const ComplexMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

inline ComplexMatrix operator*(cplx s, const ComplexMatrix& m) { return m * s; }
inline ComplexMatrix operator*(double s, const ComplexMatrix& m) { return m * cplx(s, 0.0); }

// AB - BA; for Hermitian inputs the result is skew-Hermitian.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

// (A + A*)/2 and (A - A*)/(2i); A = Re(A) + i Im(A).
ComplexMatrix real_part(const ComplexMatrix& a);
ComplexMatrix imag_part(const ComplexMatrix& a);

}  // namespace qitineq
