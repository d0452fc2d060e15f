#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "qitineq/complex_matrix.hpp"
#include "qitineq/functions.hpp"

namespace qitineq {

// Spectral decomposition of a Hermitian matrix: M = U diag(eigenvalues) U*,
// eigenvalues ascending, eigenvector i in column i of `eigenvectors`.
struct HermitianSpectrum {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;

    ComplexMatrix reconstruct() const;
};

// Cyclic complex Jacobi eigensolver. Inputs within 1e-10 (relative) of
// Hermitian are symmetrized first; larger asymmetry throws NotHermitian.
// Convergence: off-diagonal Frobenius mass <= 1e-12 * ||M||_F within 100
// sweeps, else NoConvergence.
HermitianSpectrum eig_hermitian(const ComplexMatrix& m);

double min_eigenvalue(const ComplexMatrix& m);
double max_eigenvalue(const ComplexMatrix& m);

// lambda_min(M) >= -tol * max(1, ||M||_F)
bool is_psd(const ComplexMatrix& m, double tol = 1e-9);

// U diag(fn(lambda_i)) U* for an arbitrary scalar map of the spectrum.
ComplexMatrix apply_pointwise(const ComplexMatrix& m,
                              const std::function<double(double)>& fn);

// Spectral calculus f(M); every eigenvalue must lie in f's domain.
ComplexMatrix apply_function(const ComplexMatrix& m, const ScalarFunction& f);

// Inverse of a strictly positive Hermitian matrix
// (lambda_min > 1e-10 * max(1, ||M||_F), else SingularB).
ComplexMatrix inverse_strictly_positive(const ComplexMatrix& m);

// [[A, X], [X*, B]] over plain matrices.
ComplexMatrix assemble_block_2x2(const ComplexMatrix& a, const ComplexMatrix& x,
                                 const ComplexMatrix& xadj, const ComplexMatrix& b);

// Schur complement positivity test: margin = normalized lambda_min of
// A - X B^{-1} X*; B must be strictly positive.
std::pair<bool, double> schur_psd_check(const ComplexMatrix& a, const ComplexMatrix& x,
                                        const ComplexMatrix& b);

// lambda_min(M) / max(1, ||M||_F), the universal positivity margin.
double normalized_min_eigenvalue(const ComplexMatrix& m);

}  // namespace qitineq
