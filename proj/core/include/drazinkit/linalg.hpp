#pragma once

#include <cstddef>
#include <vector>

#include "drazinkit/matrix.hpp"

namespace drazinkit {

// Exact kernel: Gauss-Jordan elimination over Q(i); tolerances are ignored.
// Float kernel: column-pivoted Householder QR; a diagonal entry r_kk of R
// counts toward the rank iff |r_kk| > tol.abs + tol.rel * |r_00|.

std::size_t rank(const ExactMatrix& a, Tolerance tol = Tolerance::rank_default());
std::size_t rank(const FloatMatrix& a, Tolerance tol = Tolerance::rank_default());

/// Columns form a basis of ker(a). Orthonormal in the float kernel.
ExactMatrix nullspace_basis(const ExactMatrix& a, Tolerance tol = Tolerance::rank_default());
FloatMatrix nullspace_basis(const FloatMatrix& a, Tolerance tol = Tolerance::rank_default());

/// Columns form a basis of range(a). Orthonormal in the float kernel; the
/// pivot columns of `a` in the exact kernel.
ExactMatrix columnspace_basis(const ExactMatrix& a, Tolerance tol = Tolerance::rank_default());
FloatMatrix columnspace_basis(const FloatMatrix& a, Tolerance tol = Tolerance::rank_default());

/// Solves a * x = b for square invertible `a`.
ExactMatrix solve(const ExactMatrix& a, const ExactMatrix& b, Tolerance tol = Tolerance::rank_default());
FloatMatrix solve(const FloatMatrix& a, const FloatMatrix& b, Tolerance tol = Tolerance::rank_default());

/// Throws Error(SingularMatrix) when `a` is rank deficient.
template <KernelScalar T>
Matrix<T> inverse(const Matrix<T>& a, Tolerance tol = Tolerance::rank_default()) {
  if (!a.square()) throw Error(ErrorCode::ShapeMismatch, "inverse of " + a.shape());
  return solve(a, Matrix<T>::identity(a.rows()), tol);
}

/// Largest singular value (full Jacobi SVD). Float kernel only.
double operator_norm_estimate(const FloatMatrix& a);
/// Always throws Error(ExactKernelUnsupported): the exact 2-norm is irrational.
double operator_norm_estimate(const ExactMatrix& a);

/// 2-norm condition number sigma_max / sigma_min; +inf when singular.
double condition_estimate(const FloatMatrix& a);

/// Coefficients c_0..c_n of det(t I - a) = sum c_k t^k (c_n = 1), by
/// Faddeev-LeVerrier. Exact in the exact kernel.
std::vector<Gaussian> characteristic_polynomial(const ExactMatrix& a);
std::vector<Complex> characteristic_polynomial(const FloatMatrix& a);

struct EigenDecomposition {
  std::vector<Complex> values;  // sorted by (magnitude, phase)
  FloatMatrix vectors;          // column k pairs with values[k]
};

/// Complex Schur based eigensolver. Throws Error(EigenFailure) on
/// non-convergence.
EigenDecomposition eigendecompose(const FloatMatrix& a);

std::vector<Complex> eigenvalues(const FloatMatrix& a);

}  // namespace drazinkit
