#pragma once

#include <cstddef>

#include "drazinkit/matrix.hpp"
#include "drazinkit/report.hpp"

namespace drazinkit {

/// The Drazin inverse A_d of a square A together with its index p and the
/// spectral idempotent E = I - A A_d (projection onto ker(A^p) along
/// range(A^p)).
template <KernelScalar T>
struct DrazinData {
  std::size_t index = 0;
  Matrix<T> dinv;
  Matrix<T> idempotent;
};

/// Core-nilpotent splitting basis^{-1} * A * basis = core (+) nil.
///
/// The first `core_dim` columns of `basis` span range(A^p), the remaining ones
/// span ker(A^p). `core` is invertible and nil^p = 0.
template <KernelScalar T>
struct Decomposition {
  Matrix<T> basis;
  Matrix<T> basis_inverse;
  Matrix<T> core;
  Matrix<T> nil;
  std::size_t core_dim = 0;
  std::size_t index = 0;

  Matrix<T> core_columns() const { return basis.block(0, 0, basis.rows(), core_dim); }
  Matrix<T> nil_columns() const { return basis.block(0, core_dim, basis.rows(), basis.cols() - core_dim); }
};

/// Smallest k >= 0 with rank(A^k) == rank(A^{k+1}), rank(A^0) = n.
/// Zero exactly when A is invertible.
template <KernelScalar T>
std::size_t drazin_index(const Matrix<T>& a, Tolerance tol = Tolerance::rank_default());

/// Throws Error(IllConditionedBasis) in the float kernel when the assembled
/// basis has a 2-norm condition number above 1e12.
template <KernelScalar T>
Decomposition<T> core_nilpotent(const Matrix<T>& a, Tolerance tol = Tolerance::rank_default());

template <KernelScalar T>
DrazinData<T> drazin_inverse(const Matrix<T>& a, Tolerance tol = Tolerance::rank_default());

/// A_d assembled from an arbitrary invertible basis whose first `core_dim`
/// columns span range(A^p) and the rest ker(A^p). The result does not depend
/// on which such basis is supplied.
template <KernelScalar T>
Matrix<T> drazin_from_basis(const Matrix<T>& a, const Matrix<T>& basis, std::size_t core_dim,
                            Tolerance tol = Tolerance::rank_default());

/// Residuals of A A_d = A_d A ("commutation"), A_d^2 A = A_d ("inner"),
/// A^{p+1} A_d = A^p ("eventual") and E^2 = E ("idempotent").
template <KernelScalar T>
Report verify_drazin_axioms(const Matrix<T>& a, const DrazinData<T>& data,
                            Tolerance tol = Tolerance::verdict_default());

/// Smallest k with N^k = 0 (0 for an empty matrix). Throws
/// Error(InvalidArgument) if N is not nilpotent.
template <KernelScalar T>
std::size_t nilpotency_order(const Matrix<T>& n, Tolerance tol = Tolerance::verdict_default());

/// Verdict "orthogonal_splitting": range(A^p) is orthogonal to ker(A^p),
/// i.e. B_core^* B_nil = 0 for the decomposition's basis.
template <KernelScalar T>
Report check_orthogonal_splitting(const Decomposition<T>& d, Tolerance tol = Tolerance::verdict_default());

}  // namespace drazinkit
