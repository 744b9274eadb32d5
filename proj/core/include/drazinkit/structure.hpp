#pragma once

#include "drazinkit/classify.hpp"
#include "drazinkit/drazin.hpp"

namespace drazinkit {

enum class SimilarityTarget { DrazinInverse, Operator };

/// Witness that A_d = S^{-1} N S with N normal.
template <KernelScalar T>
struct SimilarityCertificate {
  Matrix<T> S;
  Matrix<T> N;
  SimilarityTarget target = SimilarityTarget::DrazinInverse;
  double residual = 0.0;          // |S A_d S^{-1} - N| / |N|
  double basis_condition = 1.0;   // condition of the core eigenvector matrix
};

/// Adjoint of an operator on span(B) written in the (possibly
/// non-orthonormal) basis B: G^{-1} X^* G with G = B^* B.
template <KernelScalar T>
Matrix<T> adjoint_in_basis(const Matrix<T>& x, const Matrix<T>& basis);

/// Verdicts "operator_dn" (A in [(n,m)DN]), "core_dn" (the core block, with
/// its adjoint taken in the core subspace), "orthogonal_splitting" and
/// "equivalent": operator_dn <=> (orthogonal_splitting && core_dn).
template <KernelScalar T>
Report core_restriction_equivalence(const Matrix<T>& a, const ClassQuery& q);

/// Float kernel: diagonalizes the core block T1 = V D V^{-1} and returns
/// S = (V^{-1} (+) I) W^{-1}, N = D^{-1} (+) 0. Exact kernel: only when A_d is
/// already normal (S = I, N = A_d), otherwise Error(ExactKernelUnsupported).
/// Throws Error(NotInClass) if A is not in the class, Error(EigenFailure) if
/// the eigensolver fails or V is numerically singular (condition > 1e12).
template <KernelScalar T>
SimilarityCertificate<T> similarity_to_normal(const Matrix<T>& a, const ClassQuery& q);
template <>
SimilarityCertificate<Gaussian> similarity_to_normal(const ExactMatrix& a, const ClassQuery& q);
template <>
SimilarityCertificate<Complex> similarity_to_normal(const FloatMatrix& a, const ClassQuery& q);

/// Independent check of a certificate against A_d: verdicts "equation"
/// (S A_d S^{-1} = N) and "normal" (N normal).
template <KernelScalar T>
Report verify_certificate(const Matrix<T>& dinv, const SimilarityCertificate<T>& cert, Tolerance tol);

/// For A in [(n,m)DN] that is an m-partial isometry and a contraction:
/// verdicts "core_unitary", "dn_1_1", "orthogonal_splitting" and "shift"
/// (A in [(m+n,m)DN]). Throws Error(NotInClass) when a hypothesis fails.
template <KernelScalar T>
Report partial_isometry_structure(const Matrix<T>& a, const ClassQuery& q);

}  // namespace drazinkit
