#include "drazinkit/structure.hpp"

#include <cmath>

#include "drazinkit/linalg.hpp"

namespace drazinkit {

namespace {

constexpr double kMaxEigenvectorCondition = 1e12;

}  // namespace

template <KernelScalar T>
Matrix<T> adjoint_in_basis(const Matrix<T>& x, const Matrix<T>& basis) {
  const Matrix<T> gram = adjoint(basis) * basis;
  return solve(gram, adjoint(x) * gram);
}

template <KernelScalar T>
Report core_restriction_equivalence(const Matrix<T>& a, const ClassQuery& q) {
  const Decomposition<T> d = core_nilpotent(a, Tolerance::rank_default());
  const Matrix<T> dinv = drazin_from_basis(a, d.basis, d.core_dim);

  Report r(kernel_of_v<T>);
  r.merge(is_dn(a, dinv, q), "operator_");

  // [T1^{-n}, (T1^#)^m] with T1^# the adjoint inside range(A^p).
  const Matrix<T> core_inv_n = power(inverse(d.core), q.n);
  const Matrix<T> core_adj_m = power(adjoint_in_basis(d.core, d.core_columns()), q.m);
  const double scale = frobenius_norm(core_inv_n) * frobenius_norm(core_adj_m);
  r.check("core_dn", commutator(core_inv_n, core_adj_m), scale, q.tol);
  r.merge(check_orthogonal_splitting(d, q.tol), "");

  const bool rhs = r.verdict("orthogonal_splitting") && r.verdict("core_dn");
  r.flag("equivalent", r.verdict("operator_dn") == rhs);
  return r;
}

template <>
SimilarityCertificate<Complex> similarity_to_normal(const FloatMatrix& a, const ClassQuery& q) {
  const Decomposition<Complex> d = core_nilpotent(a, Tolerance::rank_default());
  const FloatMatrix dinv = drazin_from_basis(a, d.basis, d.core_dim);
  if (!is_dn(a, dinv, q).verdict("dn")) throw Error(ErrorCode::NotInClass, "operator is not in the requested class");

  const std::size_t n = a.rows();
  const std::size_t r = d.core_dim;
  const EigenDecomposition eig = eigendecompose(d.core);
  const double cond = condition_estimate(eig.vectors);
  if (!(cond <= kMaxEigenvectorCondition)) {
    throw Error(ErrorCode::EigenFailure, "core block is not numerically diagonalizable (condition " +
                                             std::to_string(cond) + ")");
  }

  FloatMatrix left = FloatMatrix::identity(n);
  left.set_block(0, 0, inverse(eig.vectors));
  SimilarityCertificate<Complex> cert;
  cert.S = left * d.basis_inverse;
  cert.N = FloatMatrix(n, n);
  for (std::size_t k = 0; k < r; ++k) cert.N(k, k) = 1.0 / eig.values[k];
  cert.basis_condition = cond;

  const double nn = frobenius_norm(cert.N);
  const double raw = frobenius_norm(cert.S * dinv * inverse(cert.S) - cert.N);
  cert.residual = nn > 0.0 ? raw / nn : raw;
  return cert;
}

template <>
SimilarityCertificate<Gaussian> similarity_to_normal(const ExactMatrix& a, const ClassQuery& q) {
  const ExactMatrix dinv = drazin_inverse(a).dinv;
  if (!is_dn(a, dinv, q).verdict("dn")) throw Error(ErrorCode::NotInClass, "operator is not in the requested class");
  if (!is_normal(dinv).verdict("normal")) {
    throw Error(ErrorCode::ExactKernelUnsupported,
                "A_d is not normal; diagonalizing it needs eigenvalues outside Q(i), use the float kernel");
  }
  SimilarityCertificate<Gaussian> cert;
  cert.S = ExactMatrix::identity(a.rows());
  cert.N = dinv;
  return cert;
}

template <KernelScalar T>
Report verify_certificate(const Matrix<T>& dinv, const SimilarityCertificate<T>& cert, Tolerance tol) {
  Report r(kernel_of_v<T>);
  const Matrix<T> lhs = cert.S * dinv * inverse(cert.S);
  r.check("equation", lhs - cert.N, frobenius_norm(cert.N), tol);
  r.merge(is_normal(cert.N, tol), "");
  return r;
}

template <KernelScalar T>
Report partial_isometry_structure(const Matrix<T>& a, const ClassQuery& q) {
  const Decomposition<T> d = core_nilpotent(a, Tolerance::rank_default());
  const Matrix<T> dinv = drazin_from_basis(a, d.basis, d.core_dim);
  if (!is_dn(a, dinv, q).verdict("dn")) throw Error(ErrorCode::NotInClass, "operator is not in the requested class");
  if (!is_m_partial_isometry(a, q.m, q.tol).verdict("m_partial_isometry")) {
    throw Error(ErrorCode::NotInClass, "operator is not an m-partial isometry");
  }
  if (!is_contraction(a, q.tol).verdict("contraction")) throw Error(ErrorCode::NotInClass, "operator is not a contraction");

  Report r(kernel_of_v<T>);
  // T1 unitary on range(A^p):  T1^* G T1 = G  with G the Gram matrix of the core basis.
  const Matrix<T> bc = d.core_columns();
  const Matrix<T> gram = adjoint(bc) * bc;
  const double ng = frobenius_norm(gram);
  const double nc = frobenius_norm(d.core);
  r.check("core_unitary", adjoint(d.core) * gram * d.core - gram, ng * (nc * nc + 1.0), q.tol);
  r.merge(check_orthogonal_splitting(d, q.tol), "");
  const Report simple = is_dn(a, dinv, ClassQuery(1, 1, q.tol));
  r.add("dn_1_1", simple.verdict("dn"), simple.residual("dn"));
  const Report shifted = is_dn(a, dinv, ClassQuery(q.m + q.n, q.m, q.tol));
  r.add("shift", shifted.verdict("dn"), shifted.residual("dn"));
  return r;
}

#define DRAZINKIT_INSTANTIATE(T)                                                                       \
  template Matrix<T> adjoint_in_basis(const Matrix<T>&, const Matrix<T>&);                             \
  template Report core_restriction_equivalence(const Matrix<T>&, const ClassQuery&);                   \
  template Report verify_certificate(const Matrix<T>&, const SimilarityCertificate<T>&, Tolerance);    \
  template Report partial_isometry_structure(const Matrix<T>&, const ClassQuery&);

DRAZINKIT_INSTANTIATE(Gaussian)
DRAZINKIT_INSTANTIATE(Complex)

#undef DRAZINKIT_INSTANTIATE

}  // namespace drazinkit
