#include "drazinkit/drazin.hpp"

#include <cmath>

#include "drazinkit/linalg.hpp"

namespace drazinkit {

namespace {

constexpr double kMaxBasisCondition = 1e12;

template <KernelScalar T>
void require_square(const Matrix<T>& a, const char* what) {
  if (!a.square()) throw Error(ErrorCode::ShapeMismatch, std::string(what) + " needs a square matrix, got " + a.shape());
}

template <KernelScalar T>
Decomposition<T> split_in_basis(const Matrix<T>& a, Matrix<T> basis, std::size_t core_dim, std::size_t index,
                                Tolerance tol) {
  Decomposition<T> d;
  d.basis_inverse = inverse(basis, tol);
  const Matrix<T> m = d.basis_inverse * a * basis;
  const std::size_t n = a.rows();
  d.core = m.block(0, 0, core_dim, core_dim);
  d.nil = m.block(core_dim, core_dim, n - core_dim, n - core_dim);
  d.basis = std::move(basis);
  d.core_dim = core_dim;
  d.index = index;
  return d;
}

template <KernelScalar T>
Matrix<T> assemble_dinv(const Decomposition<T>& d, Tolerance tol) {
  const std::size_t n = d.basis.rows();
  Matrix<T> middle(n, n);
  middle.set_block(0, 0, inverse(d.core, tol));
  return d.basis * middle * d.basis_inverse;
}

}  // namespace

template <KernelScalar T>
std::size_t drazin_index(const Matrix<T>& a, Tolerance tol) {
  require_square(a, "drazin_index");
  const std::size_t n = a.rows();
  std::size_t prev = n;
  Matrix<T> p = a;
  for (std::size_t k = 0; k <= n; ++k) {
    const std::size_t r = rank(p, tol);
    if (r == prev) return k;
    prev = r;
    p = p * a;
  }
  return n;
}

template <KernelScalar T>
Decomposition<T> core_nilpotent(const Matrix<T>& a, Tolerance tol) {
  require_square(a, "core_nilpotent");
  const std::size_t n = a.rows();
  const std::size_t p = drazin_index(a, tol);
  if (p == 0) return split_in_basis(a, Matrix<T>::identity(n), n, 0, tol);

  const Matrix<T> ap = power(a, static_cast<unsigned>(p));
  const Matrix<T> range = columnspace_basis(ap, tol);
  const Matrix<T> kernel = nullspace_basis(ap, tol);
  if (range.cols() + kernel.cols() != n) {
    throw Error(ErrorCode::IllConditionedBasis, "numerical rank of A^p is ambiguous");
  }
  Matrix<T> basis = hcat(range, kernel);
  if constexpr (!is_exact_v<T>) {
    const double cond = condition_estimate(basis);
    if (!(cond <= kMaxBasisCondition)) {
      throw Error(ErrorCode::IllConditionedBasis,
                  "core/nil basis condition " + std::to_string(cond) + " exceeds 1e12; retry in the exact kernel");
    }
  }
  return split_in_basis(a, std::move(basis), range.cols(), p, tol);
}

template <KernelScalar T>
DrazinData<T> drazin_inverse(const Matrix<T>& a, Tolerance tol) {
  const Decomposition<T> d = core_nilpotent(a, tol);
  DrazinData<T> out;
  out.index = d.index;
  out.dinv = assemble_dinv(d, tol);
  out.idempotent = Matrix<T>::identity(a.rows()) - a * out.dinv;
  return out;
}

template <KernelScalar T>
Matrix<T> drazin_from_basis(const Matrix<T>& a, const Matrix<T>& basis, std::size_t core_dim, Tolerance tol) {
  require_square(a, "drazin_from_basis");
  if (basis.rows() != a.rows() || !basis.square() || core_dim > a.rows()) {
    throw Error(ErrorCode::ShapeMismatch, "basis does not match the operator");
  }
  return assemble_dinv(split_in_basis(a, basis, core_dim, 0, tol), tol);
}

template <KernelScalar T>
Report verify_drazin_axioms(const Matrix<T>& a, const DrazinData<T>& data, Tolerance tol) {
  require_square(a, "verify_drazin_axioms");
  if (data.dinv.rows() != a.rows() || !data.dinv.square() || data.idempotent.rows() != a.rows() ||
      !data.idempotent.square()) {
    throw Error(ErrorCode::ShapeMismatch, "Drazin data does not match the operator");
  }
  const Matrix<T>& ad = data.dinv;
  const Matrix<T>& e = data.idempotent;
  const double na = frobenius_norm(a);
  const double nd = frobenius_norm(ad);
  const double ne = frobenius_norm(e);
  const auto p = static_cast<unsigned>(data.index);
  const Matrix<T> ap = power(a, p);

  Report r(kernel_of_v<T>);
  r.check("commutation", a * ad - ad * a, na * nd, tol);
  r.check("inner", ad * ad * a - ad, nd * nd * na + nd, tol);
  r.check("eventual", ap * a * ad - ap, std::pow(na, p + 1) * nd + frobenius_norm(ap), tol);
  // E = I - A A_d is formed from terms of size |A| |A_d|
  r.check("idempotent", e * e - e, ne * ne + ne + na * nd, tol);
  return r;
}

template <KernelScalar T>
std::size_t nilpotency_order(const Matrix<T>& n, Tolerance tol) {
  require_square(n, "nilpotency_order");
  if (n.rows() == 0) return 0;
  const double scale = frobenius_norm(n);
  Matrix<T> p = n;
  for (std::size_t k = 1; k <= n.rows(); ++k) {
    if constexpr (is_exact_v<T>) {
      if (p.is_zero()) return k;
    } else {
      if (tol.passes(frobenius_norm(p), std::pow(scale, static_cast<double>(k)))) return k;
    }
    p = p * n;
  }
  throw Error(ErrorCode::InvalidArgument, "matrix is not nilpotent");
}

template <KernelScalar T>
Report check_orthogonal_splitting(const Decomposition<T>& d, Tolerance tol) {
  const Matrix<T> bc = d.core_columns();
  const Matrix<T> bn = d.nil_columns();
  Report r(kernel_of_v<T>);
  r.check("orthogonal_splitting", adjoint(bc) * bn, frobenius_norm(bc) * frobenius_norm(bn), tol);
  return r;
}

#define DRAZINKIT_INSTANTIATE(T)                                                                   \
  template std::size_t drazin_index(const Matrix<T>&, Tolerance);                                  \
  template Decomposition<T> core_nilpotent(const Matrix<T>&, Tolerance);                           \
  template DrazinData<T> drazin_inverse(const Matrix<T>&, Tolerance);                              \
  template Matrix<T> drazin_from_basis(const Matrix<T>&, const Matrix<T>&, std::size_t, Tolerance); \
  template Report verify_drazin_axioms(const Matrix<T>&, const DrazinData<T>&, Tolerance);         \
  template std::size_t nilpotency_order(const Matrix<T>&, Tolerance);                          \
  template Report check_orthogonal_splitting(const Decomposition<T>&, Tolerance);

DRAZINKIT_INSTANTIATE(Gaussian)
DRAZINKIT_INSTANTIATE(Complex)

#undef DRAZINKIT_INSTANTIATE

}  // namespace drazinkit
