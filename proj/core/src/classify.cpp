#include "drazinkit/classify.hpp"

#include <algorithm>
#include <cmath>

#include "drazinkit/linalg.hpp"

namespace drazinkit {

namespace {

using Poly = std::vector<mpq_class>;  // low to high

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long>(k));
  trim(d);
  return d;
}

Poly remainder(Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const mpq_class f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= f * b[k];
    a.pop_back();
    trim(a);
  }
  return a;
}

mpq_class evaluate(const Poly& p, const mpq_class& x) {
  mpq_class v = 0;
  for (std::size_t k = p.size(); k-- > 0;) v = v * x + p[k];
  return v;
}

// Divides out (t - x) once; requires p(x) == 0.
Poly deflate(const Poly& p, const mpq_class& x) {
  Poly q(p.size() - 1);
  mpq_class carry = 0;
  for (std::size_t k = p.size(); k-- > 1;) {
    carry = carry * x + p[k];
    q[k - 1] = carry;
  }
  return q;
}

std::size_t sign_changes(const std::vector<int>& signs) {
  std::size_t changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::size_t count_real_roots_above(Poly p, const mpq_class& bound) {
  trim(p);
  if (p.size() <= 1) return 0;
  while (p.size() > 1 && sgn(evaluate(p, bound)) == 0) p = deflate(p, bound);
  if (p.size() <= 1) return 0;

  std::vector<Poly> seq{p, derivative(p)};
  while (seq.back().size() > 1) {
    Poly r = remainder(seq[seq.size() - 2], seq.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    seq.push_back(std::move(r));
  }
  std::vector<int> at_bound;
  std::vector<int> at_inf;
  for (const auto& s : seq) {
    at_bound.push_back(sgn(evaluate(s, bound)));
    at_inf.push_back(sgn(s.back()));
  }
  return sign_changes(at_bound) - sign_changes(at_inf);
}

template <KernelScalar T>
Report is_normal(const Matrix<T>& a, Tolerance tol) {
  if (!a.square()) throw Error(ErrorCode::ShapeMismatch, "is_normal of " + a.shape());
  const Matrix<T> as = adjoint(a);
  const double na = frobenius_norm(a);
  Report r(kernel_of_v<T>);
  r.check("normal", as * a - a * as, na * na, tol);
  return r;
}

template <KernelScalar T>
Report is_dn(const Matrix<T>& a, const Matrix<T>& dinv, const ClassQuery& q) {
  const Matrix<T> dn = power(dinv, q.n);
  const Matrix<T> asm_ = power(adjoint(a), q.m);
  const double scale = std::pow(frobenius_norm(dinv), q.n) * std::pow(frobenius_norm(a), q.m);
  Report r(kernel_of_v<T>);
  r.check("dn", commutator(dn, asm_), scale, q.tol);
  return r;
}

template <KernelScalar T>
Report is_dn(const Matrix<T>& a, const ClassQuery& q) {
  return is_dn(a, drazin_inverse(a, Tolerance::rank_default()).dinv, q);
}

template <KernelScalar T>
Report is_dqn(const Matrix<T>& a, const Matrix<T>& dinv, const ClassQuery& q) {
  const Matrix<T> dn = power(dinv, q.n);
  const Matrix<T> rhs = power(adjoint(a), q.m) * a;
  const double scale = std::pow(frobenius_norm(dinv), q.n) * std::pow(frobenius_norm(a), q.m + 1);
  Report r(kernel_of_v<T>);
  r.check("dqn", commutator(dn, rhs), scale, q.tol);
  return r;
}

template <KernelScalar T>
Report is_dqn(const Matrix<T>& a, const ClassQuery& q) {
  return is_dqn(a, drazin_inverse(a, Tolerance::rank_default()).dinv, q);
}

template <KernelScalar T>
Report is_m_partial_isometry(const Matrix<T>& a, unsigned m, Tolerance tol) {
  if (!a.square()) throw Error(ErrorCode::ShapeMismatch, "is_m_partial_isometry of " + a.shape());
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "partial isometry exponent must be >= 1");
  const Matrix<T> am = power(a, m);
  const double nm = frobenius_norm(am);
  Report r(kernel_of_v<T>);
  r.check("m_partial_isometry", am * adjoint(am) * am - am, nm * nm * nm + nm, tol);
  return r;
}

template <>
Report is_contraction(const FloatMatrix& a, Tolerance tol) {
  if (!a.square()) throw Error(ErrorCode::ShapeMismatch, "is_contraction of " + a.shape());
  const double norm = operator_norm_estimate(a);
  Report r(Kernel::Float);
  r.add("contraction", norm <= 1.0 + tol.abs + tol.rel, std::max(0.0, norm - 1.0));
  return r;
}

template <>
Report is_contraction(const ExactMatrix& a, Tolerance) {
  if (!a.square()) throw Error(ErrorCode::ShapeMismatch, "is_contraction of " + a.shape());
  const std::vector<Gaussian> cp = characteristic_polynomial(adjoint(a) * a);
  Poly real;
  for (const auto& c : cp) {
    if (sgn(c.im()) != 0) throw Error(ErrorCode::InvalidArgument, "A*A produced a non-real characteristic polynomial");
    real.push_back(c.re());
  }
  const std::size_t above = count_real_roots_above(real, mpq_class(1));
  Report r(Kernel::Exact);
  r.add("contraction", above == 0, static_cast<double>(above));
  return r;
}

#define DRAZINKIT_INSTANTIATE(T)                                                        \
  template Report is_normal(const Matrix<T>&, Tolerance);                               \
  template Report is_dn(const Matrix<T>&, const ClassQuery&);                           \
  template Report is_dn(const Matrix<T>&, const Matrix<T>&, const ClassQuery&);         \
  template Report is_dqn(const Matrix<T>&, const ClassQuery&);                          \
  template Report is_dqn(const Matrix<T>&, const Matrix<T>&, const ClassQuery&);        \
  template Report is_m_partial_isometry(const Matrix<T>&, unsigned, Tolerance);

DRAZINKIT_INSTANTIATE(Gaussian)
DRAZINKIT_INSTANTIATE(Complex)

#undef DRAZINKIT_INSTANTIATE

}  // namespace drazinkit
