#pragma once

#include <numeric>

#include "drazinkit/drazin.hpp"
#include "drazinkit/matrix.hpp"
#include "drazinkit/report.hpp"

namespace drazinkit {

/// Exponents (n, m) of the power D-normal classes plus the verdict tolerance.
struct ClassQuery {
  unsigned n = 1;
  unsigned m = 1;
  Tolerance tol = Tolerance::verdict_default();

  ClassQuery() = default;
  /// Throws Error(InvalidArgument) unless n >= 1 and m >= 1.
  ClassQuery(unsigned n_, unsigned m_, Tolerance tol_ = Tolerance::verdict_default()) : n(n_), m(m_), tol(tol_) {
    if (n == 0 || m == 0) throw Error(ErrorCode::InvalidArgument, "class exponents n, m must be >= 1");
  }

  unsigned lcm() const { return std::lcm(n, m); }
};

/// Verdict "normal": A* A = A A*, relative to |A|^2.
template <KernelScalar T>
Report is_normal(const Matrix<T>& a, Tolerance tol = Tolerance::verdict_default());

/// Verdict "dn": [A_d^n, (A*)^m] = 0, relative to |A_d|^n |A|^m.
template <KernelScalar T>
Report is_dn(const Matrix<T>& a, const ClassQuery& q);
template <KernelScalar T>
Report is_dn(const Matrix<T>& a, const Matrix<T>& dinv, const ClassQuery& q);

/// Verdict "dqn": [A_d^n, (A*)^m A] = 0, relative to |A_d|^n |A|^(m+1).
template <KernelScalar T>
Report is_dqn(const Matrix<T>& a, const ClassQuery& q);
template <KernelScalar T>
Report is_dqn(const Matrix<T>& a, const Matrix<T>& dinv, const ClassQuery& q);

/// Verdict "m_partial_isometry": A^m (A*)^m A^m = A^m.
template <KernelScalar T>
Report is_m_partial_isometry(const Matrix<T>& a, unsigned m, Tolerance tol = Tolerance::verdict_default());

/// Verdict "contraction": |A|_2 <= 1.
///
/// Float kernel: largest singular value <= 1 + tol. Exact kernel: counts the
/// eigenvalues of A* A in (1, inf) with a Sturm sequence on its (rational)
/// characteristic polynomial; the residual is that count.
template <KernelScalar T>
Report is_contraction(const Matrix<T>& a, Tolerance tol = Tolerance::verdict_default());
template <>
Report is_contraction(const ExactMatrix& a, Tolerance tol);
template <>
Report is_contraction(const FloatMatrix& a, Tolerance tol);

/// Number of distinct real roots of the rational polynomial (coefficients
/// low to high) lying strictly above `bound`.
std::size_t count_real_roots_above(std::vector<mpq_class> coeffs, const mpq_class& bound);

}  // namespace drazinkit
