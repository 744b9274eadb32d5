#include "drazinkit/intertwine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "drazinkit/linalg.hpp"

namespace drazinkit {

namespace {

constexpr double kEigenPairingTolerance = 1e-7;

// Hungarian algorithm (potentials form) on a square cost matrix; returns
// assignment row -> column.
std::vector<std::size_t> min_cost_assignment(const std::vector<std::vector<double>>& cost) {
  const std::size_t n = cost.size();
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::size_t> assignment(n);
  for (std::size_t j = 1; j <= n; ++j) assignment[p[j] - 1] = j - 1;
  return assignment;
}

template <KernelScalar T>
Report compare_core_spectra(const Matrix<T>& s_core, const Matrix<T>& t_core, Tolerance) {
  Report r(kernel_of_v<T>);
  if constexpr (is_exact_v<T>) {
    const auto cs = characteristic_polynomial(s_core);
    const auto ct = characteristic_polynomial(t_core);
    double diff = 0.0;
    for (std::size_t k = 0; k < cs.size(); ++k) diff += magnitude_squared(cs[k] - ct[k]);
    r.add("core_spectra_equal", cs == ct, std::sqrt(diff));
  } else {
    const double d = max_paired_eigenvalue_distance(eigenvalues(s_core), eigenvalues(t_core));
    r.add("core_spectra_equal", d <= kEigenPairingTolerance, d);
  }
  return r;
}

}  // namespace

double max_paired_eigenvalue_distance(const std::vector<Complex>& lhs, const std::vector<Complex>& rhs) {
  if (lhs.size() != rhs.size()) throw Error(ErrorCode::ShapeMismatch, "eigenvalue lists differ in length");
  const std::size_t n = lhs.size();
  if (n == 0) return 0.0;
  std::vector<std::vector<double>> cost(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cost[i][j] = std::abs(lhs[i] - rhs[j]);
  const auto assignment = min_cost_assignment(cost);
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    worst = std::max(worst, cost[i][assignment[i]] / std::max(1.0, std::abs(lhs[i])));
  }
  return worst;
}

template <KernelScalar T>
Report fuglede_drazin(const Matrix<T>& op, const Matrix<T>& x, const ClassQuery& q) {
  if (!op.square() || x.rows() != op.rows() || !x.square()) {
    throw Error(ErrorCode::ShapeMismatch, "fuglede_drazin needs equal square shapes");
  }
  const Matrix<T> dinv = drazin_inverse(op, Tolerance::rank_default()).dinv;
  const ClassQuery simple(1, 1, q.tol);
  if (!is_dn(op, dinv, simple).verdict("dn")) throw Error(ErrorCode::NotInClass, "T is not in [(1,1)DN]");

  Report r(kernel_of_v<T>);
  if (!r.check("commutes", commutator(op, x), frobenius_norm(op) * frobenius_norm(x), q.tol)) {
    throw Error(ErrorCode::NotCommuting, "[T, X] != 0");
  }
  r.check("transfer", commutator(adjoint(dinv), x), frobenius_norm(dinv) * frobenius_norm(x), q.tol);
  return r;
}

template <KernelScalar T>
Report extended_commutativity(const IntertwiningInstance<T>& inst, Hypothesis hypothesis, Tolerance tol,
                              Orientation orientation) {
  const Matrix<T>& t = inst.op;
  const bool swap = orientation == Orientation::TA_eq_BT;
  const Matrix<T>& a = swap ? inst.b : inst.a;
  const Matrix<T>& b = swap ? inst.a : inst.b;
  if (!t.square() || a.rows() != t.rows() || b.rows() != t.rows() || !a.square() || !b.square()) {
    throw Error(ErrorCode::ShapeMismatch, "intertwining instance needs equal square shapes");
  }
  const Matrix<T> dinv = drazin_inverse(t, Tolerance::rank_default()).dinv;
  if (!is_dn(t, dinv, ClassQuery(1, 1, tol)).verdict("dn")) throw Error(ErrorCode::NotInClass, "T is not in [(1,1)DN]");

  const double nt = frobenius_norm(t);
  const double nab = frobenius_norm(a) + frobenius_norm(b);
  Report r(kernel_of_v<T>);
  if (!r.check("base", a * t - t * b, nt * nab, tol)) throw Error(ErrorCode::HypothesisViolated, "A T != T B");
  switch (hypothesis) {
    case Hypothesis::None:
      break;
    case Hypothesis::Reverse:
      if (!r.check("hypothesis", b * t - t * a, nt * nab, tol)) {
        throw Error(ErrorCode::HypothesisViolated, "B T != T A");
      }
      break;
    case Hypothesis::DrazinSkew:
      if (!r.check("hypothesis", (a - b) * dinv - dinv * (b - a), frobenius_norm(dinv) * nab, tol)) {
        throw Error(ErrorCode::HypothesisViolated, "(A - B) T_d != T_d (B - A)");
      }
      break;
  }

  const Matrix<T> ds = adjoint(dinv);
  const double scale = frobenius_norm(ds) * nab;
  bool all = true;
  all &= r.check("td_star_a", ds * a - b * ds, scale, tol);
  all &= r.check("td_star_b", ds * b - a * ds, scale, tol);
  all &= r.check("a_td_star", a * ds - ds * b, scale, tol);
  all &= r.check("b_td_star", b * ds - ds * a, scale, tol);
  r.flag("conclusion", all);
  return r;
}

template <KernelScalar T>
Report quasiaffinity_similarity(const Matrix<T>& s, const Matrix<T>& t, const Matrix<T>& x, const ClassQuery& q) {
  if (!s.square() || !t.square() || x.rows() != s.rows() || x.cols() != t.rows()) {
    throw Error(ErrorCode::ShapeMismatch, "quasiaffinity_similarity shapes");
  }
  const Decomposition<T> ds = core_nilpotent(s, Tolerance::rank_default());
  const Decomposition<T> dt = core_nilpotent(t, Tolerance::rank_default());
  if (!is_dn(s, drazin_from_basis(s, ds.basis, ds.core_dim), q).verdict("dn")) {
    throw Error(ErrorCode::NotInClass, "S is not in the requested class");
  }
  if (!is_dn(t, drazin_from_basis(t, dt.basis, dt.core_dim), q).verdict("dn")) {
    throw Error(ErrorCode::NotInClass, "T is not in the requested class");
  }
  if (!x.square() || rank(x, Tolerance::rank_default()) != x.rows()) {
    throw Error(ErrorCode::NotInvertible, "intertwiner X is not invertible");
  }

  Report r(kernel_of_v<T>);
  if (!r.check("intertwines", s * x - x * t, frobenius_norm(x) * (frobenius_norm(s) + frobenius_norm(t)), q.tol)) {
    throw Error(ErrorCode::NotIntertwining, "S X != X T");
  }

  const Matrix<T> y = ds.basis_inverse * x * dt.basis;
  const std::size_t rs = ds.core_dim;
  const std::size_t rt = dt.core_dim;
  const std::size_t n = y.rows();
  Matrix<T> off = y;  // Y12 and Y21 only
  off.set_block(0, 0, Matrix<T>(rs, rt));
  off.set_block(rs, rt, Matrix<T>(n - rs, n - rt));
  r.check("y_block_diagonal", off, frobenius_norm(y), q.tol);
  r.flag("core_dims_equal", rs == rt);
  if (rs == rt) {
    r.merge(compare_core_spectra(ds.core, dt.core, q.tol), "");
    // the Drazin index is the nilpotency order of the nil block
    r.flag("nil_orders_equal", ds.index == dt.index);
  } else {
    r.flag("core_spectra_equal", false);
    r.flag("nil_orders_equal", false);
  }
  return r;
}

#define DRAZINKIT_INSTANTIATE(T)                                                                             \
  template Report fuglede_drazin(const Matrix<T>&, const Matrix<T>&, const ClassQuery&);                     \
  template Report extended_commutativity(const IntertwiningInstance<T>&, Hypothesis, Tolerance, Orientation); \
  template Report quasiaffinity_similarity(const Matrix<T>&, const Matrix<T>&, const Matrix<T>&, const ClassQuery&);

DRAZINKIT_INSTANTIATE(Gaussian)
DRAZINKIT_INSTANTIATE(Complex)

#undef DRAZINKIT_INSTANTIATE

}  // namespace drazinkit
