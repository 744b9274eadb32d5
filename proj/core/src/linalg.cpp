#include "drazinkit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace drazinkit {

namespace {

using EMatrix = Eigen::MatrixXcd;

EMatrix to_eigen(const FloatMatrix& a) {
  EMatrix m(static_cast<Eigen::Index>(a.rows()), static_cast<Eigen::Index>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a(i, j);
  return m;
}

FloatMatrix from_eigen(const EMatrix& m) {
  FloatMatrix a(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = m(i, j);
  return a;
}

// Reduced row echelon form over Q(i). `pivots[k]` is the column of the k-th
// pivot row.
struct Echelon {
  ExactMatrix reduced;
  std::vector<std::size_t> pivots;
};

Echelon rref(ExactMatrix m, std::size_t pivot_cols) {
  Echelon e;
  std::size_t row = 0;
  for (std::size_t c = 0; c < pivot_cols && row < m.rows(); ++c) {
    std::size_t p = row;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    }
    const Gaussian inv = Gaussian(1) / m(row, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, c).is_zero()) continue;
      const Gaussian f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
      }
    }
    e.pivots.push_back(c);
    ++row;
  }
  e.reduced = std::move(m);
  return e;
}

struct PivotedQr {
  Eigen::ColPivHouseholderQR<EMatrix> qr;
  std::size_t rank = 0;
};

PivotedQr pivoted_qr(const FloatMatrix& a, Tolerance tol) {
  PivotedQr out{Eigen::ColPivHouseholderQR<EMatrix>(to_eigen(a)), 0};
  const auto& r = out.qr.matrixQR();
  const Eigen::Index k = std::min(r.rows(), r.cols());
  if (k == 0) return out;
  const double lead = std::abs(r(0, 0));
  for (Eigen::Index i = 0; i < k; ++i) {
    if (std::abs(r(i, i)) > tol.abs + tol.rel * lead && std::abs(r(i, i)) > 0.0) ++out.rank;
  }
  return out;
}

EMatrix full_q(const PivotedQr& p, Eigen::Index n) {
  EMatrix q = EMatrix::Identity(n, n);
  q = p.qr.householderQ() * q;
  return q;
}

}  // namespace

// ---- rank -------------------------------------------------------------------

std::size_t rank(const ExactMatrix& a, Tolerance) {
  return rref(a, a.cols()).pivots.size();
}

std::size_t rank(const FloatMatrix& a, Tolerance tol) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  return pivoted_qr(a, tol).rank;
}

// ---- null / column spaces -------------------------------------------------

ExactMatrix nullspace_basis(const ExactMatrix& a, Tolerance) {
  const Echelon e = rref(a, a.cols());
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  ExactMatrix basis(a.cols(), a.cols() - e.pivots.size());
  std::size_t k = 0;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    basis(f, k) = Gaussian(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) basis(e.pivots[r], k) = -e.reduced(r, f);
    ++k;
  }
  return basis;
}

FloatMatrix nullspace_basis(const FloatMatrix& a, Tolerance tol) {
  const std::size_t n = a.cols();
  if (a.rows() == 0 || n == 0) return FloatMatrix::identity(n);
  // ker(a) is the orthogonal complement of range(a^*).
  const PivotedQr p = pivoted_qr(adjoint(a), tol);
  const EMatrix q = full_q(p, static_cast<Eigen::Index>(n));
  return from_eigen(q.rightCols(static_cast<Eigen::Index>(n - p.rank)));
}

ExactMatrix columnspace_basis(const ExactMatrix& a, Tolerance) {
  const Echelon e = rref(a, a.cols());
  ExactMatrix basis(a.rows(), e.pivots.size());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) basis.set_block(0, k, a.col(e.pivots[k]));
  return basis;
}

FloatMatrix columnspace_basis(const FloatMatrix& a, Tolerance tol) {
  if (a.rows() == 0 || a.cols() == 0) return FloatMatrix(a.rows(), 0);
  const PivotedQr p = pivoted_qr(a, tol);
  const EMatrix q = full_q(p, static_cast<Eigen::Index>(a.rows()));
  return from_eigen(q.leftCols(static_cast<Eigen::Index>(p.rank)));
}

// ---- inverse / solve ------------------------------------------------------

ExactMatrix solve(const ExactMatrix& a, const ExactMatrix& b, Tolerance) {
  if (!a.square() || a.rows() != b.rows()) throw Error(ErrorCode::ShapeMismatch, "solve " + a.shape() + " \\ " + b.shape());
  const std::size_t n = a.rows();
  const Echelon e = rref(hcat(a, b), n);
  if (e.pivots.size() != n) throw Error(ErrorCode::SingularMatrix, "matrix is rank deficient");
  return e.reduced.block(0, n, n, b.cols());
}

FloatMatrix solve(const FloatMatrix& a, const FloatMatrix& b, Tolerance tol) {
  if (!a.square() || a.rows() != b.rows()) throw Error(ErrorCode::ShapeMismatch, "solve " + a.shape() + " \\ " + b.shape());
  if (a.rows() == 0) return FloatMatrix(0, b.cols());
  Eigen::FullPivLU<EMatrix> lu(to_eigen(a));
  lu.setThreshold(std::max(tol.rel, std::numeric_limits<double>::epsilon()));
  if (!lu.isInvertible()) throw Error(ErrorCode::SingularMatrix, "matrix is numerically rank deficient");
  return from_eigen(lu.solve(to_eigen(b)));
}


// ---- norms ----------------------------------------------------------------

double operator_norm_estimate(const FloatMatrix& a) {
  if (a.empty()) return 0.0;
  Eigen::JacobiSVD<EMatrix> svd(to_eigen(a));
  return svd.singularValues()(0);
}

double operator_norm_estimate(const ExactMatrix&) {
  throw Error(ErrorCode::ExactKernelUnsupported, "operator norm is not exact; convert with to_float");
}

double condition_estimate(const FloatMatrix& a) {
  if (a.empty()) return 1.0;
  Eigen::JacobiSVD<EMatrix> svd(to_eigen(a));
  const auto& s = svd.singularValues();
  const double smin = s(s.size() - 1);
  if (smin == 0.0) return std::numeric_limits<double>::infinity();
  return s(0) / smin;
}

// ---- characteristic polynomial --------------------------------------------

namespace {

template <KernelScalar T>
std::vector<T> faddeev_leverrier(const Matrix<T>& a) {
  if (!a.square()) throw Error(ErrorCode::ShapeMismatch, "characteristic polynomial of " + a.shape());
  const std::size_t n = a.rows();
  std::vector<T> c(n + 1);
  c[n] = T(1);
  // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k
  Matrix<T> m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    const Matrix<T> am = a * m;
    c[n - k] = -trace(am) / T(static_cast<long>(k));
  }
  return c;
}

}  // namespace

std::vector<Gaussian> characteristic_polynomial(const ExactMatrix& a) { return faddeev_leverrier(a); }
std::vector<Complex> characteristic_polynomial(const FloatMatrix& a) { return faddeev_leverrier(a); }

// ---- eigen ----------------------------------------------------------------

EigenDecomposition eigendecompose(const FloatMatrix& a) {
  if (!a.square()) throw Error(ErrorCode::ShapeMismatch, "eigendecomposition of " + a.shape());
  EigenDecomposition out;
  if (a.rows() == 0) return out;
  Eigen::ComplexEigenSolver<EMatrix> solver;
  solver.setMaxIterations(static_cast<Eigen::Index>(200 * a.rows()));
  solver.compute(to_eigen(a), true);
  if (solver.info() != Eigen::Success) throw Error(ErrorCode::EigenFailure, "complex Schur iteration did not converge");

  const auto& vals = solver.eigenvalues();
  const auto& vecs = solver.eigenvectors();
  std::vector<std::size_t> order(a.rows());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    const double mx = std::abs(vals(static_cast<Eigen::Index>(x)));
    const double my = std::abs(vals(static_cast<Eigen::Index>(y)));
    if (mx != my) return mx < my;
    return std::arg(vals(static_cast<Eigen::Index>(x))) < std::arg(vals(static_cast<Eigen::Index>(y)));
  });
  out.vectors = FloatMatrix(a.rows(), a.rows());
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto src = static_cast<Eigen::Index>(order[k]);
    out.values.push_back(vals(src));
    for (std::size_t i = 0; i < a.rows(); ++i) out.vectors(i, k) = vecs(static_cast<Eigen::Index>(i), src);
  }
  return out;
}

std::vector<Complex> eigenvalues(const FloatMatrix& a) {
  return eigendecompose(a).values;
}

}  // namespace drazinkit
