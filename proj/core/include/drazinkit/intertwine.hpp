#pragma once

#include "drazinkit/classify.hpp"

namespace drazinkit {

template <KernelScalar T>
struct IntertwiningInstance {
  Matrix<T> op;  // T
  Matrix<T> a;
  Matrix<T> b;
};

/// Extra hypothesis accompanying A T = T B.
enum class Hypothesis {
  None,        // only A T = T B; the conclusion is not implied
  Reverse,     // B T = T A
  DrazinSkew,  // (A - B) T_d = T_d (B - A)
};

/// How the instance's base relation is written: A T = T B, or T A = B T
/// (the latter is evaluated by exchanging the roles of A and B).
enum class Orientation { AT_eq_TB, TA_eq_BT };

/// For T in [(1,1)DN] and [T, X] = 0: verdict "transfer" on [T_d^*, X] = 0.
/// Throws Error(NotInClass) / Error(NotCommuting) when a hypothesis fails.
template <KernelScalar T>
Report fuglede_drazin(const Matrix<T>& op, const Matrix<T>& x, const ClassQuery& q);

/// Reports the base relation ("base"), the extra hypothesis ("hypothesis",
/// absent for Hypothesis::None) and the four transfers
///   "td_star_a"  T_d^* A = B T_d^*
///   "td_star_b"  T_d^* B = A T_d^*
///   "a_td_star"  A T_d^* = T_d^* B
///   "b_td_star"  B T_d^* = T_d^* A
/// with "conclusion" true iff all four hold. Throws Error(NotInClass) if T is
/// not in [(1,1)DN] and Error(HypothesisViolated) if the base relation or the
/// selected hypothesis fails.
template <KernelScalar T>
Report extended_commutativity(const IntertwiningInstance<T>& inst, Hypothesis hypothesis,
                              Tolerance tol = Tolerance::verdict_default(),
                              Orientation orientation = Orientation::AT_eq_TB);

/// Finite-dimensional check that an invertible intertwiner forces similarity, for
/// S X = X T with X invertible and S, T in [(n,m)DN]. Verdicts:
///   "y_block_diagonal"   Y = W_S^{-1} X W_T has Y12 = Y21 = 0
///   "core_dims_equal"
///   "core_spectra_equal" exact: equal characteristic polynomials; float:
///                        optimal eigenvalue pairing within 1e-7 (relative)
///   "nil_orders_equal"   nilpotency orders of S0 and T0 agree
/// Throws Error(NotInClass), Error(NotInvertible) or Error(NotIntertwining).
template <KernelScalar T>
Report quasiaffinity_similarity(const Matrix<T>& s, const Matrix<T>& t, const Matrix<T>& x, const ClassQuery& q);

/// Min-cost perfect matching of two equally long eigenvalue lists under
/// |lambda_i - mu_j|; returns the largest paired distance, each relative to
/// max(1, |lambda_i|).
double max_paired_eigenvalue_distance(const std::vector<Complex>& lhs, const std::vector<Complex>& rhs);

}  // namespace drazinkit
