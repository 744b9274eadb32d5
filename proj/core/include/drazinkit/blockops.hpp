#pragma once

#include "drazinkit/classify.hpp"
#include "drazinkit/drazin.hpp"

namespace drazinkit {

/// A = [[T, C], [0, S]] with T t x t, C t x s, S s x s.
template <KernelScalar T>
struct BlockTriple {
  Matrix<T> t;
  Matrix<T> c;
  Matrix<T> s;
};

/// C written as W_T^{-1} C W_S, split by the core dimensions of T (rows) and
/// S (columns). W_T * assembled() * W_S^{-1} == C.
template <KernelScalar T>
struct AdaptedCoupling {
  Matrix<T> c11, c12, c21, c22;
  Matrix<T> row_basis;  // W_T
  Matrix<T> col_basis;  // W_S
  std::size_t row_core_dim = 0;
  std::size_t col_core_dim = 0;

  Matrix<T> assembled() const;
  /// W_T * assembled() * W_S^{-1}
  Matrix<T> reassemble() const;
  /// |[C11 C12; C21 0]| relative to |adapted C|; 0 for an admissible coupling.
  double forbidden_norm() const;
  /// Exact kernel: forbidden blocks exactly zero. Float: within tol of |adapted C|.
  bool admissible(Tolerance tol = Tolerance::verdict_default()) const;
};

template <KernelScalar T>
struct BlockDrazin {
  Matrix<T> dinv;  // [[T_d, X], [0, S_d]]
  Matrix<T> x;
  std::size_t index_t = 0;
  std::size_t index_s = 0;
};

/// Throws Error(ShapeMismatch) unless the triple is conformable.
template <KernelScalar T>
void validate(const BlockTriple<T>& bt);

template <KernelScalar T>
Matrix<T> assemble(const BlockTriple<T>& bt);

/// X = [sum_{j<q} T_d^{j+2} C S^j](I - S S_d) + (I - T T_d)[sum_{j<p} T^j C S_d^{j+2}] - T_d C S_d
/// with p = ind(T), q = ind(S).
template <KernelScalar T>
BlockDrazin<T> block_drazin_inverse(const BlockTriple<T>& bt, Tolerance tol = Tolerance::rank_default());

template <KernelScalar T>
AdaptedCoupling<T> adapt_coupling(const BlockTriple<T>& bt, Tolerance tol = Tolerance::rank_default());

/// Simple-pole equivalence. Verdicts "lhs" (A in [(1,1)DN]), "rhs" (adapted
/// C11 = C12 = C21 = 0), "equivalent" (lhs <=> rhs) and the flag
/// "strict_simple_pole" (both indices exactly 1; false means an invertible
/// summand was admitted). Throws Error(NotInClass), Error(IndexTooHigh) or
/// Error(NonOrthogonalBasis).
template <KernelScalar T>
Report simple_pole_equivalence(const BlockTriple<T>& bt, Tolerance tol = Tolerance::verdict_default());

/// Sufficiency for an admissible coupling: verdicts "dn" (A in [(n,m)DN]),
/// "x_zero" (the block formula's X vanishes) and "direct_sum_closure"
/// (T (+) S in [(n,m)DN]). Throws Error(NotInClass) or
/// Error(CouplingNotAdmissible).
template <KernelScalar T>
Report coupling_sufficiency(const BlockTriple<T>& bt, const ClassQuery& q);

}  // namespace drazinkit
