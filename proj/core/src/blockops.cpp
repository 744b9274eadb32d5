#include "drazinkit/blockops.hpp"

#include <cmath>

#include "drazinkit/linalg.hpp"

namespace drazinkit {

namespace {

template <KernelScalar T>
Matrix<T> forbidden_part(const AdaptedCoupling<T>& ac) {
  Matrix<T> f = ac.assembled();
  const std::size_t r = ac.row_core_dim;
  const std::size_t c = ac.col_core_dim;
  f.set_block(r, c, Matrix<T>(f.rows() - r, f.cols() - c));
  return f;
}

}  // namespace

template <KernelScalar T>
Matrix<T> AdaptedCoupling<T>::assembled() const {
  const std::size_t rows = c11.rows() + c21.rows();
  const std::size_t cols = c11.cols() + c12.cols();
  Matrix<T> out(rows, cols);
  out.set_block(0, 0, c11);
  out.set_block(0, c11.cols(), c12);
  out.set_block(c11.rows(), 0, c21);
  out.set_block(c11.rows(), c11.cols(), c22);
  return out;
}

template <KernelScalar T>
Matrix<T> AdaptedCoupling<T>::reassemble() const {
  return row_basis * assembled() * inverse(col_basis);
}

template <KernelScalar T>
double AdaptedCoupling<T>::forbidden_norm() const {
  const double whole = frobenius_norm(assembled());
  const double raw = frobenius_norm(forbidden_part(*this));
  return whole > 0.0 ? raw / whole : raw;
}

template <KernelScalar T>
bool AdaptedCoupling<T>::admissible(Tolerance tol) const {
  const Matrix<T> f = forbidden_part(*this);
  if constexpr (is_exact_v<T>) {
    (void)tol;
    return f.is_zero();
  } else {
    return tol.passes(frobenius_norm(f), frobenius_norm(assembled()));
  }
}

template <KernelScalar T>
void validate(const BlockTriple<T>& bt) {
  if (!bt.t.square() || !bt.s.square()) throw Error(ErrorCode::ShapeMismatch, "block triple: T and S must be square");
  if (bt.c.rows() != bt.t.rows() || bt.c.cols() != bt.s.rows()) {
    throw Error(ErrorCode::ShapeMismatch, "block triple: C must be t x s");
  }
}

template <KernelScalar T>
Matrix<T> assemble(const BlockTriple<T>& bt) {
  validate(bt);
  const std::size_t t = bt.t.rows();
  Matrix<T> a(t + bt.s.rows(), t + bt.s.rows());
  a.set_block(0, 0, bt.t);
  a.set_block(0, t, bt.c);
  a.set_block(t, t, bt.s);
  return a;
}

template <KernelScalar T>
BlockDrazin<T> block_drazin_inverse(const BlockTriple<T>& bt, Tolerance tol) {
  validate(bt);
  const DrazinData<T> dt = drazin_inverse(bt.t, tol);
  const DrazinData<T> ds = drazin_inverse(bt.s, tol);
  const Matrix<T>& td = dt.dinv;
  const Matrix<T>& sd = ds.dinv;
  const std::size_t t = bt.t.rows();
  const std::size_t s = bt.s.rows();

  Matrix<T> first(t, s);
  Matrix<T> td_pow = td * td;                 // T_d^{j+2}
  Matrix<T> s_pow = Matrix<T>::identity(s);   // S^j
  for (std::size_t j = 0; j < ds.index; ++j) {
    first += td_pow * bt.c * s_pow;
    td_pow = td_pow * td;
    s_pow = s_pow * bt.s;
  }

  Matrix<T> second(t, s);
  Matrix<T> t_pow = Matrix<T>::identity(t);   // T^j
  Matrix<T> sd_pow = sd * sd;                 // S_d^{j+2}
  for (std::size_t j = 0; j < dt.index; ++j) {
    second += t_pow * bt.c * sd_pow;
    t_pow = t_pow * bt.t;
    sd_pow = sd_pow * sd;
  }

  BlockDrazin<T> out;
  out.index_t = dt.index;
  out.index_s = ds.index;
  out.x = first * ds.idempotent + dt.idempotent * second - td * bt.c * sd;
  out.dinv = assemble(BlockTriple<T>{td, out.x, sd});
  return out;
}

template <KernelScalar T>
AdaptedCoupling<T> adapt_coupling(const BlockTriple<T>& bt, Tolerance tol) {
  validate(bt);
  const Decomposition<T> dt = core_nilpotent(bt.t, tol);
  const Decomposition<T> ds = core_nilpotent(bt.s, tol);
  const Matrix<T> adapted = dt.basis_inverse * bt.c * ds.basis;
  const std::size_t r = dt.core_dim;
  const std::size_t c = ds.core_dim;
  const std::size_t rows = adapted.rows();
  const std::size_t cols = adapted.cols();

  AdaptedCoupling<T> ac;
  ac.c11 = adapted.block(0, 0, r, c);
  ac.c12 = adapted.block(0, c, r, cols - c);
  ac.c21 = adapted.block(r, 0, rows - r, c);
  ac.c22 = adapted.block(r, c, rows - r, cols - c);
  ac.row_basis = dt.basis;
  ac.col_basis = ds.basis;
  ac.row_core_dim = r;
  ac.col_core_dim = c;
  return ac;
}

template <KernelScalar T>
Report simple_pole_equivalence(const BlockTriple<T>& bt, Tolerance tol) {
  validate(bt);
  const Tolerance rank_tol = Tolerance::rank_default();
  const ClassQuery simple(1, 1, tol);
  const Decomposition<T> dt = core_nilpotent(bt.t, rank_tol);
  const Decomposition<T> ds = core_nilpotent(bt.s, rank_tol);
  if (!is_dn(bt.t, drazin_from_basis(bt.t, dt.basis, dt.core_dim), simple).verdict("dn")) {
    throw Error(ErrorCode::NotInClass, "T is not in [(1,1)DN]");
  }
  if (!is_dn(bt.s, drazin_from_basis(bt.s, ds.basis, ds.core_dim), simple).verdict("dn")) {
    throw Error(ErrorCode::NotInClass, "S is not in [(1,1)DN]");
  }
  if (dt.index > 1 || ds.index > 1) throw Error(ErrorCode::IndexTooHigh, "simple-pole equivalence needs index <= 1");
  if (!check_orthogonal_splitting(dt, tol).verdict("orthogonal_splitting") ||
      !check_orthogonal_splitting(ds, tol).verdict("orthogonal_splitting")) {
    throw Error(ErrorCode::NonOrthogonalBasis, "core/nil splitting of T or S is not orthogonal");
  }

  Report r(kernel_of_v<T>);
  const Report lhs = is_dn(assemble(bt), simple);
  r.add("lhs", lhs.verdict("dn"), lhs.residual("dn"));

  const AdaptedCoupling<T> ac = adapt_coupling(bt, rank_tol);
  r.add("rhs", ac.admissible(tol), ac.forbidden_norm());
  r.flag("equivalent", r.verdict("lhs") == r.verdict("rhs"));
  r.flag("strict_simple_pole", dt.index == 1 && ds.index == 1);
  return r;
}

template <KernelScalar T>
Report coupling_sufficiency(const BlockTriple<T>& bt, const ClassQuery& q) {
  validate(bt);
  if (!is_dn(bt.t, q).verdict("dn")) throw Error(ErrorCode::NotInClass, "T is not in the requested class");
  if (!is_dn(bt.s, q).verdict("dn")) throw Error(ErrorCode::NotInClass, "S is not in the requested class");
  const AdaptedCoupling<T> ac = adapt_coupling(bt, Tolerance::rank_default());
  if (!ac.admissible(q.tol)) throw Error(ErrorCode::CouplingNotAdmissible, "adapted coupling has a nonzero C11, C12 or C21");

  Report r(kernel_of_v<T>);
  const Matrix<T> a = assemble(bt);
  const BlockDrazin<T> bd = block_drazin_inverse(bt, Tolerance::rank_default());
  const Report dn = is_dn(a, bd.dinv, q);
  r.add("dn", dn.verdict("dn"), dn.residual("dn"));

  const double scale = frobenius_norm(bd.dinv) * frobenius_norm(bd.dinv) * frobenius_norm(bt.c);
  r.check("x_zero", bd.x, scale, q.tol);

  const Report closure = is_dn(direct_sum(bt.t, bt.s), q);
  r.add("direct_sum_closure", closure.verdict("dn"), closure.residual("dn"));
  return r;
}

#define DRAZINKIT_INSTANTIATE(T)                                                  \
  template struct AdaptedCoupling<T>;                                             \
  template void validate(const BlockTriple<T>&);                                  \
  template Matrix<T> assemble(const BlockTriple<T>&);                             \
  template BlockDrazin<T> block_drazin_inverse(const BlockTriple<T>&, Tolerance); \
  template AdaptedCoupling<T> adapt_coupling(const BlockTriple<T>&, Tolerance);   \
  template Report simple_pole_equivalence(const BlockTriple<T>&, Tolerance);            \
  template Report coupling_sufficiency(const BlockTriple<T>&, const ClassQuery&);

DRAZINKIT_INSTANTIATE(Gaussian)
DRAZINKIT_INSTANTIATE(Complex)

#undef DRAZINKIT_INSTANTIATE

}  // namespace drazinkit
