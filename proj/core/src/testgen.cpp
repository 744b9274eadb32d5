#include "drazinkit/testgen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "drazinkit/linalg.hpp"

namespace drazinkit {

namespace {

constexpr int kMaxRetries = 64;

template <KernelScalar T>
void require_kernel(const GenSpec& spec) {
  spec.validate();
  if (spec.kernel != kernel_of_v<T>) {
    throw Error(ErrorCode::KernelMismatch, "GenSpec kernel is " + std::string(to_string(spec.kernel)) + ", requested " +
                                               std::string(to_string(kernel_of_v<T>)));
  }
}

long integer_bound(double bound) { return std::max(1L, static_cast<long>(std::floor(bound))); }

template <KernelScalar T>
T unit_phase(SplitMix64& rng) {
  if constexpr (is_exact_v<T>) {
    long u = 0, v = 0;
    while (u == 0 && v == 0) {
      u = rng.uniform_int(-3, 3);
      v = rng.uniform_int(-3, 3);
    }
    const Gaussian z{mpq_class(u), mpq_class(v)};
    return z * z / Gaussian(mpq_class(u * u + v * v));
  } else {
    return std::polar(1.0, rng.uniform(0.0, 2.0 * std::numbers::pi));
  }
}

template <KernelScalar T>
Matrix<T> householder(SplitMix64& rng, std::size_t n) {
  Matrix<T> v(n, 1);
  while (v.is_zero()) {
    for (std::size_t i = 0; i < n; ++i) {
      if constexpr (is_exact_v<T>) {
        v(i, 0) = Gaussian(mpq_class(rng.uniform_int(-2, 2)), mpq_class(rng.uniform_int(-2, 2)));
      } else {
        v(i, 0) = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
      }
    }
  }
  const T vv = (adjoint(v) * v)(0, 0);
  return Matrix<T>::identity(n) - (v * adjoint(v)) * (T(2) / vv);
}

template <KernelScalar T>
bool same_modulus(const T& a, const T& b) {
  if constexpr (is_exact_v<T>) {
    return a.norm() == b.norm();
  } else {
    return std::abs(std::abs(a) - std::abs(b)) < 1e-3;
  }
}

// 2x2 block B with B^k a scalar multiple of I.
template <KernelScalar T>
Matrix<T> root_block(SplitMix64& rng, unsigned k, double bound) {
  const T one(1);
  switch (k) {
    case 2: {
      const T a = random_nonzero_scalar<T>(rng, bound);
      T c = random_nonzero_scalar<T>(rng, bound);
      while (same_modulus(a, c)) c = random_nonzero_scalar<T>(rng, bound);
      return Matrix<T>{{T(0), a}, {c, T(0)}};
    }
    case 3: {
      // companion of t^2 + r t + r^2, conjugated by diag(1, s)
      const T r = random_nonzero_scalar<T>(rng, bound);
      const T s = random_nonzero_scalar<T>(rng, bound);
      return Matrix<T>{{T(0), -(r * r * s)}, {one / s, -r}};
    }
    case 4: {
      // [[1, t], [0, 1]] diag(l, i l) [[1, -t], [0, 1]]
      const T l = random_nonzero_scalar<T>(rng, bound);
      const T t = random_nonzero_scalar<T>(rng, bound);
      T il;
      if constexpr (is_exact_v<T>) {
        il = Gaussian::i() * l;
      } else {
        il = Complex(0.0, 1.0) * l;
      }
      return Matrix<T>{{l, t * (il - l)}, {T(0), il}};
    }
    case 6: {
      // companion of t^2 - 3 s t + 3 s^2, conjugated by diag(1, u)
      const T s = random_nonzero_scalar<T>(rng, bound);
      const T u = random_nonzero_scalar<T>(rng, bound);
      return Matrix<T>{{T(0), -(T(3) * s * s * u)}, {one / u, T(3) * s}};
    }
    default:
      throw Error(ErrorCode::InvalidArgument, "root order must be 2, 3, 4 or 6");
  }
}

std::vector<unsigned> root_orders(const ClassQuery& q) {
  std::vector<unsigned> out;
  for (unsigned k : {2u, 3u, 4u, 6u})
    if (q.n % k == 0 || q.m % k == 0) out.push_back(k);
  return out;
}

template <KernelScalar T>
Matrix<T> normal_block(SplitMix64& rng, std::size_t n, double bound) {
  std::vector<T> d(n);
  for (auto& x : d) x = random_nonzero_scalar<T>(rng, bound);
  const Matrix<T> u = random_unitary<T>(rng, n);
  return u * Matrix<T>::diagonal(d) * adjoint(u);
}

struct Split {
  std::size_t core = 0;
  std::size_t nil = 0;
  std::size_t index = 0;
};

Split choose_split(SplitMix64& rng, std::size_t n, std::size_t cap, std::size_t min_core) {
  const std::size_t room = n - min_core;
  const std::size_t pmax = std::min(cap, room);
  Split s;
  s.index = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(pmax)));
  s.nil = s.index == 0 ? 0 : static_cast<std::size_t>(rng.uniform_int(static_cast<std::int64_t>(s.index),
                                                                       static_cast<std::int64_t>(room)));
  s.core = n - s.nil;
  return s;
}

// Direct sum of strictly upper-triangular blocks; the first has size `index`,
// every block has a nonzero superdiagonal. `shift` uses unit superdiagonals
// and nothing above them.
template <KernelScalar T>
Matrix<T> nil_block(SplitMix64& rng, std::size_t z, std::size_t index, double bound, bool shift = false) {
  Matrix<T> out(z, z);
  std::size_t at = 0;
  std::size_t next = index;
  while (at < z) {
    const std::size_t k = std::min(next, z - at);
    for (std::size_t i = 0; i + 1 < k; ++i) {
      out(at + i, at + i + 1) = shift ? T(1) : random_nonzero_scalar<T>(rng, bound);
      if (shift) continue;
      for (std::size_t j = i + 2; j < k; ++j)
        if (rng.coin()) out(at + i, at + j) = random_scalar<T>(rng, bound);
    }
    at += k;
    next = static_cast<std::size_t>(rng.uniform_int(1, static_cast<std::int64_t>(index)));
  }
  return out;
}

template <KernelScalar T>
Matrix<T> build_core(SplitMix64& rng, std::size_t r, const ClassQuery& q, CoreVariant variant, double bound) {
  const std::vector<unsigned> ks = root_orders(q);
  if (variant == CoreVariant::RootOfNormal && (ks.empty() || r < 2)) {
    throw Error(ErrorCode::UnsatisfiableSpec, "non-normal core needs a root order k in {2,3,4,6} dividing n or m");
  }
  Matrix<T> core(0, 0);
  std::size_t left = r;
  if (variant != CoreVariant::Normal && !ks.empty()) {
    while (left >= 2 && (variant == CoreVariant::RootOfNormal || rng.coin())) {
      const unsigned k = ks[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(ks.size()) - 1))];
      core = direct_sum(core, root_block<T>(rng, k, bound));
      left -= 2;
    }
  }
  if (left > 0) core = direct_sum(core, normal_block<T>(rng, left, bound));
  return core;
}

template <KernelScalar T>
Matrix<T> rotate(const Matrix<T>& a, const Matrix<T>& u) {
  return u * a * adjoint(u);
}

template <KernelScalar T>
Matrix<T> polynomial_in(SplitMix64& rng, const Matrix<T>& a, std::size_t max_degree, double bound) {
  const std::size_t deg = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(max_degree)));
  Matrix<T> out(a.rows(), a.cols());
  Matrix<T> pw = Matrix<T>::identity(a.rows());
  for (std::size_t k = 0; k <= deg; ++k) {
    out += pw * random_scalar<T>(rng, bound);
    pw = pw * a;
  }
  return out;
}

// Invertible with exactly computable inverse: unit lower times upper with a
// nonzero diagonal (exact) or U diag(s) V with s in [0.5, 2] (float).
template <KernelScalar T>
Matrix<T> random_invertible(SplitMix64& rng, std::size_t n, double bound) {
  if constexpr (is_exact_v<T>) {
    Matrix<T> lower = Matrix<T>::identity(n);
    Matrix<T> upper(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      upper(i, i) = random_nonzero_scalar<T>(rng, bound);
      for (std::size_t j = 0; j < i; ++j) lower(i, j) = T(rng.uniform_int(-1, 1));
      for (std::size_t j = i + 1; j < n; ++j) upper(i, j) = random_scalar<T>(rng, bound);
    }
    return lower * upper;
  } else {
    std::vector<T> d(n);
    for (auto& x : d) x = std::polar(rng.uniform(0.5, 2.0), rng.uniform(0.0, 2.0 * std::numbers::pi));
    return random_unitary<T>(rng, n) * Matrix<T>::diagonal(d) * random_unitary<T>(rng, n);
  }
}

// Well-conditioned change of basis: integer unit-triangular factors (exact)
// or U diag(s) V with s in [0.5, 2] (float).
template <KernelScalar T>
Matrix<T> random_basis(SplitMix64& rng, std::size_t n) {
  if constexpr (is_exact_v<T>) {
    Matrix<T> lower = Matrix<T>::identity(n);
    Matrix<T> upper = Matrix<T>::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) lower(i, j) = T(rng.uniform_int(-1, 1));
      for (std::size_t j = i + 1; j < n; ++j) upper(i, j) = T(rng.uniform_int(-1, 1));
    }
    return lower * upper;
  } else {
    std::vector<T> d(n);
    for (auto& x : d) x = rng.uniform(0.5, 2.0);
    return random_unitary<T>(rng, n) * Matrix<T>::diagonal(d) * random_unitary<T>(rng, n);
  }
}

std::size_t min_core_for(std::size_t n) { return n >= 2 ? 1 : 0; }

}  // namespace

std::int64_t SplitMix64::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw Error(ErrorCode::InvalidArgument, "uniform_int: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>((*this)());
  const unsigned __int128 wide = static_cast<unsigned __int128>((*this)()) * span;
  return lo + static_cast<std::int64_t>(static_cast<std::uint64_t>(wide >> 64));
}

void GenSpec::validate() const {
  if (size == 0) throw Error(ErrorCode::InvalidArgument, "GenSpec.size must be >= 1");
  if (index_cap > 3) throw Error(ErrorCode::InvalidArgument, "GenSpec.index_cap must be <= 3");
  if (!(entry_bound >= 1.0)) throw Error(ErrorCode::InvalidArgument, "GenSpec.entry_bound must be >= 1");
}

GenSpec GenSpec::child(std::uint64_t salt) const {
  GenSpec s = *this;
  s.seed = SplitMix64(seed ^ (salt * 0xD1B54A32D192ED03ULL))();
  return s;
}

template <KernelScalar T>
Matrix<T> scaled_involution(const T& a) {
  return Matrix<T>{{T(0), a}, {T(1) / a, T(0)}};
}

template <KernelScalar T>
T random_scalar(SplitMix64& rng, double bound) {
  if constexpr (is_exact_v<T>) {
    const long b = integer_bound(bound);
    const mpq_class re(rng.uniform_int(-b, b), rng.uniform_int(1, b));
    const mpq_class im(rng.uniform_int(-b, b), rng.uniform_int(1, b));
    return Gaussian(re, im);
  } else {
    return Complex(rng.uniform(-bound, bound), rng.uniform(-bound, bound));
  }
}

template <KernelScalar T>
T random_nonzero_scalar(SplitMix64& rng, double bound) {
  if constexpr (is_exact_v<T>) {
    T z = random_scalar<T>(rng, bound);
    while (z.is_zero()) z = random_scalar<T>(rng, bound);
    return z;
  } else {
    return std::polar(rng.uniform(0.5, bound), rng.uniform(0.0, 2.0 * std::numbers::pi));
  }
}

template <KernelScalar T>
Matrix<T> random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols, double bound) {
  Matrix<T> out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = random_scalar<T>(rng, bound);
  return out;
}

template <KernelScalar T>
Matrix<T> random_unitary(SplitMix64& rng, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n; i > 1; --i) {
    std::swap(perm[i - 1], perm[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(i) - 1))]);
  }
  Matrix<T> u(n, n);
  for (std::size_t i = 0; i < n; ++i) u(i, perm[i]) = unit_phase<T>(rng);
  const int reflections = is_exact_v<T> ? 1 : 3;
  for (int k = 0; k < reflections && n > 1; ++k) u = u * householder<T>(rng, n);
  return u;
}

template <KernelScalar T>
DnInstance<T> gen_dn_instance(const GenSpec& spec, const ClassQuery& q, CoreVariant variant) {
  require_kernel<T>(spec);
  SplitMix64 rng(spec.seed);
  const std::size_t min_core = variant == CoreVariant::RootOfNormal ? 2 : min_core_for(spec.size);
  if (spec.size < min_core) throw Error(ErrorCode::UnsatisfiableSpec, "size too small for a non-normal core");
  const Split split = choose_split(rng, spec.size, spec.index_cap, min_core);

  DnInstance<T> out;
  out.core = build_core<T>(rng, split.core, q, variant, spec.entry_bound);
  out.nil = nil_block<T>(rng, split.nil, split.index, spec.entry_bound);
  out.index = split.index;
  out.op = direct_sum(out.core, out.nil);
  return out;
}

template <KernelScalar T>
Matrix<T> gen_dn(const GenSpec& spec, const ClassQuery& q, CoreVariant variant) {
  return gen_dn_instance<T>(spec, q, variant).op;
}

template <KernelScalar T>
Matrix<T> gen_dn_rotated(const GenSpec& spec, const ClassQuery& q, CoreVariant variant) {
  const Matrix<T> a = gen_dn<T>(spec, q, variant);
  SplitMix64 rng(spec.child(0x5107).seed);
  return rotate(a, random_unitary<T>(rng, a.rows()));
}

template <KernelScalar T>
Matrix<T> gen_commuting_with(const Matrix<T>& t, const GenSpec& spec) {
  require_kernel<T>(spec);
  if (!t.square()) throw Error(ErrorCode::ShapeMismatch, "gen_commuting_with needs a square matrix");
  SplitMix64 rng(spec.seed);
  const double bound = std::min(spec.entry_bound, 2.0);
  const std::size_t max_degree = std::min<std::size_t>(t.rows(), 3);
  Matrix<T> x = polynomial_in(rng, t, max_degree, bound);

  const Decomposition<T> d = core_nilpotent(t);
  const std::size_t z = t.rows() - d.core_dim;
  if (z > 0) {
    const Matrix<T> r = polynomial_in(rng, d.nil, max_degree, bound);
    const Matrix<T> left = d.nil_columns();
    const Matrix<T> right = d.basis_inverse.block(d.core_dim, 0, z, t.cols());
    x += left * r * right;
  }
  return x;
}

template <KernelScalar T>
BlockTriple<T> gen_block_triple(const GenSpec& spec, const ClassQuery& q, bool admissible) {
  require_kernel<T>(spec);
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    const GenSpec base = spec.child(static_cast<std::uint64_t>(attempt));
    SplitMix64 rng(base.seed);
    const auto t_size = static_cast<std::size_t>(rng.uniform_int(1, static_cast<std::int64_t>(spec.size)));
    const auto s_size = static_cast<std::size_t>(rng.uniform_int(1, static_cast<std::int64_t>(spec.size)));
    const DnInstance<T> ti = gen_dn_instance<T>(base.child(1).with_size(t_size), q);
    const DnInstance<T> si = gen_dn_instance<T>(base.child(2).with_size(s_size), q);
    const std::size_t rt = ti.core.rows();
    const std::size_t rs = si.core.rows();
    const std::size_t zt = t_size - rt;
    const std::size_t zs = s_size - rs;

    struct Region {
      std::size_t r0, c0, nr, nc;
    };
    std::vector<Region> forbidden;
    if (rt > 0 && rs > 0) forbidden.push_back({0, 0, rt, rs});
    if (rt > 0 && zs > 0) forbidden.push_back({0, rs, rt, zs});
    if (zt > 0 && rs > 0) forbidden.push_back({rt, 0, zt, rs});
    if (!admissible && forbidden.empty()) continue;

    Matrix<T> c(t_size, s_size);
    if (zt > 0 && zs > 0) c.set_block(rt, rs, random_matrix<T>(rng, zt, zs, spec.entry_bound));
    if (!admissible) {
      std::vector<bool> use(forbidden.size());
      bool any = false;
      for (std::size_t k = 0; k < forbidden.size(); ++k) any |= (use[k] = rng.coin());
      if (!any) use[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(forbidden.size()) - 1))] = true;
      for (std::size_t k = 0; k < forbidden.size(); ++k) {
        if (!use[k]) continue;
        const Region& g = forbidden[k];
        Matrix<T> blk = random_matrix<T>(rng, g.nr, g.nc, spec.entry_bound);
        blk(static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(g.nr) - 1)),
            static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(g.nc) - 1))) =
            random_nonzero_scalar<T>(rng, spec.entry_bound);
        c.set_block(g.r0, g.c0, blk);
      }
    }

    const Matrix<T> qt = random_unitary<T>(rng, t_size);
    const Matrix<T> qs = random_unitary<T>(rng, s_size);
    return BlockTriple<T>{rotate(ti.op, qt), qt * c * adjoint(qs), rotate(si.op, qs)};
  }
  throw Error(ErrorCode::UnsatisfiableSpec, "could not draw a triple with a forbidden coupling block");
}

template <KernelScalar T>
Matrix<T> gen_drazin_matrix(const GenSpec& spec) {
  require_kernel<T>(spec);
  SplitMix64 rng(spec.seed);
  const Split split = choose_split(rng, spec.size, spec.index_cap, min_core_for(spec.size));
  const Matrix<T> d = random_invertible<T>(rng, split.core, spec.entry_bound);
  const Matrix<T> z = nil_block<T>(rng, split.nil, split.index, spec.entry_bound);
  const Matrix<T> w = random_basis<T>(rng, spec.size);
  return w * direct_sum(d, z) * inverse(w);
}

template <KernelScalar T>
BlockTriple<T> gen_random_triple(const GenSpec& spec) {
  require_kernel<T>(spec);
  SplitMix64 rng(spec.seed);
  const auto t_size = static_cast<std::size_t>(rng.uniform_int(1, static_cast<std::int64_t>(spec.size)));
  const auto s_size = static_cast<std::size_t>(rng.uniform_int(1, static_cast<std::int64_t>(spec.size)));
  BlockTriple<T> bt;
  bt.t = gen_drazin_matrix<T>(spec.child(1).with_size(t_size));
  bt.s = gen_drazin_matrix<T>(spec.child(2).with_size(s_size));
  bt.c = random_matrix<T>(rng, t_size, s_size, spec.entry_bound);
  return bt;
}

template <KernelScalar T>
IntertwiningInstance<T> gen_intertwining(const GenSpec& spec, Hypothesis hypothesis) {
  require_kernel<T>(spec);
  if (hypothesis == Hypothesis::None) {
    throw Error(ErrorCode::InvalidArgument, "no generator for the bare relation A T = T B");
  }
  SplitMix64 rng(spec.seed);
  const Split split = choose_split(rng, spec.size, spec.index_cap, min_core_for(spec.size));
  const std::size_t r = split.core;

  // Core eigenvalues come in groups {mu}, {mu, -mu} or {mu, mu}; A' lives on
  // same-group pairs and B'_ij = A'_ij lambda_j / lambda_i = A'_ij s_i s_j.
  std::vector<T> lambda(r);
  std::vector<std::size_t> group(r);
  std::vector<int> sign(r, 1);
  for (std::size_t i = 0, g = 0; i < r; ++g) {
    const T mu = random_nonzero_scalar<T>(rng, spec.entry_bound);
    const std::int64_t kind = i + 1 < r ? rng.uniform_int(0, 2) : 0;
    lambda[i] = mu;
    group[i] = g;
    if (kind == 0) {
      i += 1;
      continue;
    }
    group[i + 1] = g;
    sign[i + 1] = kind == 1 ? -1 : 1;
    lambda[i + 1] = kind == 1 ? -mu : mu;
    i += 2;
  }
  Matrix<T> a1(r, r), b1(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if (group[i] != group[j]) continue;
      a1(i, j) = random_scalar<T>(rng, spec.entry_bound);
      b1(i, j) = sign[i] * sign[j] > 0 ? a1(i, j) : -a1(i, j);
    }
  }
  const Matrix<T> v = random_unitary<T>(rng, r);
  const Matrix<T> t1 = rotate(Matrix<T>::diagonal(lambda), v);
  const Matrix<T> a11 = rotate(a1, v);
  const Matrix<T> b11 = rotate(b1, v);

  const Matrix<T> t0 = nil_block<T>(rng, split.nil, split.index, spec.entry_bound);
  const Matrix<T> p0 = polynomial_in(rng, t0, split.index, std::min(spec.entry_bound, 2.0));
  Matrix<T> a22 = p0;
  Matrix<T> b22 = p0;
  if (hypothesis == Hypothesis::DrazinSkew) {
    const Matrix<T> g = random_matrix<T>(rng, split.nil, split.nil, std::min(spec.entry_bound, 2.0));
    a22 += t0 * g;
    b22 += g * t0;
  }

  const Matrix<T> q = random_unitary<T>(rng, spec.size);
  return IntertwiningInstance<T>{rotate(direct_sum(t1, t0), q), rotate(direct_sum(a11, a22), q),
                                 rotate(direct_sum(b11, b22), q)};
}

template <KernelScalar T>
QuasiaffinityInstance<T> gen_quasiaffinity(const GenSpec& spec, const ClassQuery& q) {
  const DnInstance<T> inst = gen_dn_instance<T>(spec, q);
  SplitMix64 rng(spec.child(0x9A).seed);
  const std::size_t r = inst.core.rows();
  const std::size_t z = inst.nil.rows();

  // X1 = V (alpha + beta T1) commutes T1 into V T1 V^*.
  const Matrix<T> v = random_unitary<T>(rng, r);
  Matrix<T> x1;
  for (int attempt = 0;; ++attempt) {
    if (attempt == kMaxRetries) throw Error(ErrorCode::UnsatisfiableSpec, "no invertible alpha + beta T1 found");
    const T alpha = random_nonzero_scalar<T>(rng, spec.entry_bound);
    const T beta = random_nonzero_scalar<T>(rng, spec.entry_bound);
    const Matrix<T> f = Matrix<T>::identity(r) * alpha + inst.core * beta;
    if constexpr (is_exact_v<T>) {
      if (rank(f) != r) continue;
    } else {
      if (r > 0 && condition_estimate(f) > 1e6) continue;
    }
    x1 = v * f;
    break;
  }
  const Matrix<T> x0 = random_invertible<T>(rng, z, std::min(spec.entry_bound, 2.0));

  const Matrix<T> qs = random_unitary<T>(rng, spec.size);
  const Matrix<T> qt = random_unitary<T>(rng, spec.size);
  QuasiaffinityInstance<T> out;
  out.t = rotate(inst.op, qt);
  out.x = qs * direct_sum(x1, x0) * adjoint(qt);
  out.s = rotate(direct_sum(rotate(inst.core, v), x0 * inst.nil * inverse(x0)), qs);
  return out;
}

template <KernelScalar T>
Matrix<T> gen_partial_isometry_contraction(const GenSpec& spec) {
  require_kernel<T>(spec);
  SplitMix64 rng(spec.seed);
  const Split split = choose_split(rng, spec.size, spec.index_cap, min_core_for(spec.size));
  const Matrix<T> u = random_unitary<T>(rng, split.core);
  const Matrix<T> j = nil_block<T>(rng, split.nil, split.index, 1.0, true);
  return rotate(direct_sum(u, j), random_unitary<T>(rng, spec.size));
}

#define DRAZINKIT_INSTANTIATE(T)                                                                    \
  template Matrix<T> scaled_involution(const T&);                                                   \
  template T random_scalar(SplitMix64&, double);                                                    \
  template T random_nonzero_scalar(SplitMix64&, double);                                            \
  template Matrix<T> random_matrix(SplitMix64&, std::size_t, std::size_t, double);                  \
  template Matrix<T> random_unitary(SplitMix64&, std::size_t);                                      \
  template DnInstance<T> gen_dn_instance(const GenSpec&, const ClassQuery&, CoreVariant);           \
  template Matrix<T> gen_dn(const GenSpec&, const ClassQuery&, CoreVariant);                        \
  template Matrix<T> gen_dn_rotated(const GenSpec&, const ClassQuery&, CoreVariant);                \
  template Matrix<T> gen_commuting_with(const Matrix<T>&, const GenSpec&);                          \
  template BlockTriple<T> gen_block_triple(const GenSpec&, const ClassQuery&, bool);                \
  template Matrix<T> gen_drazin_matrix(const GenSpec&);                                             \
  template BlockTriple<T> gen_random_triple(const GenSpec&);                                        \
  template IntertwiningInstance<T> gen_intertwining(const GenSpec&, Hypothesis);                    \
  template QuasiaffinityInstance<T> gen_quasiaffinity(const GenSpec&, const ClassQuery&);           \
  template Matrix<T> gen_partial_isometry_contraction(const GenSpec&);

DRAZINKIT_INSTANTIATE(Gaussian)
DRAZINKIT_INSTANTIATE(Complex)

#undef DRAZINKIT_INSTANTIATE

}  // namespace drazinkit
