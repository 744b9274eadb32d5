#pragma once

#include <cstdint>
#include <string_view>

#include "drazinkit/blockops.hpp"
#include "drazinkit/classify.hpp"
#include "drazinkit/intertwine.hpp"

namespace drazinkit {

/// SplitMix64 (Steele, Lea, Flood). State advances by the golden gamma;
/// split() seeds an independent child stream from the next output.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;
  static constexpr std::string_view algorithm = "splitmix64";

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  SplitMix64 split() { return SplitMix64((*this)() ^ 0x6A09E667F3BCC909ULL); }

  /// Uniform in [0, 1) from the top 53 bits.
  double uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  /// Uniform integer in [lo, hi] (inclusive), lo <= hi.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  bool coin() { return ((*this)() >> 63) != 0; }

 private:
  std::uint64_t state_;
};

/// Generator parameters. Identical specs yield identical instances.
struct GenSpec {
  std::uint64_t seed = 0;
  std::size_t size = 4;
  std::size_t index_cap = 2;  // <= 3
  Kernel kernel = Kernel::Float;
  double entry_bound = 4.0;   // exact kernel: numerators/denominators in [-b, b]

  /// Throws Error(InvalidArgument) for size 0, index_cap > 3 or a bound < 1.
  void validate() const;
  /// Independent spec for a sub-instance: same parameters, derived seed.
  GenSpec child(std::uint64_t salt) const;
  GenSpec with_size(std::size_t n) const {
    GenSpec s = *this;
    s.size = n;
    return s;
  }
};

/// Core families for gen_dn.
enum class CoreVariant {
  Normal,        // unitary * diagonal * unitary^*
  RootOfNormal,  // 2x2 blocks B with B^k = c I, k | n or k | m; not normal
  Mixed,         // either, per 2x2 slot
};

/// T = core (+) nil, with nil strictly upper-triangular of nilpotency `index`.
template <KernelScalar T>
struct DnInstance {
  Matrix<T> op;
  Matrix<T> core;
  Matrix<T> nil;
  std::size_t index = 0;
};

template <KernelScalar T>
struct QuasiaffinityInstance {
  Matrix<T> s;
  Matrix<T> t;
  Matrix<T> x;  // S X = X T, X invertible
};

/// [[0, a], [1/a, 0]]: squares to I, normal iff |a| = 1.
template <KernelScalar T>
Matrix<T> scaled_involution(const T& a);

template <KernelScalar T>
T random_scalar(SplitMix64& rng, double bound);
template <KernelScalar T>
T random_nonzero_scalar(SplitMix64& rng, double bound);
template <KernelScalar T>
Matrix<T> random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols, double bound);

/// Exact kernel: permutation * unit phases * one Householder reflector, all in
/// Q(i). Float kernel: permutation * phases * three Householder reflectors.
template <KernelScalar T>
Matrix<T> random_unitary(SplitMix64& rng, std::size_t n);

/// Member of [(n,m)DN]: T1 (+) T0 with the core drawn from `variant`.
/// Throws Error(UnsatisfiableSpec) if RootOfNormal is requested but no root
/// order k in {2,3,4,6} divides n or m, or the size leaves no 2x2 core slot.
template <KernelScalar T>
DnInstance<T> gen_dn_instance(const GenSpec& spec, const ClassQuery& q, CoreVariant variant = CoreVariant::Mixed);

template <KernelScalar T>
Matrix<T> gen_dn(const GenSpec& spec, const ClassQuery& q, CoreVariant variant = CoreVariant::Mixed);

/// gen_dn followed by a random unitary change of basis (still in the class,
/// splitting still orthogonal).
template <KernelScalar T>
Matrix<T> gen_dn_rotated(const GenSpec& spec, const ClassQuery& q, CoreVariant variant = CoreVariant::Mixed);

/// p(T) + W (0 (+) r(T0)) W^{-1} for random polynomials p, r; commutes with T.
template <KernelScalar T>
Matrix<T> gen_commuting_with(const Matrix<T>& t, const GenSpec& spec);

/// S, T from gen_dn under independent random unitaries; C = Q_T C' Q_S^* with
/// C' = 0 (+) C22 when admissible, otherwise with at least one nonzero block
/// among C11, C12, C21. T and S have sizes in [1, spec.size].
template <KernelScalar T>
BlockTriple<T> gen_block_triple(const GenSpec& spec, const ClassQuery& q, bool admissible);

/// W (D (+) Z) W^{-1}: D invertible, Z nilpotent of order <= index_cap,
/// W well conditioned. Generally outside every DN class.
template <KernelScalar T>
Matrix<T> gen_drazin_matrix(const GenSpec& spec);

/// Unstructured triple of gen_drazin_matrix blocks, sizes in [1, spec.size].
template <KernelScalar T>
BlockTriple<T> gen_random_triple(const GenSpec& spec);

/// (T, A, B) with T in [(1,1)DN], A T = T B and the selected hypothesis.
/// Throws Error(InvalidArgument) for Hypothesis::None.
template <KernelScalar T>
IntertwiningInstance<T> gen_intertwining(const GenSpec& spec, Hypothesis hypothesis);

template <KernelScalar T>
QuasiaffinityInstance<T> gen_quasiaffinity(const GenSpec& spec, const ClassQuery& q);

/// Unitary (+) shifts under a random unitary: an m-partial isometry for every
/// m, a contraction and a member of every [(n,m)DN].
template <KernelScalar T>
Matrix<T> gen_partial_isometry_contraction(const GenSpec& spec);

}  // namespace drazinkit
