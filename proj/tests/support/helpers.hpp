#pragma once

#include <cstdint>

#include "drazinkit/blockops.hpp"
#include "drazinkit/intertwine.hpp"
#include "drazinkit/matrix.hpp"
#include "drazinkit/testgen.hpp"

namespace testing_support {

using namespace drazinkit;

inline Gaussian g(long re, long im = 0) { return Gaussian(mpq_class(re), mpq_class(im)); }
inline Gaussian q(long num, long den) { return Gaussian::ratio(num, den); }

// T = M (+) N with M a rotation and N a 2x2 shift; index 2.
inline ExactMatrix rotation_shift_t() { return {{g(0), g(1), g(0), g(0)}, {g(-1), g(0), g(0), g(0)}, {g(0), g(0), g(0), g(1)}, {g(0), g(0), g(0), g(0)}}; }
inline ExactMatrix rotation_shift_a() { return {{g(1), g(0), g(0), g(0)}, {g(1), g(1), g(0), g(1)}, {g(0), g(0), g(0), g(-1)}, {g(0), g(0), g(0), g(0)}}; }
inline ExactMatrix rotation_shift_b() { return {{g(1), g(-1), g(1), g(0)}, {g(0), g(1), g(0), g(0)}, {g(0), g(0), g(0), g(0)}, {g(0), g(0), g(0), g(0)}}; }

// Invertible with T^3 = -I: in the (2,3) class but not (1,1).
inline ExactMatrix order_six_t() { return {{g(0), g(1)}, {g(-1), g(1)}}; }
inline ExactMatrix order_six_td() { return {{g(1), g(-1)}, {g(1), g(0)}}; }

inline BlockTriple<Gaussian> forbidden_coupling_triple() {
  return {order_six_t(), ExactMatrix{{g(0), g(1)}, {g(0), g(1)}}, order_six_t()};
}

inline GenSpec exact_spec(std::uint64_t seed, std::size_t size, std::size_t cap = 2) {
  GenSpec s;
  s.seed = seed;
  s.size = size;
  s.index_cap = cap;
  s.kernel = Kernel::Exact;
  s.entry_bound = 3.0;
  return s;
}

inline GenSpec float_spec(std::uint64_t seed, std::size_t size, std::size_t cap = 2) {
  GenSpec s;
  s.seed = seed;
  s.size = size;
  s.index_cap = cap;
  s.kernel = Kernel::Float;
  s.entry_bound = 2.0;
  return s;
}

inline double relative_distance(const FloatMatrix& a, const FloatMatrix& b) {
  return frobenius_norm(a - b) / std::max(1.0, frobenius_norm(b));
}

}  // namespace testing_support
