#pragma once

#include <cmath>
#include <complex>
#include <concepts>
#include <string_view>

#include "drazinkit/gaussian.hpp"

namespace drazinkit {

using Complex = std::complex<double>;

enum class Kernel { Exact, Float };

std::string_view to_string(Kernel k);

template <class T>
concept KernelScalar = std::same_as<T, Gaussian> || std::same_as<T, Complex>;

template <KernelScalar T>
inline constexpr bool is_exact_v = std::same_as<T, Gaussian>;

template <KernelScalar T>
inline constexpr Kernel kernel_of_v = is_exact_v<T> ? Kernel::Exact : Kernel::Float;

inline Gaussian conjugate(const Gaussian& z) { return z.conj(); }
inline Complex conjugate(const Complex& z) { return std::conj(z); }

inline double magnitude(const Gaussian& z) { return std::sqrt(z.norm().get_d()); }
inline double magnitude(const Complex& z) { return std::abs(z); }

inline double magnitude_squared(const Gaussian& z) { return z.norm().get_d(); }
inline double magnitude_squared(const Complex& z) { return std::norm(z); }

inline Complex to_complex(const Gaussian& z) { return z.to_complex(); }
inline Complex to_complex(const Complex& z) { return z; }

/// Exact zero test; in the float kernel only a literal 0.0 qualifies.
inline bool is_zero(const Gaussian& z) { return z.is_zero(); }
inline bool is_zero(const Complex& z) { return z == Complex{}; }

/// Residual acceptance: r passes against scale s iff r <= abs + rel * s.
/// The exact kernel ignores it and demands exact zero.
struct Tolerance {
  double abs = 0.0;
  double rel = 1e-10;

  bool passes(double residual, double scale) const { return residual <= abs + rel * scale; }

  /// Numerical-rank threshold for small, well-scaled matrices.
  static constexpr Tolerance rank_default() { return {0.0, 1e-10}; }
  /// Threshold for class-membership and property verdicts.
  static constexpr Tolerance verdict_default() { return {0.0, 1e-9}; }
};

}  // namespace drazinkit
