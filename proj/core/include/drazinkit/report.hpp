#pragma once

#include <map>
#include <string>

#include "drazinkit/matrix.hpp"

namespace drazinkit {

/// Named verdicts with matching residuals. Residuals are stored relative to
/// the scale they were checked against (raw / scale, or raw when scale is 0),
/// so a float verdict is true iff tol.passes(raw, scale). Exact-kernel
/// verdicts are true iff the residual matrix is exactly zero.
class Report {
 public:
  explicit Report(Kernel kernel) : kernel_(kernel) {}

  Kernel kernel() const { return kernel_; }

  void add(const std::string& name, bool verdict, double residual) {
    verdicts_[name] = verdict;
    residuals_[name] = residual;
  }

  /// A logical verdict; residual 0 when true, 1 when false.
  void flag(const std::string& name, bool verdict) { add(name, verdict, verdict ? 0.0 : 1.0); }

  template <KernelScalar T>
  bool check(const std::string& name, const Matrix<T>& diff, double scale, const Tolerance& tol) {
    const double raw = frobenius_norm(diff);
    const double rel = scale > 0.0 ? raw / scale : raw;
    bool ok;
    if constexpr (is_exact_v<T>) {
      ok = diff.is_zero();
    } else {
      ok = tol.passes(raw, scale);
    }
    add(name, ok, rel);
    return ok;
  }

  /// Throws Error(InvalidArgument) for an unknown name.
  bool verdict(const std::string& name) const;
  double residual(const std::string& name) const;
  bool has(const std::string& name) const { return verdicts_.count(name) != 0; }

  bool all() const {
    for (const auto& [_, v] : verdicts_)
      if (!v) return false;
    return true;
  }

  /// Copies every entry of `other` under `prefix + name`.
  void merge(const Report& other, const std::string& prefix);

  const std::map<std::string, bool>& verdicts() const { return verdicts_; }
  const std::map<std::string, double>& residuals() const { return residuals_; }

 private:
  Kernel kernel_;
  std::map<std::string, bool> verdicts_;
  std::map<std::string, double> residuals_;
};

}  // namespace drazinkit
