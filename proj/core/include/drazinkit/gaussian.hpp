#pragma once

#include <complex>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace drazinkit {

/// Exact complex number re + i*im with re, im in Q.
///
/// GMP keeps each rational part in lowest terms with a positive denominator,
/// so two Gaussians compare equal iff they are the same number.
class Gaussian {
 public:
  Gaussian() = default;
  Gaussian(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  Gaussian(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Gaussian i() { return Gaussian(0, 1); }
  static Gaussian ratio(long num, long den) { return Gaussian(mpq_class(num, den)); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  Gaussian conj() const { return Gaussian(re_, -im_); }
  /// |z|^2, exact.
  mpq_class norm() const { return mpq_class(re_ * re_ + im_ * im_); }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  Gaussian operator-() const { return Gaussian(-re_, -im_); }

  Gaussian& operator+=(const Gaussian& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Gaussian& operator-=(const Gaussian& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Gaussian& operator*=(const Gaussian& o) {
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  Gaussian& operator/=(const Gaussian& o);

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Gaussian& z);

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// Parses "p/q" or "p" into a canonical rational. Throws Error(Schema).
mpq_class parse_rational(std::string_view text);

/// Always "p/q" with q >= 1, e.g. "3/1", "-1/2".
std::string rational_string(const mpq_class& q);

}  // namespace drazinkit
