#include "drazinkit/gaussian.hpp"

#include "drazinkit/errors.hpp"
#include "drazinkit/scalar.hpp"

namespace drazinkit {

Gaussian& Gaussian::operator/=(const Gaussian& o) {
  if (o.is_zero()) throw Error(ErrorCode::SingularMatrix, "division by zero Gaussian rational");
  const mpq_class d = o.norm();
  mpq_class re = (re_ * o.re_ + im_ * o.im_) / d;
  mpq_class im = (im_ * o.re_ - re_ * o.im_) / d;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Gaussian& z) {
  if (sgn(z.im_) == 0) return os << z.re_;
  if (sgn(z.re_) == 0) return os << z.im_ << "i";
  os << z.re_ << (sgn(z.im_) < 0 ? "-" : "+");
  return os << abs(z.im_) << "i";
}

mpq_class parse_rational(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw Error(ErrorCode::Schema, "empty rational");
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t k = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (k == t.size()) return false;
    for (; k < t.size(); ++k)
      if (t[k] < '0' || t[k] > '9') return false;
    return true;
  };
  mpq_class q;
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw Error(ErrorCode::Schema, "bad rational '" + s + "'");
    q = mpq_class(mpz_class(s[0] == '+' ? s.substr(1) : s, 10));
  } else {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
      throw Error(ErrorCode::Schema, "bad rational '" + s + "'");
    }
    if (num[0] == '+') num = num.substr(1);
    const mpz_class d(den, 10);
    if (d == 0) throw Error(ErrorCode::Schema, "zero denominator in '" + s + "'");
    q = mpq_class(mpz_class(num, 10), d);
  }
  q.canonicalize();
  return q;
}

std::string rational_string(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string_view to_string(Kernel k) { return k == Kernel::Exact ? "exact" : "float"; }

}  // namespace drazinkit
