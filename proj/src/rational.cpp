#include "atk/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace atk {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("division by zero rational");
  v_ /= o.v_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  if (!valid_integer_token(num))
    throw std::invalid_argument("malformed rational '" + text + "'");
  Rational r;
  if (slash == std::string::npos) {
    r.v_ = mpq_class(mpz_class(num));
    return r;
  }
  const std::string den = text.substr(slash + 1);
  if (!valid_integer_token(den))
    throw std::invalid_argument("malformed rational '" + text + "'");
  mpz_class d(den);
  if (sgn(d) == 0)
    throw std::invalid_argument("zero denominator in rational '" + text + "'");
  r.v_ = mpq_class(mpz_class(num), d);
  r.v_.canonicalize();
  return r;
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace atk
