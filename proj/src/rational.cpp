#include "conjlim/rational.hpp"

#include <ostream>

#include "conjlim/error.hpp"

namespace conjlim {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw Error("rational with zero denominator");
  v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  const auto slash = text.find('/');
  const std::string num_part = text.substr(0, slash);
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  if (!is_int(num_part)) throw ParseError("bad rational literal '" + text + "'");
  mpq_class v;
  if (slash == std::string::npos) {
    v = mpq_class(mpz_class(num_part));
  } else {
    const std::string den_part = text.substr(slash + 1);
    if (!is_int(den_part) || den_part[0] == '-')
      throw ParseError("bad rational literal '" + text + "'");
    mpz_class den(den_part);
    if (den == 0) throw ParseError("zero denominator in '" + text + "'");
    v = mpq_class(mpz_class(num_part), den);
    v.canonicalize();
  }
  return Rational(v);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace conjlim
