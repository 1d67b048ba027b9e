#include "dspec/scalar.hpp"

#include <cctype>

#include "dspec/error.hpp"

namespace dspec {

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& value) {
  Rational q = value;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Gaussian& g) {
  std::string out = to_string(g.re);
  if (sgn(g.im) < 0) {
    out += "-" + to_string(Rational(-g.im));
  } else {
    out += "+" + to_string(g.im);
  }
  return out + "*i";
}

Rational parse_rational(const std::string& text) {
  std::string t = text;
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  auto slash = t.find('/');
  auto digits = [](const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && s[0] == '-') i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  std::string num = t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!digits(num, true) || !digits(den, false)) throw InvalidArgument("not a rational: '" + text + "'");
  Integer d(den);
  if (d == 0) throw InvalidArgument("zero denominator in '" + text + "'");
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

}  // namespace dspec
