#include "wpt/rational.hpp"

#include <cctype>

namespace wpt {

namespace {

std::string strip(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

Int parse_integer(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i == s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
      throw std::invalid_argument("not an integer: '" + s + "'");
    }
  }
  return Int(s);
}

}  // namespace

Rat parse_rat(const std::string& text) {
  const std::string s = strip(text);
  const std::size_t slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_integer(s));
  Int num = parse_integer(strip(s.substr(0, slash)));
  Int den = parse_integer(strip(s.substr(slash + 1)));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rat(num, den);
}

std::string format_rat(const Rat& value) {
  const Int num = numerator(value);
  const Int den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace wpt
