#include "crsym/scalar.hpp"

#include <cctype>

namespace crsym {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string Gaussian::str() const {
  if (is_real()) return to_string(re_);
  std::string im_part;
  Rational a = abs(im_);
  if (a == 1) {
    im_part = "i";
  } else {
    im_part = to_string(a) + "*i";
  }
  if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + im_part;
  return to_string(re_) + (sgn(im_) < 0 ? "-" : "+") + im_part;
}

Rational parse_rational(const std::string& text) {
  size_t pos = 0;
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty rational");
  if (s[0] == '+' || s[0] == '-') pos = 1;
  bool slash = false;
  bool digit = false;
  for (size_t k = pos; k < s.size(); ++k) {
    if (s[k] == '/') {
      if (slash || !digit) throw std::invalid_argument("malformed rational '" + text + "'");
      slash = true;
      digit = false;
    } else if (std::isdigit(static_cast<unsigned char>(s[k]))) {
      digit = true;
    } else {
      throw std::invalid_argument("malformed rational '" + text + "'");
    }
  }
  if (!digit) throw std::invalid_argument("malformed rational '" + text + "'");
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational '" + text + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

}  // namespace crsym
