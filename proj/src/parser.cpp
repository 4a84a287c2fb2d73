#include "crsym/parser.hpp"

#include <cctype>

namespace crsym {

namespace {

class Parser {
 public:
  Parser(const std::string& text, VarTable& vars) : s_(text), vars_(vars) {}

  Expr parse() {
    Expr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string digits() {
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  int nat() {
    size_t at = pos_;
    std::string d = digits();
    if (d.empty()) fail("expected a natural number");
    if (d.size() > 6) throw ParseError(at, "number too large");
    return std::stoi(d);
  }

  Expr expr() {
    skip();
    bool neg = false;
    if (accept('-')) {
      neg = true;
    } else {
      accept('+');
    }
    Expr acc = term();
    if (neg) acc = -acc;
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  Expr term() {
    Expr acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Expr factor() {
    Expr b = base();
    if (accept('^')) b = b.pow(nat());
    return b;
  }

  Expr parenthesized() {
    expect('(');
    Expr e = expr();
    expect(')');
    return e;
  }

  Expr base() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        size_t at = pos_;
        std::string den = digits();
        if (den.empty()) fail("expected a denominator");
        Rational q(num + "/" + den);
        if (q.get_den() == 0) throw ParseError(at, "zero denominator");
        q.canonicalize();
        return Expr(Gaussian(q));
      }
      return Expr(Gaussian(Rational(num)));
    }
    if (c == '(') return parenthesized();
    if (!std::isalpha(static_cast<unsigned char>(c))) fail("unexpected '" + std::string(1, c) + "'");
    size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string word = s_.substr(start, pos_ - start);
    if (word == "abs" && pos_ < s_.size() && s_[pos_] == '2') {
      ++pos_;
      word = "abs2";
    }
    if (word == "z") {
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        pos_ = start;
        fail("unknown variable 'z'");
      }
      int j = nat();
      if (j < 1 || j > vars_.n() + 1) {
        pos_ = start;
        fail("unknown variable 'z" + std::to_string(j) + "' (n = " + std::to_string(vars_.n()) + ")");
      }
      return Expr::variable(slot_z(j));
    }
    if (word == "u") return Expr::variable(kSlotU);
    if (word == "i") return Expr(Gaussian::i());
    if (word == "conj") return parenthesized().bar();
    if (word == "abs2") {
      Expr e = parenthesized();
      return e * e.bar();
    }
    if (word == "Re") {
      Expr e = parenthesized();
      return Expr(Gaussian(Rational(1, 2))) * (e + e.bar());
    }
    if (word == "Im") {
      Expr e = parenthesized();
      // (e - bar e) / (2i) = -i/2 (e - bar e)
      return Expr(Gaussian(Rational(0), Rational(-1, 2))) * (e - e.bar());
    }
    if (word == "log") {
      size_t at = pos_;
      Expr e = parenthesized();
      if (!e.is_polynomial()) throw ParseError(at, "log argument must be a polynomial");
      Poly q = e.as_poly();
      if (q.is_constant()) throw ParseError(at, "log of a constant is not supported");
      if (q.bar() != q) throw ParseError(at, "log argument " + q.str() + " is not bar-invariant");
      int m = vars_.intern_log(q);
      return Expr::log_symbol(m, vars_.logs());
    }
    pos_ = start;
    fail("unknown identifier '" + word + "'");
  }

  const std::string& s_;
  VarTable& vars_;
  size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(const std::string& text, VarTable& vars) { return Parser(text, vars).parse(); }

}  // namespace crsym
