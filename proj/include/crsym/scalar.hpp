#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace crsym {

using Rational = mpq_class;

/// Exact complex number with rational real and imaginary parts.
///
/// Both parts are kept canonical by GMP (lowest terms, positive denominator),
/// so structural equality is mathematical equality.
class Gaussian {
 public:
  Gaussian() = default;
  Gaussian(int v) : re_(v) {}
  Gaussian(long v) : re_(v) {}
  Gaussian(Rational re) : re_(std::move(re)) { re_.canonicalize(); }
  Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Gaussian i() { return Gaussian(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  Gaussian conj() const { return Gaussian(re_, -im_); }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  Gaussian inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    Rational d = norm();
    return Gaussian(re_ / d, -im_ / d);
  }

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
    if (o.is_real()) {
      re_ *= o.re_;
      im_ *= o.re_;
      return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }
  Gaussian& operator/=(const Gaussian& o) { return *this *= o.inverse(); }

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend Gaussian operator-(const Gaussian& a) { return Gaussian(-a.re_, -a.im_); }
  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }

  /// "3/4", "-i", "1/2+3*i"; parseable by the expression grammar when
  /// wrapped in parentheses.
  std::string str() const;

 private:
  Rational re_;
  Rational im_;
};

// Field traits shared by the templated exact linear algebra.
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const Gaussian& x) { return x.is_zero(); }
inline Rational conj(const Rational& x) { return x; }
inline Gaussian conj(const Gaussian& x) { return x.conj(); }
inline Rational inverse(const Rational& x) {
  if (sgn(x) == 0) throw std::domain_error("division by zero");
  return 1 / x;
}
inline Gaussian inverse(const Gaussian& x) { return x.inverse(); }

/// "p/q" (or "p" when integral).
std::string to_string(const Rational& q);
inline std::string to_string(const Gaussian& g) { return g.str(); }

/// Parses "p" or "p/q" with optional leading sign.
Rational parse_rational(const std::string& text);

}  // namespace crsym
