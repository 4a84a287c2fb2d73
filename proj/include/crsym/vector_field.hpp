#pragma once

#include <string>
#include <vector>

#include "crsym/expr.hpp"

namespace crsym {

/// Holomorphic vector field sum_j a_j(z) d/dz_j on C^{n+1}; every
/// coefficient is a polynomial in z_1..z_{n+1} only.
class HoloVectorField {
 public:
  HoloVectorField() = default;
  /// Throws std::invalid_argument on a wrong coefficient count or a
  /// coefficient that involves w, u or an out-of-range z.
  HoloVectorField(int n, std::vector<Poly> coeffs);

  static HoloVectorField zero(int n);
  /// The coordinate field d/dz_j, 1 <= j <= n+1.
  static HoloVectorField partial(int n, int j);
  /// c * d/dz_j.
  static HoloVectorField component(int n, int j, const Poly& c);

  int n() const { return n_; }
  const std::vector<Poly>& coeffs() const { return a_; }
  /// Coefficient of d/dz_j, 1-based.
  const Poly& coeff(int j) const { return a_[static_cast<size_t>(j - 1)]; }
  bool is_zero() const;

  HoloVectorField& operator+=(const HoloVectorField& o);
  HoloVectorField& operator-=(const HoloVectorField& o);
  friend HoloVectorField operator+(HoloVectorField a, const HoloVectorField& b) { return a += b; }
  friend HoloVectorField operator-(HoloVectorField a, const HoloVectorField& b) { return a -= b; }
  friend HoloVectorField operator*(const Gaussian& c, HoloVectorField v);
  friend bool operator==(const HoloVectorField& a, const HoloVectorField& b) {
    return a.n_ == b.n_ && a.a_ == b.a_;
  }
  friend bool operator!=(const HoloVectorField& a, const HoloVectorField& b) { return !(a == b); }

  /// "a1 ; a2 ; ... ; a(n+1)" in the expression grammar.
  std::string str() const;

 private:
  int n_ = 0;
  std::vector<Poly> a_;
};

/// [V,W]^k = sum_j V^j dW^k/dz_j - W^j dV^k/dz_j.
HoloVectorField bracket(const HoloVectorField& v, const HoloVectorField& w);

struct LabeledField {
  std::string label;
  HoloVectorField field;
};

using FieldBasis = std::vector<LabeledField>;

}  // namespace crsym
