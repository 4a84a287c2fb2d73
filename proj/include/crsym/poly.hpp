#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crsym/scalar.hpp"

namespace crsym {

inline constexpr int kMaxSlots = 32;

/// Exponent vector over at most kMaxSlots slots, ordered graded
/// lexicographically (total degree first, then slot 0 downward).
class Monomial {
 public:
  Monomial() { e_.fill(0); }

  static Monomial unit(int slot, int power = 1);

  int operator[](int slot) const { return e_[static_cast<size_t>(slot)]; }
  int degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }
  void set(int slot, int power);

  /// Highest slot with a nonzero exponent, or -1.
  int max_slot() const;

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// o / this; requires divides(o).
  Monomial quotient_of(const Monomial& o) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.deg_ == b.deg_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.deg_ != b.deg_) return a.deg_ < b.deg_;
    // Larger exponent in an earlier slot ranks higher.
    return a.e_ < b.e_;
  }

  size_t hash() const;

 private:
  std::array<uint8_t, kMaxSlots> e_;
  uint16_t deg_ = 0;
};

struct MonomialHash {
  size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Roster slots shared by every symbolic object: u, then interleaved
// holomorphic/antiholomorphic variables z_j, w_j (w_j stands for conj(z_j)).
inline constexpr int kSlotU = 0;
inline constexpr int slot_z(int j) { return 2 * j - 1; }
inline constexpr int slot_w(int j) { return 2 * j; }
inline constexpr int kMaxVarIndex = (kMaxSlots - 1) / 2;

/// Slot of the conjugate variable (u is self-conjugate).
inline constexpr int conjugate_slot(int slot) {
  if (slot == kSlotU) return kSlotU;
  return (slot % 2 == 1) ? slot + 1 : slot - 1;
}

std::string slot_name(int slot);

/// Sparse multivariate polynomial over Gaussian rationals, keyed by roster
/// monomials. No zero coefficients are stored.
class Poly {
 public:
  using Terms = std::map<Monomial, Gaussian>;

  Poly() = default;
  Poly(const Gaussian& c);
  Poly(int c) : Poly(Gaussian(c)) {}
  static Poly monomial(const Monomial& m, const Gaussian& c = Gaussian(1));
  static Poly variable(int slot) { return monomial(Monomial::unit(slot)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Gaussian constant_term() const;
  Gaussian coefficient(const Monomial& m) const;
  int total_degree() const;
  /// Largest monomial under the graded order; requires !is_zero().
  const std::pair<const Monomial, Gaussian>& leading() const { return *terms_.rbegin(); }
  bool depends_on(int slot) const;
  int degree_in(int slot) const;

  void add_term(const Monomial& m, const Gaussian& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Gaussian& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Gaussian& c) { return a *= c; }
  friend Poly operator*(const Gaussian& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(int k) const;
  Poly diff(int slot) const;
  /// Swaps z_j <-> w_j and conjugates every coefficient.
  Poly bar() const;
  /// Multiplies every monomial by m.
  Poly shifted(const Monomial& m) const;

  /// Exact quotient by d if d divides this polynomial, else nullopt.
  std::optional<Poly> divide_exact(const Poly& d) const;

  /// Real and imaginary coefficient parts (both with rational coefficients
  /// stored as Gaussians with zero imaginary part).
  Poly real_part_coeffs() const;
  Poly imag_part_coeffs() const;

  /// Grammar-compatible rendering ("0" for the zero polynomial).
  std::string str() const;

 private:
  Terms terms_;
};

/// "z1^2*conj(z2)*u"; empty for the unit monomial.
std::string render_monomial(const Monomial& m);

/// Renders one term; shared by Poly and Expr printing. `first` controls
/// whether a leading '+' is emitted.
std::string render_term(const Gaussian& c, const std::string& factors, bool first);

}  // namespace crsym
