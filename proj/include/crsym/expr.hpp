#pragma once

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "crsym/poly.hpp"

namespace crsym {

using LogArgs = std::vector<Poly>;
using LogArgsPtr = std::shared_ptr<const LogArgs>;

/// Variable roster for CR dimension n: z_1..z_{n+1}, their conjugates
/// w_1..w_{n+1}, the real variable u, and the registered log symbols
/// L_m = log(Q_m).
///
/// The log list is append-only and copy-on-write: expressions keep a
/// snapshot pointer, and later registrations never renumber earlier symbols.
class VarTable {
 public:
  explicit VarTable(int n);

  int n() const { return n_; }
  const LogArgsPtr& logs() const { return logs_; }
  int log_count() const { return static_cast<int>(logs_->size()); }
  const Poly& log_arg(int m) const { return (*logs_)[static_cast<size_t>(m)]; }

  /// Index of the symbol log(q), registering it when new. Throws
  /// std::invalid_argument if q is constant or not bar-invariant.
  int intern_log(const Poly& q);

  /// z_j / w_j with 1 <= j <= n+1, or u.
  bool valid_slot(int slot) const;

 private:
  int n_;
  LogArgsPtr logs_;
};

/// Canonical symbolic expression: a polynomial in the log symbols whose
/// coefficients are fractions N / prod_m Q_m^{d_m} with N a roster
/// polynomial not divisible by any Q_m with d_m > 0.
///
/// Denominators only ever arise from differentiating log symbols, so they
/// are always monomials in the registered log arguments.
class Expr {
 public:
  struct Fraction {
    Poly num;
    Monomial den;  // exponent of Q_m in slot m
    friend bool operator==(const Fraction& a, const Fraction& b) {
      return a.num == b.num && a.den == b.den;
    }
  };
  using Terms = std::map<Monomial, Fraction>;  // keyed by log-symbol exponents

  Expr() = default;
  Expr(const Gaussian& c) : Expr(Poly(c)) {}
  Expr(int c) : Expr(Poly(c)) {}
  Expr(const Poly& p);

  static Expr variable(int slot) { return Expr(Poly::variable(slot)); }
  static Expr log_symbol(int m, LogArgsPtr logs);

  const Terms& terms() const { return terms_; }
  const LogArgsPtr& logs() const { return logs_; }

  bool is_zero() const { return terms_.empty(); }
  /// No log symbols and no denominators.
  bool is_polynomial() const;
  /// Throws std::logic_error unless is_polynomial().
  Poly as_poly() const;
  /// True if the slot occurs in a numerator or in an active log argument.
  bool depends_on(int slot) const;
  int max_den_exponent() const;
  int log_degree() const;

  Expr& operator+=(const Expr& o);
  Expr& operator-=(const Expr& o);
  friend Expr operator+(Expr a, const Expr& b) { return a += b; }
  friend Expr operator-(Expr a, const Expr& b) { return a -= b; }
  friend Expr operator-(const Expr& a);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend bool operator==(const Expr& a, const Expr& b);
  friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

  Expr pow(int k) const;

  /// Complex conjugation: z_j <-> w_j, scalars conjugated, u and L_m fixed.
  Expr bar() const;
  /// Partial derivative; d L_m / dv = (d Q_m / dv) / Q_m.
  Expr diff(int slot) const;
  /// Simultaneous substitution slot -> expression, then canonicalization.
  /// Throws std::invalid_argument if a non-identity binding would have to
  /// rewrite the argument of a log symbol or denominator.
  Expr substitute(const std::map<int, Expr>& bindings) const;

  /// Value at the origin with every L_m evaluated as log(Q_m(0)); requires
  /// Q_m(0) = 1 for symbols that occur.
  Gaussian value_at_origin() const;

  /// Coefficients of prod_m Q_m^D * e over every symbol of `table`, keyed
  /// by (log exponents, roster monomial). Requires D >= max_den_exponent().
  std::map<std::pair<Monomial, Monomial>, Gaussian> cleared(int D, const LogArgsPtr& table) const;

  /// Grammar-compatible text when the expression has no denominators;
  /// denominators are shown as "/(...)^k".
  std::string str() const;

 private:
  void add_fraction(const Monomial& key, const Fraction& f);
  void reduce(Fraction& f) const;
  const Poly& log_arg(int m) const;

  Terms terms_;
  LogArgsPtr logs_;
};

inline Expr operator*(const Gaussian& c, const Expr& e) { return Expr(c) * e; }

/// Picks the richer of two compatible log tables; throws if neither is a
/// prefix of the other.
LogArgsPtr merge_logs(const LogArgsPtr& a, const LogArgsPtr& b);

inline Expr bar(const Expr& e) { return e.bar(); }
inline Expr diff(const Expr& e, int slot) { return e.diff(slot); }
inline Expr substitute(const Expr& e, const std::map<int, Expr>& bindings) {
  return e.substitute(bindings);
}
inline bool is_zero(const Expr& e) { return e.is_zero(); }

}  // namespace crsym
