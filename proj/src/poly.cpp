#include "crsym/poly.hpp"

#include <stdexcept>

namespace crsym {

Monomial Monomial::unit(int slot, int power) {
  Monomial m;
  m.set(slot, power);
  return m;
}

void Monomial::set(int slot, int power) {
  if (slot < 0 || slot >= kMaxSlots) throw std::out_of_range("monomial slot out of range");
  if (power < 0 || power > 255) throw std::overflow_error("monomial exponent out of range");
  deg_ = static_cast<uint16_t>(deg_ - e_[static_cast<size_t>(slot)] + power);
  e_[static_cast<size_t>(slot)] = static_cast<uint8_t>(power);
}

int Monomial::max_slot() const {
  for (int s = kMaxSlots - 1; s >= 0; --s)
    if (e_[static_cast<size_t>(s)] != 0) return s;
  return -1;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (size_t s = 0; s < e_.size(); ++s) {
    int p = e_[s] + o.e_[s];
    if (p > 255) throw std::overflow_error("monomial exponent out of range");
    r.e_[s] = static_cast<uint8_t>(p);
  }
  r.deg_ = static_cast<uint16_t>(deg_ + o.deg_);
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (deg_ > o.deg_) return false;
  for (size_t s = 0; s < e_.size(); ++s)
    if (e_[s] > o.e_[s]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
  Monomial r;
  for (size_t s = 0; s < e_.size(); ++s) r.e_[s] = static_cast<uint8_t>(o.e_[s] - e_[s]);
  r.deg_ = static_cast<uint16_t>(o.deg_ - deg_);
  return r;
}

size_t Monomial::hash() const {
  size_t h = 1469598103934665603ull;
  for (uint8_t b : e_) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h;
}

std::string slot_name(int slot) {
  if (slot == kSlotU) return "u";
  int j = (slot + 1) / 2;
  if (slot % 2 == 1) return "z" + std::to_string(j);
  return "conj(z" + std::to_string(j) + ")";
}

Poly::Poly(const Gaussian& c) {
  if (!c.is_zero()) terms_.emplace(Monomial(), c);
}

Poly Poly::monomial(const Monomial& m, const Gaussian& c) {
  Poly p;
  if (!c.is_zero()) p.terms_.emplace(m, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Gaussian Poly::constant_term() const { return coefficient(Monomial()); }

Gaussian Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Gaussian() : it->second;
}

int Poly::total_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

bool Poly::depends_on(int slot) const {
  for (const auto& [m, c] : terms_)
    if (m[slot] != 0) return true;
  return false;
}

int Poly::degree_in(int slot) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[slot]);
  return d;
}

void Poly::add_term(const Monomial& m, const Gaussian& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Gaussian& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly operator-(const Poly& a) {
  Poly r = a;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  if (a.is_zero() || b.is_zero()) return r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Poly Poly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative polynomial power");
  Poly result(1);
  Poly base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Poly Poly::diff(int slot) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    int p = m[slot];
    if (p == 0) continue;
    Monomial d = m;
    d.set(slot, p - 1);
    r.add_term(d, c * Gaussian(p));
  }
  return r;
}

Poly Poly::bar() const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    Monomial b;
    for (int s = 0; s < kMaxSlots; ++s)
      if (m[s] != 0) b.set(conjugate_slot(s), m[s]);
    r.terms_.emplace(b, c.conj());
  }
  return r;
}

Poly Poly::shifted(const Monomial& m) const {
  Poly r;
  for (const auto& [mm, c] : terms_) r.terms_.emplace(mm * m, c);
  return r;
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  const auto& [md, cd] = d.leading();
  Gaussian inv = cd.inverse();
  Poly rem = *this;
  Poly q;
  while (!rem.is_zero()) {
    const auto& [m, c] = rem.leading();
    if (!md.divides(m)) return std::nullopt;
    Monomial qm = md.quotient_of(m);
    Gaussian qc = c * inv;
    q.add_term(qm, qc);
    rem -= d.shifted(qm) * qc;
  }
  return q;
}

Poly Poly::real_part_coeffs() const {
  Poly r;
  for (const auto& [m, c] : terms_) r.add_term(m, Gaussian(c.re()));
  return r;
}

Poly Poly::imag_part_coeffs() const {
  Poly r;
  for (const auto& [m, c] : terms_) r.add_term(m, Gaussian(c.im()));
  return r;
}

std::string render_term(const Gaussian& c, const std::string& factors, bool first) {
  bool negative = false;
  std::string body;
  if (c.is_real()) {
    negative = sgn(c.re()) < 0;
    Rational a = abs(c.re());
    if (factors.empty()) {
      body = to_string(a);
    } else if (a == 1) {
      body = factors;
    } else {
      body = to_string(a) + "*" + factors;
    }
  } else if (sgn(c.re()) == 0) {
    negative = sgn(c.im()) < 0;
    Rational a = abs(c.im());
    body = (a == 1) ? "i" : to_string(a) + "*i";
    if (!factors.empty()) body += "*" + factors;
  } else {
    body = "(" + c.str() + ")";
    if (!factors.empty()) body += "*" + factors;
  }
  if (first) return (negative ? "-" : "") + body;
  return (negative ? " - " : " + ") + body;
}

std::string render_monomial(const Monomial& m) {
  std::string out;
  for (int s = 0; s < kMaxSlots; ++s) {
    int p = m[s];
    if (p == 0) continue;
    if (!out.empty()) out += "*";
    out += slot_name(s);
    if (p > 1) out += "^" + std::to_string(p);
  }
  return out;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    out += render_term(it->second, render_monomial(it->first), first);
    first = false;
  }
  return out;
}

}  // namespace crsym
