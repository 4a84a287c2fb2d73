#include "crsym/vector_field.hpp"

#include <stdexcept>

namespace crsym {

HoloVectorField::HoloVectorField(int n, std::vector<Poly> coeffs) : n_(n), a_(std::move(coeffs)) {
  if (n < 1) throw std::invalid_argument("vector field dimension must be positive");
  if (static_cast<int>(a_.size()) != n + 1) {
    throw std::invalid_argument("expected " + std::to_string(n + 1) + " coefficients, got " +
                                std::to_string(a_.size()));
  }
  for (const Poly& p : a_) {
    for (const auto& [m, c] : p.terms()) {
      int top = m.max_slot();
      for (int s = 0; s <= top; ++s) {
        if (m[s] == 0) continue;
        if (s == kSlotU || s % 2 == 0) {
          throw std::invalid_argument("coefficient " + p.str() + " is not holomorphic");
        }
        if ((s + 1) / 2 > n + 1) throw std::invalid_argument("coefficient " + p.str() + " uses z beyond n+1");
      }
    }
  }
}

HoloVectorField HoloVectorField::zero(int n) {
  return HoloVectorField(n, std::vector<Poly>(static_cast<size_t>(n + 1)));
}

HoloVectorField HoloVectorField::partial(int n, int j) { return component(n, j, Poly(1)); }

HoloVectorField HoloVectorField::component(int n, int j, const Poly& c) {
  if (j < 1 || j > n + 1) throw std::out_of_range("component index out of range");
  std::vector<Poly> a(static_cast<size_t>(n + 1));
  a[static_cast<size_t>(j - 1)] = c;
  return HoloVectorField(n, std::move(a));
}

bool HoloVectorField::is_zero() const {
  for (const Poly& p : a_) {
    if (!p.is_zero()) return false;
  }
  return true;
}

HoloVectorField& HoloVectorField::operator+=(const HoloVectorField& o) {
  if (o.n_ != n_) throw std::invalid_argument("vector field dimension mismatch");
  for (size_t j = 0; j < a_.size(); ++j) a_[j] += o.a_[j];
  return *this;
}

HoloVectorField& HoloVectorField::operator-=(const HoloVectorField& o) {
  if (o.n_ != n_) throw std::invalid_argument("vector field dimension mismatch");
  for (size_t j = 0; j < a_.size(); ++j) a_[j] -= o.a_[j];
  return *this;
}

HoloVectorField operator*(const Gaussian& c, HoloVectorField v) {
  for (Poly& p : v.a_) p *= c;
  return v;
}

std::string HoloVectorField::str() const {
  std::string out;
  for (size_t j = 0; j < a_.size(); ++j) {
    if (j > 0) out += " ; ";
    out += a_[j].str();
  }
  return out;
}

HoloVectorField bracket(const HoloVectorField& v, const HoloVectorField& w) {
  if (v.n() != w.n()) throw std::invalid_argument("vector field dimension mismatch");
  const int n = v.n();
  std::vector<Poly> out(static_cast<size_t>(n + 1));
  for (int k = 1; k <= n + 1; ++k) {
    Poly acc;
    for (int j = 1; j <= n + 1; ++j) {
      const int s = slot_z(j);
      if (!v.coeff(j).is_zero()) acc += v.coeff(j) * w.coeff(k).diff(s);
      if (!w.coeff(j).is_zero()) acc -= w.coeff(j) * v.coeff(k).diff(s);
    }
    out[static_cast<size_t>(k - 1)] = std::move(acc);
  }
  return HoloVectorField(n, std::move(out));
}

}  // namespace crsym
