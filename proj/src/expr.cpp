#include "crsym/expr.hpp"

#include <stdexcept>

namespace crsym {

VarTable::VarTable(int n) : n_(n), logs_(std::make_shared<const LogArgs>()) {
  if (n < 1) throw std::invalid_argument("CR dimension must be positive");
  if (n + 1 > kMaxVarIndex) {
    throw std::invalid_argument("CR dimension " + std::to_string(n) + " exceeds the supported maximum " +
                                std::to_string(kMaxVarIndex - 1));
  }
}

int VarTable::intern_log(const Poly& q) {
  if (q.is_constant()) throw std::invalid_argument("log of a constant is not supported");
  if (q.bar() != q) throw std::invalid_argument("log argument " + q.str() + " is not bar-invariant");
  for (int m = 0; m < log_count(); ++m)
    if (log_arg(m) == q) return m;
  if (log_count() >= kMaxSlots) throw std::length_error("too many log symbols");
  auto next = std::make_shared<LogArgs>(*logs_);
  next->push_back(q);
  logs_ = std::move(next);
  return log_count() - 1;
}

bool VarTable::valid_slot(int slot) const {
  if (slot == kSlotU) return true;
  int j = (slot + 1) / 2;
  return slot > 0 && j >= 1 && j <= n_ + 1;
}

LogArgsPtr merge_logs(const LogArgsPtr& a, const LogArgsPtr& b) {
  if (a == b) return a;
  if (!a || a->empty()) return b;
  if (!b || b->empty()) return a;
  const LogArgsPtr& small = a->size() <= b->size() ? a : b;
  const LogArgsPtr& large = a->size() <= b->size() ? b : a;
  for (size_t m = 0; m < small->size(); ++m)
    if ((*small)[m] != (*large)[m])
      throw std::invalid_argument("expressions come from incompatible variable tables");
  return large;
}

Expr::Expr(const Poly& p) {
  if (!p.is_zero()) terms_.emplace(Monomial(), Fraction{p, Monomial()});
}

Expr Expr::log_symbol(int m, LogArgsPtr logs) {
  if (!logs || m < 0 || m >= static_cast<int>(logs->size()))
    throw std::out_of_range("unknown log symbol");
  Expr e;
  e.logs_ = std::move(logs);
  e.terms_.emplace(Monomial::unit(m), Fraction{Poly(1), Monomial()});
  return e;
}

const Poly& Expr::log_arg(int m) const {
  if (!logs_ || m >= static_cast<int>(logs_->size())) throw std::logic_error("log symbol without a table");
  return (*logs_)[static_cast<size_t>(m)];
}

bool Expr::is_polynomial() const {
  for (const auto& [key, f] : terms_)
    if (!key.is_one() || !f.den.is_one()) return false;
  return true;
}

Poly Expr::as_poly() const {
  if (!is_polynomial()) throw std::logic_error("expression is not a polynomial: " + str());
  if (terms_.empty()) return Poly();
  return terms_.begin()->second.num;
}

bool Expr::depends_on(int slot) const {
  for (const auto& [key, f] : terms_) {
    if (f.num.depends_on(slot)) return true;
    for (int m = 0; m < kMaxSlots; ++m)
      if ((key[m] > 0 || f.den[m] > 0) && log_arg(m).depends_on(slot)) return true;
  }
  return false;
}

int Expr::max_den_exponent() const {
  int d = 0;
  for (const auto& [key, f] : terms_)
    for (int m = 0; m < kMaxSlots; ++m) d = std::max(d, f.den[m]);
  return d;
}

int Expr::log_degree() const {
  int d = 0;
  for (const auto& [key, f] : terms_) d = std::max(d, key.degree());
  return d;
}

void Expr::reduce(Fraction& f) const {
  if (f.num.is_zero()) {
    f.den = Monomial();
    return;
  }
  for (int m = 0; m < kMaxSlots; ++m) {
    while (f.den[m] > 0) {
      auto q = f.num.divide_exact(log_arg(m));
      if (!q) break;
      f.num = std::move(*q);
      f.den.set(m, f.den[m] - 1);
    }
  }
}

void Expr::add_fraction(const Monomial& key, const Fraction& f) {
  if (f.num.is_zero()) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, f);
    return;
  }
  Fraction& g = it->second;
  if (g.den == f.den) {
    g.num += f.num;
  } else {
    Monomial common;
    Poly a = g.num;
    Poly b = f.num;
    for (int m = 0; m < kMaxSlots; ++m) {
      int dg = g.den[m];
      int df = f.den[m];
      int d = std::max(dg, df);
      if (d == 0) continue;
      common.set(m, d);
      if (d > dg) a = a * log_arg(m).pow(d - dg);
      if (d > df) b = b * log_arg(m).pow(d - df);
    }
    g.num = a + b;
    g.den = common;
  }
  reduce(g);
  if (g.num.is_zero()) terms_.erase(it);
}

Expr& Expr::operator+=(const Expr& o) {
  logs_ = merge_logs(logs_, o.logs_);
  for (const auto& [key, f] : o.terms_) add_fraction(key, f);
  return *this;
}

Expr& Expr::operator-=(const Expr& o) { return *this += -o; }

Expr operator-(const Expr& a) {
  Expr r = a;
  for (auto& [key, f] : r.terms_) f.num = -f.num;
  return r;
}

Expr operator*(const Expr& a, const Expr& b) {
  Expr r;
  r.logs_ = merge_logs(a.logs_, b.logs_);
  for (const auto& [ka, fa] : a.terms_) {
    for (const auto& [kb, fb] : b.terms_) {
      Expr::Fraction f{fa.num * fb.num, fa.den * fb.den};
      r.reduce(f);
      r.add_fraction(ka * kb, f);
    }
  }
  return r;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.terms_ != b.terms_) return false;
  if (a.terms_.empty()) return true;
  // Same terms over different tables are equal only if the tables agree.
  try {
    merge_logs(a.logs_, b.logs_);
  } catch (const std::invalid_argument&) {
    return false;
  }
  return true;
}

Expr Expr::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  Expr result(1);
  result.logs_ = logs_;
  Expr base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Expr Expr::bar() const {
  // Log arguments are bar-invariant, so keys and denominators are fixed.
  Expr r;
  r.logs_ = logs_;
  for (const auto& [key, f] : terms_) r.terms_.emplace(key, Fraction{f.num.bar(), f.den});
  return r;
}

Expr Expr::diff(int slot) const {
  Expr r;
  r.logs_ = logs_;
  for (const auto& [key, f] : terms_) {
    // d(N / Q^d) = N_v / Q^d - sum_m d_m N Q_m,v / Q^{d + e_m}
    Fraction main{f.num.diff(slot), f.den};
    reduce(main);
    r.add_fraction(key, main);
    for (int m = 0; m < kMaxSlots; ++m) {
      int dm = f.den[m];
      int lm = key[m];
      if (dm == 0 && lm == 0) continue;
      Poly qv = log_arg(m).diff(slot);
      if (qv.is_zero()) continue;
      Monomial den = f.den;
      den.set(m, dm + 1);
      if (dm > 0) {
        Fraction t{f.num * qv * Gaussian(-dm), den};
        reduce(t);
        r.add_fraction(key, t);
      }
      if (lm > 0) {
        Monomial k2 = key;
        k2.set(m, lm - 1);
        Fraction t{f.num * qv * Gaussian(lm), den};
        reduce(t);
        r.add_fraction(k2, t);
      }
    }
  }
  return r;
}

Expr Expr::substitute(const std::map<int, Expr>& bindings) const {
  std::vector<int> moved;
  LogArgsPtr logs = logs_;
  for (const auto& [slot, value] : bindings) {
    if (slot < 0 || slot >= kMaxSlots) throw std::invalid_argument("substitution key out of range");
    logs = merge_logs(logs, value.logs());
    if (value != Expr::variable(slot)) moved.push_back(slot);
  }
  std::map<int, std::vector<Expr>> powers;
  auto power_of = [&](int slot, int p) -> const Expr& {
    auto& cache = powers[slot];
    if (cache.empty()) {
      cache.push_back(Expr(1));
      auto it = bindings.find(slot);
      cache.push_back(it == bindings.end() ? Expr::variable(slot) : it->second);
    }
    while (static_cast<int>(cache.size()) <= p) cache.push_back(cache.back() * cache[1]);
    return cache[static_cast<size_t>(p)];
  };

  Expr r;
  r.logs_ = logs;
  for (const auto& [key, f] : terms_) {
    for (int m = 0; m < kMaxSlots; ++m) {
      if (key[m] == 0 && f.den[m] == 0) continue;
      for (int slot : moved)
        if (log_arg(m).depends_on(slot))
          throw std::invalid_argument("substitution for " + slot_name(slot) + " would rewrite log argument " +
                                      log_arg(m).str());
    }
    Expr num;
    num.logs_ = logs;
    for (const auto& [mono, c] : f.num.terms()) {
      Expr t(c);
      for (int s = 0; s < kMaxSlots; ++s)
        if (mono[s] > 0) t = t * power_of(s, mono[s]);
      num += t;
    }
    Expr outer;
    outer.logs_ = logs;
    outer.terms_.emplace(key, Fraction{Poly(1), f.den});
    r += num * outer;
  }
  return r;
}

Gaussian Expr::value_at_origin() const {
  Gaussian total;
  for (const auto& [key, f] : terms_) {
    for (int m = 0; m < kMaxSlots; ++m) {
      if (key[m] == 0 && f.den[m] == 0) continue;
      Gaussian q0 = log_arg(m).constant_term();
      if (key[m] > 0 && !q0.is_one())
        throw std::domain_error("log argument " + log_arg(m).str() + " is not 1 at the origin");
      if (q0.is_zero()) throw std::domain_error("denominator vanishes at the origin");
    }
    if (!key.is_one()) continue;  // contains some L_m(0) = 0
    Gaussian v = f.num.constant_term();
    for (int m = 0; m < kMaxSlots; ++m)
      for (int k = 0; k < f.den[m]; ++k) v /= log_arg(m).constant_term();
    total += v;
  }
  return total;
}

std::map<std::pair<Monomial, Monomial>, Gaussian> Expr::cleared(int D, const LogArgsPtr& table) const {
  LogArgsPtr logs = merge_logs(table, logs_);
  const int count = logs ? static_cast<int>(logs->size()) : 0;
  std::map<std::pair<Monomial, Monomial>, Gaussian> out;
  for (const auto& [key, f] : terms_) {
    Poly p = f.num;
    for (int m = 0; m < count; ++m) {
      int dm = f.den[m];
      if (dm > D) throw std::invalid_argument("denominator exponent exceeds clearing power");
      if (D - dm > 0) p = p * (*logs)[static_cast<size_t>(m)].pow(D - dm);
    }
    for (const auto& [mono, c] : p.terms()) out.emplace(std::make_pair(key, mono), c);
  }
  return out;
}

std::string Expr::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Monomial& key = it->first;
    const Fraction& f = it->second;
    std::string logs;
    for (int m = 0; m < kMaxSlots; ++m) {
      if (key[m] == 0) continue;
      if (!logs.empty()) logs += "*";
      logs += "log(" + log_arg(m).str() + ")";
      if (key[m] > 1) logs += "^" + std::to_string(key[m]);
    }
    if (f.den.is_one()) {
      for (auto t = f.num.terms().rbegin(); t != f.num.terms().rend(); ++t) {
        std::string factors = render_monomial(t->first);
        if (!logs.empty()) factors = factors.empty() ? logs : factors + "*" + logs;
        out += render_term(t->second, factors, first);
        first = false;
      }
      continue;
    }
    std::string den;
    for (int m = 0; m < kMaxSlots; ++m) {
      if (f.den[m] == 0) continue;
      if (!den.empty()) den += "*";
      den += "(" + log_arg(m).str() + ")";
      if (f.den[m] > 1) den += "^" + std::to_string(f.den[m]);
    }
    std::string factors = "(" + f.num.str() + ")";
    if (!logs.empty()) factors += "*" + logs;
    factors += "/(" + den + ")";
    out += render_term(Gaussian(1), factors, first);
    first = false;
  }
  return out;
}

}  // namespace crsym
