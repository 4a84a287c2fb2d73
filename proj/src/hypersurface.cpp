#include "crsym/hypersurface.hpp"

#include <sstream>
#include <stdexcept>

#include "crsym/parser.hpp"

namespace crsym {

namespace {

const Gaussian kHalfMinusI(Rational(0), Rational(-1, 2));  // 1/(2i)

Expr z(int j) { return Expr::variable(slot_z(j)); }
Expr w(int j) { return Expr::variable(slot_w(j)); }

void check_sign_list(const std::vector<int>& eps, size_t expected, const char* family) {
  if (eps.size() != expected) {
    throw std::invalid_argument(std::string(family) + " family needs " + std::to_string(expected) +
                                " signs, got " + std::to_string(eps.size()));
  }
  for (int e : eps) {
    if (e != 1 && e != -1) throw std::invalid_argument("signs must be +1 or -1");
  }
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::Indefinite:
      return "indefinite";
    case Family::Definite:
      return "definite";
    case Family::Flat:
      return "flat";
    case Family::Custom:
      return "custom";
  }
  return "custom";
}

Family parse_family(const std::string& name) {
  if (name == "indefinite") return Family::Indefinite;
  if (name == "definite") return Family::Definite;
  if (name == "flat") return Family::Flat;
  if (name == "custom") return Family::Custom;
  throw std::invalid_argument("unknown family '" + name + "'");
}

std::vector<int> parse_signs(const std::string& text) {
  std::vector<int> out;
  for (char c : text) {
    if (c == '+') {
      out.push_back(1);
    } else if (c == '-') {
      out.push_back(-1);
    } else if (c != ',' && c != ' ') {
      throw std::invalid_argument("bad sign character '" + std::string(1, c) + "'");
    }
  }
  return out;
}

std::string signs_str(const std::vector<int>& eps) {
  std::string s;
  for (int e : eps) s += e > 0 ? '+' : '-';
  return s;
}

HypersurfaceModel::HypersurfaceModel(Family family, int n, std::vector<int> eps, VarTable vars, Expr phi)
    : family_(family), n_(n), eps_(std::move(eps)), vars_(std::move(vars)), phi_(std::move(phi)) {
  if (n < 1 || n + 1 > kMaxVarIndex) throw std::invalid_argument("n out of range");
  if (vars_.n() != n) throw std::invalid_argument("variable table built for a different n");
  if (phi_.bar() != phi_) throw std::invalid_argument("potential is not real");
  if (phi_.max_den_exponent() > 0) throw std::invalid_argument("potential has denominators");
  if (phi_.log_degree() > 1) throw std::invalid_argument("potential is not linear in the logs");
  for (int s : {kSlotU, slot_z(n + 1), slot_w(n + 1)}) {
    if (phi_.depends_on(s)) throw std::invalid_argument("potential depends on " + slot_name(s));
  }
  for (const auto& [key, f] : phi_.terms()) {
    if (key.is_one()) {
      poly_part_ = f.num;
      continue;
    }
    int m = key.max_slot();
    if (!f.num.is_constant() || !f.num.constant_term().is_real()) {
      throw std::invalid_argument("log terms must have rational constant coefficients");
    }
    const Poly& q = (*phi_.logs())[static_cast<size_t>(m)];
    if (q.constant_term() != Gaussian(1)) {
      throw std::invalid_argument("log argument " + q.str() + " must take the value 1 at the origin");
    }
    log_terms_.push_back({f.num.constant_term().re(), q});
  }
  if (!poly_part_.constant_term().is_zero()) throw std::invalid_argument("potential must vanish at the origin");
  LeviSignature sig = levi_signature(*this);
  if (sig.null > 0) throw std::invalid_argument("Levi form is degenerate at the origin");
}

Expr HypersurfaceModel::defining_function() const {
  return Expr(kHalfMinusI) * (z(n_ + 1) - w(n_ + 1)) - phi_;
}

Expr HypersurfaceModel::restrict_to_surface(const Expr& e) const {
  const Expr u = Expr::variable(kSlotU);
  const Expr iphi = Expr(Gaussian::i()) * phi_;
  return e.substitute({{slot_z(n_ + 1), u + iphi}, {slot_w(n_ + 1), u - iphi}});
}

HypersurfaceModel builtin_model(Family family, int n, const std::vector<int>& eps) {
  VarTable vars(n);
  Expr phi;
  switch (family) {
    case Family::Indefinite: {
      if (n < 2) throw std::invalid_argument("indefinite family needs n >= 2");
      check_sign_list(eps, static_cast<size_t>(n - 2), "indefinite");
      phi = Expr(kHalfMinusI) * (z(1) * w(2) - w(1) * z(2)) + (z(1) * w(1)).pow(2);
      for (int k = 3; k <= n; ++k) phi += Expr(eps[static_cast<size_t>(k - 3)]) * z(k) * w(k);
      break;
    }
    case Family::Definite: {
      if (n < 2) throw std::invalid_argument("definite family needs n >= 2");
      if (!eps.empty()) check_sign_list(eps, static_cast<size_t>(n), "definite");
      if (!eps.empty()) {
        for (int e : eps) {
          if (e != 1) throw std::invalid_argument("definite family takes no negative signs");
        }
      }
      Poly q = Poly(1) + (z(1) * w(1)).as_poly();
      int m = vars.intern_log(q);
      phi = Expr::log_symbol(m, vars.logs());
      for (int k = 2; k <= n; ++k) phi += z(k) * w(k);
      break;
    }
    case Family::Flat: {
      if (n < 1) throw std::invalid_argument("flat family needs n >= 1");
      check_sign_list(eps, static_cast<size_t>(n), "flat");
      for (int k = 1; k <= n; ++k) phi += Expr(eps[static_cast<size_t>(k - 1)]) * z(k) * w(k);
      break;
    }
    case Family::Custom:
      throw std::invalid_argument("custom models are built from a potential");
  }
  return HypersurfaceModel(family, n, family == Family::Definite ? std::vector<int>() : eps, std::move(vars),
                           std::move(phi));
}

HypersurfaceModel custom_model(int n, const std::string& potential) {
  if (n < 1 || n + 1 > kMaxVarIndex) throw std::invalid_argument("n out of range");
  VarTable vars(n);
  Expr phi = parse_expr(potential, vars);
  return HypersurfaceModel(Family::Custom, n, {}, std::move(vars), std::move(phi));
}

HypersurfaceModel parse_model_file(const std::string& content) {
  std::istringstream in(content);
  std::string line;
  int n = 0;
  bool have_n = false;
  std::string potential;
  bool have_potential = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    size_t eq = t.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 'key = value'");
    std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));
    if (key == "n") {
      try {
        size_t used = 0;
        n = std::stoi(value, &used);
        if (used != value.size()) throw std::invalid_argument("trailing characters");
      } catch (const std::exception&) {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": bad integer '" + value + "'");
      }
      have_n = true;
    } else if (key == "potential") {
      if (!have_n) throw std::invalid_argument("line " + std::to_string(lineno) + ": 'n' must come first");
      potential = value;
      have_potential = true;
    } else {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (!have_n || !have_potential) throw std::invalid_argument("model file needs 'n' and 'potential'");
  VarTable vars(n);
  Expr phi = parse_expr(potential, vars);
  for (int s : {slot_z(n + 1), slot_w(n + 1), kSlotU}) {
    if (phi.depends_on(s)) throw std::invalid_argument("potential may only use z1..z" + std::to_string(n));
  }
  return HypersurfaceModel(Family::Custom, n, {}, std::move(vars), std::move(phi));
}

Expr tangency_residual(const HypersurfaceModel& model, const HoloVectorField& v) {
  const int n = model.n();
  if (v.n() != n) throw std::invalid_argument("vector field and model have different n");
  const Expr f = model.defining_function();
  Expr e;
  for (int j = 1; j <= n + 1; ++j) {
    const Poly& a = v.coeff(j);
    if (a.is_zero()) continue;
    e += Expr(a) * f.diff(slot_z(j)) + Expr(a.bar()) * f.diff(slot_w(j));
  }
  return model.restrict_to_surface(e);
}

DenseMatrix<Gaussian> levi_matrix(const HypersurfaceModel& model) {
  const int n = model.n();
  DenseMatrix<Gaussian> h(n, n);
  for (int j = 1; j <= n; ++j) {
    Expr dj = model.potential().diff(slot_z(j));
    for (int k = 1; k <= n; ++k) h(j - 1, k - 1) = dj.diff(slot_w(k)).value_at_origin();
  }
  return h;
}

LeviSignature levi_signature(const HypersurfaceModel& model) {
  Signature s = congruence_signature(levi_matrix(model));
  return {s.pos, s.neg, s.zero};
}

}  // namespace crsym
