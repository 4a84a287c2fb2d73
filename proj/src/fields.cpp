#include "crsym/fields.hpp"

#include <algorithm>
#include <sstream>

#include "crsym/parser.hpp"

namespace crsym {

namespace {

const Gaussian kI = Gaussian::i();

Poly z(int j) { return Poly::variable(slot_z(j)); }

HoloVectorField d(int n, int j, const Poly& c = Poly(1)) { return HoloVectorField::component(n, j, c); }

std::string idx(int k) { return std::to_string(k); }
std::string pair_idx(int s, int t) { return std::to_string(s) + "," + std::to_string(t); }

FieldBasis indefinite_catalog(int n, const std::vector<int>& eps) {
  const int N = n + 1;
  auto e = [&](int k) { return Gaussian(eps[static_cast<size_t>(k - 3)]); };
  FieldBasis out;
  HoloVectorField h1 = d(n, 1, z(1)) + d(n, 2, Gaussian(3) * z(2)) + d(n, N, Gaussian(4) * z(N));
  for (int k = 3; k <= n; ++k) h1 += d(n, k, Gaussian(2) * z(k));
  out.push_back({"H_1", h1});
  out.push_back({"H_2", kI * (d(n, 1, z(1)) + d(n, 2, z(2)))});
  for (int k = 3; k <= n; ++k) out.push_back({"H_" + idx(k), d(n, k, kI * z(k))});

  out.push_back({"T_1", d(n, 1) - d(n, N, z(2)) + d(n, 2, Gaussian(4) * kI * z(1).pow(2))});
  out.push_back({"T_1'", d(n, 1, kI) + d(n, N, kI * z(2)) + d(n, 2, Gaussian(4) * z(1).pow(2))});
  out.push_back({"T_2", d(n, 2) + d(n, N, z(1))});
  out.push_back({"T_2'", d(n, 2, kI) - d(n, N, kI * z(1))});
  for (int k = 3; k <= n; ++k) {
    out.push_back({"T_" + idx(k), d(n, k) + d(n, N, Gaussian(2) * kI * e(k) * z(k))});
    out.push_back({"T_" + idx(k) + "'", d(n, k, kI) + d(n, N, Gaussian(2) * e(k) * z(k))});
  }
  out.push_back({"T_" + idx(N), d(n, N)});

  out.push_back({"S_1", d(n, 2, z(1))});
  for (int k = 3; k <= n; ++k) {
    out.push_back({"S_" + idx(k), d(n, 2, Gaussian(2) * z(k)) + d(n, k, kI * e(k) * z(1))});
    out.push_back({"S_" + idx(k) + "'", d(n, 2, Gaussian(2) * kI * z(k)) + d(n, k, e(k) * z(1))});
  }
  for (int s = 3; s <= n; ++s) {
    for (int t = s + 1; t <= n; ++t) {
      out.push_back({"R_" + pair_idx(s, t), d(n, t, e(s) * z(s)) - d(n, s, e(t) * z(t))});
      out.push_back({"R_" + pair_idx(s, t) + "'", kI * (d(n, t, e(s) * z(s)) + d(n, s, e(t) * z(t)))});
    }
  }
  return out;
}

FieldBasis definite_catalog(int n) {
  const int N = n + 1;
  FieldBasis out;
  out.push_back({"T_1", d(n, 1, Poly(1) + z(1).pow(2)) + d(n, N, Gaussian(2) * kI * z(1))});
  out.push_back({"T_1'", d(n, 1, kI * (Poly(1) - z(1).pow(2))) + d(n, N, Gaussian(2) * z(1))});
  for (int j = 2; j <= n; ++j) {
    out.push_back({"T_" + idx(j), d(n, j) + d(n, N, Gaussian(2) * kI * z(j))});
    out.push_back({"T_" + idx(j) + "'", d(n, j, kI) + d(n, N, Gaussian(2) * z(j))});
  }
  out.push_back({"T_" + idx(N), d(n, N)});
  for (int k = 1; k <= n; ++k) out.push_back({"H_" + idx(k), d(n, k, kI * z(k))});
  for (int s = 2; s <= n; ++s) {
    for (int t = s + 1; t <= n; ++t) {
      out.push_back({"R_" + pair_idx(s, t), d(n, t, z(s)) - d(n, s, z(t))});
      out.push_back({"R_" + pair_idx(s, t) + "'", kI * (d(n, t, z(s)) + d(n, s, z(t)))});
    }
  }
  return out;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

// Exponent vectors over z_1..z_N of total degree <= deg, ordered by degree.
std::vector<Monomial> holomorphic_monomials(int N, int deg) {
  std::vector<Monomial> out{Monomial()};
  std::vector<Monomial> layer{Monomial()};
  for (int k = 1; k <= deg; ++k) {
    std::vector<Monomial> next;
    for (const Monomial& m : layer) {
      // Only multiply by z_j with j >= the last variable used, to avoid repeats.
      int last = 1;
      for (int j = N; j >= 1; --j) {
        if (m[slot_z(j)] > 0) {
          last = j;
          break;
        }
      }
      for (int j = last; j <= N; ++j) next.push_back(m * Monomial::unit(slot_z(j)));
    }
    std::sort(next.begin(), next.end());
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace

FieldBasis builtin_symmetries(Family family, int n, const std::vector<int>& eps) {
  switch (family) {
    case Family::Indefinite:
      if (n < 2) throw std::invalid_argument("indefinite family needs n >= 2");
      if (eps.size() != static_cast<size_t>(n - 2)) {
        throw std::invalid_argument("indefinite family needs " + std::to_string(n - 2) + " signs");
      }
      return indefinite_catalog(n, eps);
    case Family::Definite:
      if (n < 2) throw std::invalid_argument("definite family needs n >= 2");
      return definite_catalog(n);
    default:
      throw std::invalid_argument("no generator list for the " + family_name(family) + " family");
  }
}

FieldBasis parse_field_file(int n, const std::string& content) {
  FieldBasis out;
  std::istringstream in(content);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    size_t colon = t.find(':');
    if (colon == std::string::npos) throw std::invalid_argument(where + "expected 'label : a1 ; ...'");
    std::string label = trim(t.substr(0, colon));
    if (label.empty()) throw std::invalid_argument(where + "empty label");
    std::vector<Poly> coeffs;
    std::string rest = t.substr(colon + 1);
    size_t start = 0;
    while (true) {
      size_t semi = rest.find(';', start);
      std::string piece = trim(rest.substr(start, semi == std::string::npos ? std::string::npos : semi - start));
      VarTable vars(n);
      Expr e;
      try {
        e = parse_expr(piece, vars);
      } catch (const std::exception& err) {
        throw std::invalid_argument(where + "coefficient " + std::to_string(coeffs.size() + 1) + ": " + err.what());
      }
      if (!e.is_polynomial()) throw std::invalid_argument(where + "coefficients must be polynomials");
      coeffs.push_back(e.as_poly());
      if (semi == std::string::npos) break;
      start = semi + 1;
    }
    try {
      out.push_back({label, HoloVectorField(n, std::move(coeffs))});
    } catch (const std::exception& err) {
      throw std::invalid_argument(where + err.what());
    }
  }
  return out;
}

RVec RealCoordinates::of(const HoloVectorField& v) {
  SparseBuilder<Rational> b;
  for (int j = 1; j <= v.n() + 1; ++j) {
    for (const auto& [m, c] : v.coeff(j).terms()) {
      for (int part = 0; part < 2; ++part) {
        const Rational& x = part == 0 ? c.re() : c.im();
        if (x == 0) continue;
        auto [it, inserted] = index_.emplace(std::make_tuple(j, m, part), static_cast<int>(index_.size()));
        b.add(it->second, x);
      }
    }
  }
  return b.take();
}

std::optional<RVec> RealCoordinates::known(const HoloVectorField& v) const {
  SparseBuilder<Rational> b;
  for (int j = 1; j <= v.n() + 1; ++j) {
    for (const auto& [m, c] : v.coeff(j).terms()) {
      for (int part = 0; part < 2; ++part) {
        const Rational& x = part == 0 ? c.re() : c.im();
        if (x == 0) continue;
        auto it = index_.find(std::make_tuple(j, m, part));
        if (it == index_.end()) return std::nullopt;
        b.add(it->second, x);
      }
    }
  }
  return b.take();
}

RealLieAlgebra close_and_structure(const FieldBasis& basis) {
  const size_t k = basis.size();
  RealCoordinates coords;
  std::vector<RVec> vecs;
  for (const auto& f : basis) vecs.push_back(coords.of(f.field));
  Echelon<Rational> ech(coords.size());
  for (size_t i = 0; i < k; ++i) {
    if (!ech.insert(vecs[i])) throw NotIndependent(static_cast<int>(i), basis[i].label);
  }
  SpanSolver<Rational> span(vecs);
  std::vector<std::string> labels;
  for (const auto& f : basis) labels.push_back(f.label);
  std::vector<std::vector<RVec>> br(k, std::vector<RVec>(k));
  for (size_t a = 0; a < k; ++a) {
    for (size_t b = a + 1; b < k; ++b) {
      HoloVectorField c = bracket(basis[a].field, basis[b].field);
      std::optional<DenseVec<Rational>> x;
      if (auto v = coords.known(c)) x = span.coords(*v);
      if (!x) throw NotClosed(static_cast<int>(a), static_cast<int>(b), labels[a] + "," + labels[b], c.str());
      br[a][b] = to_sparse(*x);
      br[b][a] = br[a][b];
      scale(br[b][a], Rational(-1));
    }
  }
  return RealLieAlgebra(std::move(labels), std::move(br));
}

bool SymmetrySolution::contains(const HoloVectorField& v) const {
  SparseBuilder<Rational> b;
  for (int j = 1; j <= v.n() + 1; ++j) {
    for (const auto& [m, c] : v.coeff(j).terms()) {
      auto it = column_of.find({j, m});
      if (it == column_of.end()) return false;
      if (c.re() != 0) b.add(it->second, c.re());
      if (c.im() != 0) b.add(it->second + 1, c.im());
    }
  }
  RVec x = b.take();
  Echelon<Rational> ech(unknowns);
  for (const auto& k : kernel) ech.insert(k);
  return ech.contains(x);
}

SymmetrySolution solve_symmetries(const HypersurfaceModel& model, int degree) {
  if (degree < 1) throw std::invalid_argument("degree must be at least 1");
  const int n = model.n();
  const int N = n + 1;
  SymmetrySolution sol;
  sol.degree = degree;

  // Restriction to the surface only touches z_{n+1}: its powers are cached,
  // the z' part of a monomial is a plain factor.
  const Expr a = Expr::variable(kSlotU) + Expr(kI) * model.potential();
  const Expr f = model.defining_function();
  std::vector<Expr> g(static_cast<size_t>(N + 1));
  for (int j = 1; j <= N; ++j) g[static_cast<size_t>(j)] = f.diff(slot_z(j));
  std::vector<std::vector<Expr>> b(static_cast<size_t>(degree + 1), std::vector<Expr>(static_cast<size_t>(N + 1)));
  Expr power(1);
  for (int k = 0; k <= degree; ++k) {
    for (int j = 1; j <= N; ++j) b[static_cast<size_t>(k)][static_cast<size_t>(j)] = power * g[static_cast<size_t>(j)];
    power = power * a;
  }

  const std::vector<Monomial> monos = holomorphic_monomials(N, degree);
  std::vector<Expr> columns;
  std::vector<std::pair<int, Monomial>> column_keys;
  for (const Monomial& m : monos) {
    Monomial head = m;
    head.set(slot_z(N), 0);
    const Expr headx = Expr(Poly::monomial(head));
    const int k = m[slot_z(N)];
    for (int j = 1; j <= N; ++j) {
      Expr x = headx * b[static_cast<size_t>(k)][static_cast<size_t>(j)];
      Expr xb = x.bar();
      sol.column_of.emplace(std::make_pair(j, m), static_cast<int>(columns.size()));
      column_keys.emplace_back(j, m);
      columns.push_back(x + xb);
      columns.push_back(Expr(kI) * (x - xb));
    }
  }
  sol.unknowns = static_cast<int>(columns.size());

  int D = 0;
  for (const Expr& c : columns) D = std::max(D, c.max_den_exponent());
  sol.clearing_power = D;

  const LogArgsPtr& table = model.vars().logs();
  std::map<std::pair<Monomial, Monomial>, int> row_of;
  std::vector<RVec> rows;
  for (int col = 0; col < sol.unknowns; ++col) {
    for (const auto& [key, c] : columns[static_cast<size_t>(col)].cleared(D, table)) {
      auto [it, inserted] = row_of.emplace(key, static_cast<int>(rows.size()));
      if (inserted) {
        rows.emplace_back();
        rows.emplace_back();
      }
      const size_t r = static_cast<size_t>(it->second);
      if (c.re() != 0) rows[r].emplace_back(col, c.re());
      if (c.im() != 0) rows[r + 1].emplace_back(col, c.im());
    }
  }
  rows.erase(std::remove_if(rows.begin(), rows.end(), [](const RVec& r) { return r.empty(); }), rows.end());
  sol.equations = static_cast<int>(rows.size());

  std::vector<DenseVec<Rational>> ker = kernel_of_rows(rows, sol.unknowns);
  sol.dimension = static_cast<int>(ker.size());
  for (const auto& x : ker) {
    HoloVectorField v = HoloVectorField::zero(n);
    for (int col = 0; col < sol.unknowns; col += 2) {
      const Rational& re = x[static_cast<size_t>(col)];
      const Rational& im = x[static_cast<size_t>(col + 1)];
      if (re == 0 && im == 0) continue;
      const auto& [j, m] = column_keys[static_cast<size_t>(col / 2)];
      v += d(n, j, Poly::monomial(m, Gaussian(re, im)));
    }
    sol.basis.push_back(std::move(v));
    sol.kernel.push_back(to_sparse(x));
  }
  return sol;
}

namespace {

RVec label_vec(const RealLieAlgebra& L, const std::string& label) {
  for (int a = 0; a < L.dim(); ++a)
    if (L.labels()[static_cast<size_t>(a)] == label) return unit_vec(a);
  throw std::invalid_argument("algebra has no field labelled " + label);
}

RVec label_diff(const RealLieAlgebra& L, const std::string& a, const std::string& b) {
  RVec v = label_vec(L, a);
  axpy(v, Rational(-1), label_vec(L, b));
  return v;
}

void add_rotations(const RealLieAlgebra& L, int from, int n, Subspace& s) {
  for (int a = from; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      std::string st = std::to_string(a) + "," + std::to_string(b);
      s.basis.push_back(label_vec(L, "R_" + st));
      s.basis.push_back(label_vec(L, "R_" + st + "'"));
    }
  }
}

}  // namespace

LeviCandidate catalog_levi_candidate(Family family, int n, const std::vector<int>& eps, const RealLieAlgebra& L) {
  LeviCandidate c;
  c.subspace = Subspace{L.dim(), {}};
  if (family == Family::Indefinite) {
    if (eps.size() != static_cast<size_t>(n - 2)) throw std::invalid_argument("sign list does not match n");
    for (int k = 4; k <= n; ++k) c.subspace.basis.push_back(label_diff(L, "H_" + std::to_string(k), "H_3"));
    add_rotations(L, 3, n, c.subspace);
    int p = 0, q = 0;
    for (int e : eps) (e > 0 ? p : q) += 1;
    c.reference = p + q >= 2 ? "su(" + std::to_string(p) + "," + std::to_string(q) + ")" : "0";
    return c;
  }
  if (family == Family::Definite) {
    c.subspace.basis = {label_vec(L, "T_1"), label_vec(L, "T_1'"), label_diff(L, "T_" + std::to_string(n + 1), "H_1")};
    for (int k = 3; k <= n; ++k) c.subspace.basis.push_back(label_diff(L, "H_" + std::to_string(k), "H_2"));
    add_rotations(L, 2, n, c.subspace);
    c.reference = n >= 3 ? "su(2)+su(" + std::to_string(n - 1) + ")" : "su(2)";
    return c;
  }
  throw std::invalid_argument("no Levi candidate for the " + family_name(family) + " family");
}

}  // namespace crsym
