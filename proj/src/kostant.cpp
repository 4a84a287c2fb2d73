#include "crsym/kostant.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace crsym {

RootSystemA::RootSystemA(int rank) : rank_(rank) {
  if (rank < 1) throw std::invalid_argument("root system rank must be >= 1");
  for (int i = 1; i <= rank; ++i) {
    for (int j = i; j <= rank; ++j) {
      std::vector<int> a(static_cast<size_t>(rank), 0);
      for (int k = i; k <= j; ++k) a[static_cast<size_t>(k - 1)] = 1;
      positive_.push_back(std::move(a));
    }
  }
}

int RootSystemA::cartan(int i, int j) const {
  if (i == j) return 2;
  return (i - j == 1 || j - i == 1) ? -1 : 0;
}

Marks RootSystemA::highest_root() const {
  Marks m(static_cast<size_t>(rank_), 0);
  m.front() += 1;
  m.back() += 1;
  return m;
}

Marks RootSystemA::reflect(Marks m, int i) const {
  const int c = m[static_cast<size_t>(i - 1)];
  for (int j = 1; j <= rank_; ++j) m[static_cast<size_t>(j - 1)] -= c * cartan(i, j);
  return m;
}

std::vector<int> RootSystemA::reflect_root(std::vector<int> a, int i) const {
  int c = 0;
  for (int j = 1; j <= rank_; ++j) c += a[static_cast<size_t>(j - 1)] * cartan(j, i);
  a[static_cast<size_t>(i - 1)] -= c;
  return a;
}

Marks RootSystemA::apply(const std::vector<int>& word, Marks m) const {
  for (auto it = word.rbegin(); it != word.rend(); ++it) m = reflect(std::move(m), *it);
  return m;
}

Marks RootSystemA::affine(const std::vector<int>& word, const Marks& lambda) const {
  Marks m = lambda;
  for (auto& x : m) x += 1;
  m = apply(word, std::move(m));
  for (auto& x : m) x -= 1;
  return m;
}

std::vector<std::vector<int>> RootSystemA::inversion_set(const std::vector<int>& word) const {
  std::vector<std::vector<int>> out;
  for (size_t k = 0; k < word.size(); ++k) {
    std::vector<int> a(static_cast<size_t>(rank_), 0);
    a[static_cast<size_t>(word[k] - 1)] = 1;
    for (size_t j = k; j-- > 0;) a = reflect_root(std::move(a), word[j]);
    out.push_back(std::move(a));
  }
  return out;
}

Rational RootSystemA::pairing_with_coweights(const Marks& mu, const std::vector<int>& nodes) const {
  Rational t = 0;
  const int l1 = rank_ + 1;
  for (int i = 1; i <= rank_; ++i) {
    for (int j : nodes) t += Rational(mu[static_cast<size_t>(i - 1)] * std::min(i, j) * (l1 - std::max(i, j)), l1);
  }
  t.canonicalize();
  return t;
}

// ---------------------------------------------------------------------------

std::vector<HasseComponent> hasse_weight2(int l) {
  if (l < 3) throw std::invalid_argument("weight-2 Hasse diagram needs rank >= 3");
  RootSystemA R(l);
  const Marks lambda = R.highest_root();
  Marks lr = lambda;
  for (auto& x : lr) x += 1;

  std::map<Marks, std::pair<int, int>> seen;  // w(lambda+rho) -> first word
  std::vector<std::pair<int, int>> words;
  for (int a = 1; a <= l; ++a) {
    for (int b = 1; b <= l; ++b) {
      if (a == b) continue;
      Marks w = R.affine({a, b}, lambda);
      bool dominant = true;
      for (int i = 2; i < l; ++i) dominant = dominant && w[static_cast<size_t>(i - 1)] >= 0;
      bool crossed = true;
      for (const auto& r : R.inversion_set({a, b})) crossed = crossed && (r.front() != 0 || r.back() != 0);
      if (dominant != crossed) throw std::logic_error("Hasse bookkeeping disagrees for word " + std::to_string(a) + "," + std::to_string(b));
      if (!dominant) continue;
      Marks key = R.apply({a, b}, lr);
      if (seen.emplace(key, std::pair{a, b}).second) words.emplace_back(a, b);
    }
  }
  auto canonical = [&](int a, int b) {
    return seen.at(R.apply({a, b}, lr));
  };
  auto rank_key = [&](const std::pair<int, int>& w) {
    if (w == std::pair{1, 2}) return 0;
    if (w == std::pair{l, l - 1}) return 1;
    return 2;
  };
  std::sort(words.begin(), words.end(), [&](const auto& x, const auto& y) { return rank_key(x) < rank_key(y); });

  std::vector<HasseComponent> out;
  for (auto [a, b] : words) {
    HasseComponent c;
    c.word = {a, b};
    c.marks = R.affine({a, b}, lambda);
    c.partner = canonical(l + 1 - a, l + 1 - b);
    Marks low = c.marks;
    for (auto& x : low) x = -x;
    Rational h = R.pairing_with_coweights(low, {1, l});
    if (h.get_den() != 1) throw std::logic_error("non-integral homogeneity");
    c.homogeneity = static_cast<int>(h.get_num().get_si());
    out.push_back(std::move(c));
  }
  return out;
}

int real_component_count(const std::vector<HasseComponent>& comps) {
  int count = 0;
  for (const auto& c : comps) {
    if (c.self_conjugate() || c.word < c.partner) ++count;
  }
  return count;
}

// ---------------------------------------------------------------------------

SatakeData satake(int k, int n) {
  if (n < 1 || k < 0 || 2 * k > n) throw std::invalid_argument("Satake data needs n >= 1 and 0 <= k <= n/2");
  SatakeData s;
  const int l = n + 1;
  s.rank = l;
  s.crossed = {1, l};
  s.black_nodes.assign(static_cast<size_t>(l), false);
  if (2 * k < n) {
    const int p = k + 1;
    for (int i = p + 1; i <= l - p; ++i) s.black_nodes[static_cast<size_t>(i - 1)] = true;
    for (int i = 1; i <= p; ++i) s.arrow_pairs.emplace_back(i, l + 1 - i);
  } else {
    for (int i = 1; i <= k; ++i) s.arrow_pairs.emplace_back(i, l + 1 - i);
  }
  s.arrows = static_cast<int>(s.arrow_pairs.size());
  s.black = static_cast<int>(std::count(s.black_nodes.begin(), s.black_nodes.end(), true));
  s.white = l - s.black;
  return s;
}

std::string render_diagram(const SatakeData& s, const Marks& marks) {
  std::string nodes = "nodes:";
  for (int i = 1; i <= s.rank; ++i) {
    bool cross = std::find(s.crossed.begin(), s.crossed.end(), i) != s.crossed.end();
    nodes += i == 1 ? " " : "-";
    nodes += cross ? "x" : (s.black_nodes[static_cast<size_t>(i - 1)] ? "*" : "o");
  }
  std::string out = nodes + "\n";
  if (!marks.empty()) {
    if (static_cast<int>(marks.size()) != s.rank) throw std::invalid_argument("marks do not match the diagram rank");
    out += "marks:";
    for (int m : marks) out += " " + std::to_string(m);
    out += "\n";
  }
  out += "arrows:";
  if (s.arrow_pairs.empty()) out += " none";
  for (size_t i = 0; i < s.arrow_pairs.size(); ++i) {
    out += (i ? ", " : " ") + std::to_string(s.arrow_pairs[i].first) + "<->" + std::to_string(s.arrow_pairs[i].second);
  }
  return out + "\n";
}

// ---------------------------------------------------------------------------

Marks weight_of(const GradedAlgebra<Gaussian>& g, int a) {
  const int d = g.matrix_size();
  const CMatrix& x = g.basis(a);
  int pi = -1, pj = -1;
  for (int i = 0; i < d && pi < 0; ++i)
    for (int j = 0; j < d; ++j)
      if (!x(i, j).is_zero()) {
        pi = i;
        pj = j;
        break;
      }
  if (pi < 0) throw std::logic_error("zero basis element");
  Marks m;
  for (int k = 1; k < d; ++k) {
    CMatrix h = unit_matrix(d, k - 1, k - 1) - unit_matrix(d, k, k);
    CMatrix c = commutator(h, x);
    Gaussian lam = c(pi, pj) / x(pi, pj);
    if (!is_zero(c - lam * x) || !lam.is_real() || lam.re().get_den() != 1)
      throw std::logic_error("basis element is not a weight vector");
    m.push_back(static_cast<int>(lam.re().get_num().get_si()));
  }
  return m;
}

namespace {

Marks add_marks(Marks a, const Marks& b, int sign) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += sign * b[i];
  return a;
}

}  // namespace

Marks module_weight(const CurvatureModule<Gaussian>& M, int b) {
  const auto& g = M.algebra();
  auto [p, q, c] = M.unpack(b);
  Marks w = weight_of(g, g.begin(0) + c);
  w = add_marks(std::move(w), weight_of(g, g.begin(-1) + p), -1);
  return add_marks(std::move(w), weight_of(g, g.begin(-1) + q), -1);
}

SparseVec<Gaussian> sigma_module(const GradedSU& G, const CurvatureModule<Gaussian>& M, const SparseVec<Gaussian>& w) {
  const auto& g = G.complex;
  const int m = M.dim_minus1(), d0 = M.dim0();
  DenseMatrix<Gaussian> S(m, m), T(d0, d0);
  for (int r = 0; r < m; ++r)
    for (const auto& [t, v] : g.local(g.coords(G.sigma(g.basis(g.begin(-1) + r))), -1)) S(t, r) = v;
  for (int c = 0; c < d0; ++c)
    for (const auto& [e, v] : g.local(g.coords(G.sigma(g.basis(g.begin(0) + c))), 0)) T(e, c) = v;

  SparseBuilder<Gaussian> out;
  for (const auto& [b, cb] : w) {
    auto [p, q, c] = M.unpack(b);
    for (int r = 0; r < m; ++r) {
      for (int s = r + 1; s < m; ++s) {
        Gaussian coef = S(p, r) * S(q, s) - S(q, r) * S(p, s);
        if (coef.is_zero()) continue;
        Gaussian val = (cb * coef).conj();
        for (int e = 0; e < d0; ++e)
          if (!T(e, c).is_zero()) out.add(M.index(r, s, e), val * T(e, c));
      }
    }
  }
  return out.take();
}

LowestWeightResult lowest_weight_vectors(const GradedSU& G, const HasseComponent& comp) {
  const int l = G.n + 1;
  if (static_cast<int>(comp.marks.size()) != l) throw std::invalid_argument("component rank does not match the algebra");
  if (comp.homogeneity != 2)
    throw std::invalid_argument("component has homogeneity " + std::to_string(comp.homogeneity) +
                                "; only homogeneity 2 occurs in Lambda^2 g_{-1}^* (x) g_0");
  const auto& g = G.complex;
  CurvatureModule<Gaussian> M(g);
  LowestWeightResult res;
  res.weight = comp.marks;
  for (auto& x : res.weight) x = -x;

  // Weights of g_{-1} and g_0 basis vectors, then of W.
  std::vector<Marks> w1, w0;
  for (int p = 0; p < M.dim_minus1(); ++p) w1.push_back(weight_of(g, g.begin(-1) + p));
  for (int c = 0; c < M.dim0(); ++c) w0.push_back(weight_of(g, g.begin(0) + c));
  std::vector<int> cand;
  for (int b = 0; b < M.dim(); ++b) {
    auto [p, q, c] = M.unpack(b);
    Marks wt = add_marks(add_marks(w0[static_cast<size_t>(c)], w1[static_cast<size_t>(p)], -1), w1[static_cast<size_t>(q)], -1);
    if (wt == res.weight) cand.push_back(b);
  }

  std::vector<int> lowering;
  for (int k = 2; k < l; ++k) {
    auto x = g.local(g.coords(unit_matrix(g.matrix_size(), k, k - 1)), 0);
    if (x.size() != 1) throw std::logic_error("lowering operator is not a basis vector");
    lowering.push_back(x.front().first);
  }
  std::vector<SparseVec<Gaussian>> cols;
  for (int b : cand) {
    SparseVec<Gaussian> col;
    SparseVec<Gaussian> e{{b, Gaussian(1)}};
    for (size_t j = 0; j < lowering.size(); ++j)
      for (const auto& [i, v] : M.act(lowering[j], e)) col.emplace_back(static_cast<int>(j) * M.dim() + i, v);
    cols.push_back(std::move(col));
  }
  for (const auto& k : kernel_of_columns(cols)) {
    SparseVec<Gaussian> v;
    for (size_t i = 0; i < k.size(); ++i)
      if (!k[i].is_zero()) v.emplace_back(cand[i], k[i]);
    res.vectors.push_back(std::move(v));
  }
  if (res.vectors.empty()) throw std::logic_error("no lowest weight vector of the predicted weight");

  const auto& phi = res.vectors.front();
  res.real = rank_of(std::vector<SparseVec<Gaussian>>{phi, sigma_module(G, M, phi)}, M.dim()) == 1;
  res.annihilator_dim = static_cast<int>(annihilator(M, phi).size());
  return res;
}

// ---------------------------------------------------------------------------

BoundsTable bounds(int n, int k) {
  if (n < 1 || k < 0 || 2 * k > n) throw std::invalid_argument("bounds need n >= 1 and 0 <= k <= n/2");
  BoundsTable b;
  b.n = n;
  b.k = k;
  b.max_dim = (n + 2) * (n + 2) - 1;
  b.submax_dim = n == 1 ? 3 : (k == 0 ? n * n + 3 : n * n + 4);
  b.universal_bound = n == 1 ? 3 : n * n + 4;
  b.stability_group = n * n + 2 * n + 2;
  b.complex_annihilator_bound = n * n - 2 * n + 3;
  b.definite_annihilator_bound = n * n - 2 * n + 2;
  return b;
}

}  // namespace crsym
