#include "crsym/liestruct.hpp"

#include <map>
#include <regex>
#include <stdexcept>

namespace crsym {

namespace {

std::vector<RVec> sparse_all(const std::vector<DenseVec<Rational>>& vs) {
  std::vector<RVec> out;
  for (const auto& v : vs) out.push_back(to_sparse(v));
  return out;
}

void check_in_algebra(const RealLieAlgebra& L, const std::vector<RVec>& vecs) {
  for (const auto& v : vecs) {
    for (const auto& [i, x] : v) {
      if (i < 0 || i >= L.dim()) throw std::invalid_argument("vector has a coordinate outside the algebra");
    }
  }
}

}  // namespace

KillingForm killing_form(const RealLieAlgebra& L) {
  const int n = L.dim();
  std::vector<DenseMatrix<Rational>> ad;
  for (int a = 0; a < n; ++a) ad.push_back(L.ad(unit_vec(a)));
  DenseMatrix<Rational> k(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      Rational t = 0;
      for (int c = 0; c < n; ++c) {
        for (int d = 0; d < n; ++d) {
          const Rational& x = ad[static_cast<size_t>(a)](c, d);
          if (x == 0) continue;
          const Rational& y = ad[static_cast<size_t>(b)](d, c);
          if (y != 0) t += x * y;
        }
      }
      k(a, b) = t;
      k(b, a) = t;
    }
  }
  return {k, congruence_signature(k)};
}

Subspace whole(const RealLieAlgebra& L) {
  Subspace s{L.dim(), {}};
  for (int a = 0; a < L.dim(); ++a) s.basis.push_back(unit_vec(a));
  return s;
}

Subspace bracket_span(const RealLieAlgebra& L, const Subspace& U, const Subspace& V) {
  std::vector<RVec> vecs;
  for (const auto& u : U.basis) {
    for (const auto& v : V.basis) {
      RVec b = L.bracket(u, v);
      if (!b.empty()) vecs.push_back(std::move(b));
    }
  }
  return {L.dim(), span_basis(vecs, L.dim())};
}

std::vector<int> derived_series(const RealLieAlgebra& L, const Subspace& S) {
  std::vector<int> dims{S.dim()};
  Subspace cur = S;
  while (cur.dim() > 0) {
    Subspace next = bracket_span(L, cur, cur);
    dims.push_back(next.dim());
    if (next.dim() == cur.dim()) break;
    cur = std::move(next);
  }
  return dims;
}

std::vector<int> lower_central_series(const RealLieAlgebra& L) {
  const Subspace all = whole(L);
  std::vector<int> dims{all.dim()};
  Subspace cur = all;
  while (cur.dim() > 0) {
    Subspace next = bracket_span(L, all, cur);
    dims.push_back(next.dim());
    if (next.dim() == cur.dim()) break;
    cur = std::move(next);
  }
  return dims;
}

int derived_length(const std::vector<int>& series) {
  for (size_t k = 0; k < series.size(); ++k) {
    if (series[k] == 0) return static_cast<int>(k);
  }
  return -1;
}

Subspace center(const RealLieAlgebra& L) {
  const int n = L.dim();
  // Row (b, c): sum_a x_a c_ab^c = 0.
  std::map<std::pair<int, int>, RVec> rows;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (const auto& [c, v] : L.bracket_basis(a, b)) rows[{b, c}].emplace_back(a, v);
    }
  }
  std::vector<RVec> list;
  for (auto& [key, r] : rows) list.push_back(std::move(r));
  return {n, sparse_all(kernel_of_rows(list, n))};
}

RadicalReport radical_and_series(const RealLieAlgebra& L) {
  const int n = L.dim();
  RadicalReport rep;
  KillingForm k = killing_form(L);
  Subspace derived = bracket_span(L, whole(L), whole(L));
  std::vector<RVec> rows;
  for (const auto& d : derived.basis) {
    SparseBuilder<Rational> row;
    for (const auto& [i, x] : d) {
      for (int j = 0; j < n; ++j) {
        if (k.matrix(i, j) != 0) row.add(j, x * k.matrix(i, j));
      }
    }
    RVec r = row.take();
    if (!r.empty()) rows.push_back(std::move(r));
  }
  rep.radical = {n, sparse_all(kernel_of_rows(rows, n))};
  rep.derived = derived_series(L, whole(L));
  rep.lower_central = lower_central_series(L);
  rep.center_dim = center(L).dim();
  rep.radical_derived = derived_series(L, rep.radical);
  rep.radical_derived_length = derived_length(rep.radical_derived);
  return rep;
}

LeviVerdict levi_check(const RealLieAlgebra& L, const Subspace& candidate) {
  check_in_algebra(L, candidate.basis);
  if (rank_of(candidate.basis, L.dim()) != candidate.dim()) {
    throw std::invalid_argument("candidate vectors are not independent");
  }
  LeviVerdict v;
  v.dim = candidate.dim();
  RealLieAlgebra sub;
  try {
    sub = L.subalgebra(candidate.basis);
  } catch (const std::invalid_argument&) {
    v.failed = "subalgebra";
    return v;
  }
  if (killing_form(sub).signature.zero > 0) {
    v.failed = "semisimple";
    return v;
  }
  Subspace rad = radical_and_series(L).radical;
  std::vector<RVec> all = candidate.basis;
  all.insert(all.end(), rad.basis.begin(), rad.basis.end());
  if (candidate.dim() + rad.dim() != L.dim() || rank_of(all, L.dim()) != L.dim()) {
    v.failed = "complement";
    return v;
  }
  v.pass = true;
  return v;
}

Fingerprint fingerprint(const RealLieAlgebra& L) {
  Fingerprint f;
  f.dim = L.dim();
  f.killing = killing_form(L).signature;
  f.center_dim = center(L).dim();
  f.derived = derived_series(L, whole(L));
  f.lower_central = lower_central_series(L);
  return f;
}

std::vector<std::string> fingerprint_mismatch(const Fingerprint& a, const Fingerprint& b) {
  std::vector<std::string> out;
  if (a.dim != b.dim) out.push_back("dim");
  if (!(a.killing == b.killing)) out.push_back("killing");
  if (a.center_dim != b.center_dim) out.push_back("center");
  if (a.derived != b.derived) out.push_back("derived");
  if (a.lower_central != b.lower_central) out.push_back("lowerCentral");
  return out;
}

RealLieAlgebra matrix_lie_algebra(const std::vector<CMatrix>& basis, std::vector<std::string> labels) {
  std::vector<RVec> coords;
  for (const auto& x : basis) coords.push_back(real_coords(x));
  SpanSolver<Rational> span(coords);
  const size_t k = basis.size();
  if (labels.empty()) {
    for (size_t i = 0; i < k; ++i) labels.push_back("x" + std::to_string(i));
  }
  std::vector<std::vector<RVec>> br(k, std::vector<RVec>(k));
  for (size_t a = 0; a < k; ++a) {
    for (size_t b = a + 1; b < k; ++b) {
      auto c = span.coords(real_coords(commutator(basis[a], basis[b])));
      if (!c) throw std::invalid_argument("matrices do not span a Lie algebra");
      br[a][b] = to_sparse(*c);
      br[b][a] = br[a][b];
      scale(br[b][a], Rational(-1));
    }
  }
  return RealLieAlgebra(std::move(labels), std::move(br));
}

RealLieAlgebra reference_su(int p, int q) {
  if (p < 0 || q < 0 || p + q < 1) throw std::invalid_argument("su(p,q) needs p, q >= 0 and p + q >= 1");
  const int m = p + q;
  CMatrix h(m, m);
  for (int i = 0; i < m; ++i) h(i, i) = i < p ? 1 : -1;
  auto basis = real_solution_basis(m, [&](const CMatrix& x) {
    CMatrix c = adjoint(x) * h + h * x;
    std::vector<Gaussian> out;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) out.push_back(c(i, j));
    out.push_back(trace(x));
    return out;
  });
  return matrix_lie_algebra(basis);
}

RealLieAlgebra reference_u(int m) {
  if (m < 1) throw std::invalid_argument("u(m) needs m >= 1");
  auto basis = real_solution_basis(m, [&](const CMatrix& x) {
    CMatrix c = adjoint(x) + x;
    std::vector<Gaussian> out;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) out.push_back(c(i, j));
    return out;
  });
  return matrix_lie_algebra(basis);
}

RealLieAlgebra reference_sp(int m) {
  if (m < 1) throw std::invalid_argument("sp(m) needs m >= 1");
  const int d = 2 * m;
  CMatrix j(d, d);
  for (int i = 0; i < m; ++i) {
    j(i, m + i) = 1;
    j(m + i, i) = -1;
  }
  auto basis = real_solution_basis(d, [&](const CMatrix& x) {
    CMatrix u = adjoint(x) + x;
    CMatrix s = transpose(x) * j + j * x;
    std::vector<Gaussian> out;
    for (int a = 0; a < d; ++a) {
      for (int b = 0; b < d; ++b) {
        out.push_back(u(a, b));
        out.push_back(s(a, b));
      }
    }
    return out;
  });
  return matrix_lie_algebra(basis);
}

RealLieAlgebra direct_sum(const RealLieAlgebra& a, const RealLieAlgebra& b) {
  const int na = a.dim(), nb = b.dim(), n = na + nb;
  std::vector<std::string> labels = a.labels();
  for (const auto& l : b.labels()) labels.push_back(l + "'");
  std::vector<std::vector<RVec>> br(static_cast<size_t>(n), std::vector<RVec>(static_cast<size_t>(n)));
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < na; ++y) br[static_cast<size_t>(x)][static_cast<size_t>(y)] = a.bracket_basis(x, y);
  for (int x = 0; x < nb; ++x) {
    for (int y = 0; y < nb; ++y) {
      RVec v = b.bracket_basis(x, y);
      for (auto& e : v) e.first += na;
      br[static_cast<size_t>(na + x)][static_cast<size_t>(na + y)] = std::move(v);
    }
  }
  return RealLieAlgebra(std::move(labels), std::move(br));
}

RealLieAlgebra reference_su2_plus_su(int m) { return direct_sum(reference_su(2, 0), reference_su(m, 0)); }

RealLieAlgebra reference_algebra(const std::string& name) {
  std::smatch mt;
  static const std::regex su(R"(su\((\d+),(\d+)\))");
  static const std::regex u(R"(u\((\d+)\))");
  static const std::regex su2(R"(su\(2\)\+su\((\d+)\))");
  static const std::regex sp(R"(sp\((\d+)\))");
  static const std::regex sun(R"(su\((\d+)\))");
  if (std::regex_match(name, mt, su)) return reference_su(std::stoi(mt[1]), std::stoi(mt[2]));
  if (std::regex_match(name, mt, su2)) return reference_su2_plus_su(std::stoi(mt[1]));
  if (std::regex_match(name, mt, sun)) return reference_su(std::stoi(mt[1]), 0);
  if (std::regex_match(name, mt, u)) return reference_u(std::stoi(mt[1]));
  if (std::regex_match(name, mt, sp)) return reference_sp(std::stoi(mt[1]));
  throw std::invalid_argument("unknown reference algebra '" + name + "'");
}

}  // namespace crsym
