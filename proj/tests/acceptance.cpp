// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. All checks are exact; the only tolerances are the
// wall-clock budgets printed on each line.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "crsym/fields.hpp"
#include "crsym/kostant.hpp"
#include "crsym/parser.hpp"
#include "golden_runs.hpp"
#include "random_expr.hpp"

using namespace crsym;

namespace {

constexpr int kCases = 1000;

struct Verdict {
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (failures.size() < 6) failures.push_back(what);
    }
  }
};

using Clock = std::chrono::steady_clock;

bool report(int id, const char* title, double budget_s, const std::function<void(Verdict&)>& body) {
  Verdict v;
  auto t0 = Clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  v.require(secs <= budget_s, "over the time budget");
  std::string detail = v.detail.str();
  for (const auto& f : v.failures) detail += (detail.empty() ? "" : "; ") + f;
  std::printf("criterion %d %s  %s: %s [tolerance exact; %.2f s of %.0f s budget]\n", id, v.pass ? "PASS" : "FAIL", title,
              detail.c_str(), secs, budget_s);
  std::fflush(stdout);
  return v.pass;
}

std::string dims_str(const std::vector<int>& d) {
  std::string s = "(";
  for (size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

std::vector<std::vector<int>> all_sign_patterns(int len) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << len); ++mask) {
    std::vector<int> e;
    for (int b = 0; b < len; ++b) e.push_back((mask >> b) & 1 ? -1 : 1);
    out.push_back(e);
  }
  return out;
}

std::vector<int> mixed_eps(int len) {
  std::vector<int> e;
  for (int i = 0; i < len; ++i) e.push_back(i % 2 == 0 ? 1 : -1);
  return e;
}

RVec random_vec(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> c(-3, 3);
  SparseBuilder<Rational> b;
  for (int i = 0; i < n; ++i) {
    int v = c(rng);
    if (v != 0) b.add(i, Rational(v, 1 + (i % 2)));
  }
  return b.take();
}

// ---------------------------------------------------------------------------

void tangency(Verdict& v) {
  int fields = 0, models = 0;
  auto run = [&](Family f, int n, const std::vector<int>& eps) {
    HypersurfaceModel m = builtin_model(f, n, eps);
    ++models;
    for (const auto& lf : builtin_symmetries(f, n, eps)) {
      ++fields;
      v.require(is_zero(tangency_residual(m, lf.field)), family_name(f) + " n=" + std::to_string(n) + " " + lf.label);
    }
  };
  for (int n = 2; n <= 5; ++n) {
    if (n == 4) {
      for (const auto& e : all_sign_patterns(2)) run(Family::Indefinite, 4, e);
    } else {
      run(Family::Indefinite, n, mixed_eps(n - 2));
    }
    run(Family::Definite, n, {});
  }
  v.detail << fields << " catalog fields over " << models << " models, all residuals zero=" << (v.pass ? "yes" : "no");
}

void rediscovery(Verdict& v) {
  struct Case {
    Family f;
    int n;
    std::vector<int> eps;
    int want;
    std::vector<int> degrees;
  };
  const std::vector<Case> cases = {{Family::Indefinite, 2, {}, 8, {2, 3, 4}},   {Family::Indefinite, 3, {1}, 13, {2, 3, 4}},
                                   {Family::Definite, 2, {}, 7, {2, 3, 4}},     {Family::Definite, 3, {}, 12, {2, 3, 4}},
                                   {Family::Flat, 2, {1, 1}, 15, {3}},          {Family::Flat, 3, {1, 1, 1}, 24, {3}}};
  double worst = 0;
  for (const auto& c : cases) {
    HypersurfaceModel m = builtin_model(c.f, c.n, c.eps);
    std::vector<int> got;
    for (int d : c.degrees) {
      auto t0 = Clock::now();
      got.push_back(solve_symmetries(m, d).dimension);
      const double s = std::chrono::duration<double>(Clock::now() - t0).count();
      worst = std::max(worst, s);
      v.require(s <= 120, "instance over 2 min");
    }
    v.detail << family_name(c.f) << " n=" << c.n << " " << dims_str(got) << " ";
    for (int g : got) v.require(g == c.want, family_name(c.f) + " n=" + std::to_string(c.n) + " expected " + std::to_string(c.want));
  }
  v.detail << "slowest instance " << worst << " s";
}

void structure(Verdict& v) {
  for (int n = 2; n <= 4; ++n) {
    std::vector<int> eps = n == 4 ? std::vector<int>{1, -1} : std::vector<int>(static_cast<size_t>(n - 2), 1);
    for (Family f : {Family::Indefinite, Family::Definite}) {
      const std::string tag = family_name(f) + " n=" + std::to_string(n);
      const std::vector<int> e = f == Family::Indefinite ? eps : std::vector<int>{};
      RealLieAlgebra L = close_and_structure(builtin_symmetries(f, n, e));
      RadicalReport r = radical_and_series(L);
      int want;
      if (f == Family::Definite) {
        want = 2 * n;
      } else {
        // n = 2: the whole 8-dimensional algebra is solvable.
        want = n == 2 ? 8 : 4 * n + 1;
      }
      v.require(r.radical.dim() == want, tag + " radical " + std::to_string(r.radical.dim()) + " != " + std::to_string(want));
      if (f == Family::Definite && n == 2)
        v.require(r.radical_derived_length == 3, "definite n=2 radical derived length " + std::to_string(r.radical_derived_length));
      LeviCandidate cand = catalog_levi_candidate(f, n, e, L);
      LeviVerdict lv = levi_check(L, cand.subspace);
      v.require(lv.pass, tag + " levi check failed at " + lv.failed);
      bool match = cand.reference == "0" ? lv.dim == 0
                                         : fingerprint(L.subalgebra(cand.subspace.basis)) == fingerprint(reference_algebra(cand.reference));
      v.require(match, tag + " fingerprint differs from " + cand.reference);
      v.detail << tag << " dim " << L.dim() << " rad " << r.radical.dim() << " levi " << cand.reference << "; ";
    }
  }
}

void parabolic_suite(Verdict& v) {
  for (int n = 2; n <= 6; ++n) {
    GradedSU G = graded_su(1, n + 1);
    std::vector<int> d;
    for (int k = -2; k <= 2; ++k) d.push_back(G.real.dim(k));
    v.require(d == std::vector<int>{1, 2 * n, n * n + 1, 2 * n, 1}, "grading dims at n=" + std::to_string(n));
    v.require(G.real.dim() == n * n + 4 * n + 3, "total at n=" + std::to_string(n));
    std::vector<SparseVec<Rational>> all;
    for (int i = 0; i < G.real.dim(0); ++i) all.push_back({{i, Rational(1)}});
    auto full = tanaka_prolongation(G.real, all, 3);
    v.require(full.dims == std::vector<int>{2 * n, 1, 0}, "full prolongation at n=" + std::to_string(n) + " " + dims_str(full.dims));
    auto zero = tanaka_prolongation(G.real, {}, 3);
    v.require(zero.dims == std::vector<int>{0, 0, 0}, "zero prolongation at n=" + std::to_string(n));
  }
  v.detail << "dims and full/zero prolongations for n=2..6; ";
  for (int n = 2; n <= 3; ++n) {
    GradedSU G = graded_su(1, n + 1);
    auto lw = lowest_weight_vectors(G, hasse_weight2(n + 1)[2]);
    CurvatureModule<Gaussian> M(G.complex);
    auto a0 = annihilator(M, lw.vectors.front());
    auto pr = tanaka_prolongation(G.complex, a0, 3);
    v.require(pr.dims == std::vector<int>{0, 0, 0}, "lowest annihilator prolongation at n=" + std::to_string(n));
    v.detail << "annihilator n=" << n << " dim " << a0.size() << " prolongs to " << dims_str(pr.dims) << " ";
  }
}

void sp2(Verdict& v) {
  GradedSU G = graded_su(5, 1);
  CurvatureModule<Rational> M(G.real);
  auto h1 = sp_embedding(2, G);
  auto h2 = sp_embedding(2, G, conjugated_quaternionic_form(2));
  const int d1 = invariant_subspace(h1, M), d2 = invariant_subspace(h2, M);
  v.detail << "module dim " << M.dim() << ", sp(2) generators " << h1.size() << ", invariant dims " << d1 << " and " << d2
           << " (expected 0 and 0)";
  v.require(d1 == 0, "standard embedding fixes a nonzero subspace");
  v.require(d2 == 0, "conjugated embedding fixes a nonzero subspace");
}

void kostant_suite(Verdict& v) {
  for (int n = 3; n <= 5; ++n) {
    const int l = n + 1;
    auto comps = hasse_weight2(l);
    v.require(comps.size() == 3, "word count at n=" + std::to_string(n));
    v.require(real_component_count(comps) == 2, "real components at n=" + std::to_string(n));
    v.require(comps[0].partner == comps[1].word && comps[1].partner == comps[0].word && comps[2].self_conjugate(),
              "pairing at n=" + std::to_string(n));
    Marks want(static_cast<size_t>(l), 0);
    want.front() = want.back() = -3;
    want[1] = want[static_cast<size_t>(l - 2)] = 2;
    v.require(comps[2].marks == want, "marks at n=" + std::to_string(n));
  }
  for (int n = 3; n <= 4; ++n) {
    auto r = lowest_weight_vectors(graded_su(1, n + 1), hasse_weight2(n + 1)[2]);
    v.require(r.vectors.size() == 1, "lines at n=" + std::to_string(n));
    v.require(!r.real, "sigma-stable line at n=" + std::to_string(n));
    v.require(r.annihilator_dim == n * n - 2 * n + 3, "annihilator at n=" + std::to_string(n));
    v.detail << "n=" << n << " lines " << r.vectors.size() << " real " << (r.real ? "yes" : "no") << " annihilator "
             << r.annihilator_dim << "; ";
  }
  v.detail << "3 words, 2 components, marks (-3,2,0,..,0,2,-3) for n=3..5";
}

void bounds_suite(Verdict& v) {
  int rows = 0;
  for (int n = 1; n <= 8; ++n) {
    for (int k = 0; 2 * k <= n; ++k) {
      BoundsTable t = bounds(n, k);
      ++rows;
      int sub;
      if (n == 1) sub = 3;
      else if (n == 2) sub = k == 0 ? 7 : 8;
      else sub = k == 0 ? n * n + 3 : n * n + 4;
      const std::string tag = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
      v.require(t.max_dim == (n + 2) * (n + 2) - 1, "max " + tag);
      v.require(t.submax_dim == sub, "submax " + tag);
      v.require(t.stability_group == n * n + 2 * n + 2, "stability group " + tag);
    }
  }
  v.detail << rows << " (n,k) rows for n=1..8";
}

// Property suites -----------------------------------------------------------

void jacobi(Verdict& v) {
  std::vector<FieldBasis> pools = {builtin_symmetries(Family::Indefinite, 4, {1, -1}), builtin_symmetries(Family::Definite, 4)};
  std::mt19937 rng(101);
  for (int c = 0; c < kCases; ++c) {
    const FieldBasis& pool = pools[static_cast<size_t>(c % 2)];
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> coef(-3, 3);
    auto field = [&] {
      HoloVectorField x = HoloVectorField::zero(4);
      for (int t = 0; t < 2; ++t) x += Gaussian(Rational(coef(rng)), Rational(coef(rng))) * pool[pick(rng)].field;
      return x;
    };
    HoloVectorField a = field(), b = field(), d = field();
    v.require((bracket(a, bracket(b, d)) + bracket(b, bracket(d, a)) + bracket(d, bracket(a, b))).is_zero(), "case " + std::to_string(c));
  }
  v.detail << kCases << " random catalog triples";
}

void bar_diff(Verdict& v) {
  crsym::testing::ExprTextGen gen(202);
  const int slots[] = {slot_z(1), slot_w(1), slot_z(2), kSlotU};
  for (int c = 0; c < kCases; ++c) {
    VarTable vars(2);
    Expr a = parse_expr(gen.expr(2), vars);
    Expr b = parse_expr(gen.expr(2), vars);
    const std::string tag = "case " + std::to_string(c);
    v.require(bar(bar(a)) == a, tag + " bar not involutive");
    v.require(bar(a * b) == bar(a) * bar(b) && bar(a + b) == bar(a) + bar(b), tag + " bar not a homomorphism");
    const int j = 1 + c % 2;
    v.require(bar(diff(a, slot_z(j))) == diff(bar(a), slot_w(j)), tag + " diff does not commute with bar");
    const int s = slots[c % 4];
    v.require(diff(a * b, s) == diff(a, s) * b + a * diff(b, s), tag + " Leibniz");
  }
  v.detail << kCases << " random expression pairs (involution, homomorphism, conjugate derivative, Leibniz)";
}

void killing_invariance(Verdict& v) {
  std::vector<RealLieAlgebra> algebras = {close_and_structure(builtin_symmetries(Family::Indefinite, 3, {-1})),
                                          close_and_structure(builtin_symmetries(Family::Definite, 3)), reference_su(1, 2)};
  std::vector<KillingForm> forms;
  for (const auto& l : algebras) forms.push_back(killing_form(l));
  auto K = [](const KillingForm& k, const RVec& x, const RVec& y) {
    Rational t = 0;
    for (const auto& [i, a] : x)
      for (const auto& [j, b] : y) t += a * b * k.matrix(i, j);
    return t;
  };
  std::mt19937 rng(303);
  for (int c = 0; c < kCases; ++c) {
    const size_t w = static_cast<size_t>(c % 3);
    const RealLieAlgebra& L = algebras[w];
    RVec x = random_vec(rng, L.dim()), y = random_vec(rng, L.dim()), z = random_vec(rng, L.dim());
    v.require(K(forms[w], L.bracket(x, y), z) + K(forms[w], y, L.bracket(x, z)) == 0, "case " + std::to_string(c));
  }
  v.detail << kCases << " random triples over 3 algebras";
}

void radical_ideal(Verdict& v) {
  std::vector<RealLieAlgebra> algebras = {close_and_structure(builtin_symmetries(Family::Indefinite, 4, {1, -1})),
                                          close_and_structure(builtin_symmetries(Family::Definite, 4))};
  std::vector<RadicalReport> reps;
  std::vector<Echelon<Rational>> rad;
  for (const auto& l : algebras) {
    reps.push_back(radical_and_series(l));
    rad.emplace_back(l.dim());
    for (const auto& b : reps.back().radical.basis) rad.back().insert(b);
  }
  std::mt19937 rng(404);
  std::uniform_int_distribution<int> co(-2, 2);
  for (int c = 0; c < kCases; ++c) {
    const size_t w = static_cast<size_t>(c % 2);
    RVec x = random_vec(rng, algebras[w].dim());
    RVec r;
    for (const auto& b : reps[w].radical.basis) axpy(r, Rational(co(rng)), b);
    v.require(rad[w].contains(algebras[w].bracket(x, r)), "case " + std::to_string(c));
  }
  v.detail << kCases << " random [L, r] brackets";
}

void goldens(Verdict& v) {
  int matched = 0;
  for (const auto& g : golden::kRuns) {
    auto out = cli::run(golden::words(g.args));
    std::ifstream in(golden::golden_file(g));
    if (!in) {
      v.require(false, "missing golden " + g.name);
      continue;
    }
    const bool ok = out.code == 0 && golden::stable(out.report) == nlohmann::json::parse(in);
    v.require(ok, g.name + " differs from its golden report");
    matched += ok ? 1 : 0;
  }
  v.detail << matched << "/" << golden::kRuns.size() << " report golden files match";
}

}  // namespace

int main() {
  bool all = true;
  all &= report(1, "tangency suite", 30, tangency);
  all &= report(2, "dimension rediscovery", 6 * 120, rediscovery);
  all &= report(3, "structure suite", 60, structure);
  all &= report(4, "parabolic suite", 60, parabolic_suite);
  all &= report(5, "sp(2) invariant check", 120, sp2);
  all &= report(6, "Kostant suite", 60, kostant_suite);
  all &= report(7, "bounds table", 1, bounds_suite);
  all &= report(8, "property suites", 5 * 60, [](Verdict& v) {
    const std::vector<std::pair<const char*, void (*)(Verdict&)>> suites = {
        {"Jacobi", jacobi}, {"bar/diff", bar_diff}, {"Killing", killing_invariance}, {"radical ideal", radical_ideal}, {"golden", goldens}};
    for (const auto& [name, fn] : suites) {
      Verdict sub;
      auto t0 = Clock::now();
      fn(sub);
      const double s = std::chrono::duration<double>(Clock::now() - t0).count();
      v.require(sub.pass && s <= 60, std::string(name) + " suite failed");
      for (const auto& f : sub.failures) v.require(false, std::string(name) + ": " + f);
      v.detail << name << ": " << sub.detail.str() << " (" << s << " s); ";
    }
  });
  return all ? 0 : 1;
}
