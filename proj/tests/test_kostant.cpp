#include <gtest/gtest.h>

#include <algorithm>

#include "crsym/kostant.hpp"

using namespace crsym;

namespace {

// Weyl group of A_l acting on epsilon coordinates by permutations; weights
// are doubled so rho stays integral.
Marks eps_oracle(int l, int a, int b) {
  std::vector<int> x(static_cast<size_t>(l + 1), 0);
  x.front() += 2;
  x.back() -= 2;
  for (int i = 0; i <= l; ++i) x[static_cast<size_t>(i)] += l - 2 * i;  // + 2 rho
  std::swap(x[static_cast<size_t>(b - 1)], x[static_cast<size_t>(b)]);
  std::swap(x[static_cast<size_t>(a - 1)], x[static_cast<size_t>(a)]);
  Marks m;
  for (int i = 0; i < l; ++i) m.push_back((x[static_cast<size_t>(i)] - x[static_cast<size_t>(i + 1)]) / 2 - 1);
  return m;
}

std::vector<SparseVec<Gaussian>> all_of_g0(const GradedAlgebra<Gaussian>& g) {
  std::vector<SparseVec<Gaussian>> out;
  for (int i = 0; i < g.dim(0); ++i) out.push_back({{i, Gaussian(1)}});
  return out;
}

}  // namespace

TEST(RootSystem, Basics) {
  for (int l = 1; l <= 8; ++l) {
    RootSystemA R(l);
    EXPECT_EQ(static_cast<int>(R.positive_roots().size()), l * (l + 1) / 2);
    Marks lr = R.highest_root();
    for (size_t i = 0; i < lr.size(); ++i) EXPECT_GT(lr[i] + R.rho()[i], 0);
    for (int i = 1; i <= l; ++i) EXPECT_EQ(R.reflect(R.reflect(lr, i), i), lr);
  }
  EXPECT_THROW(RootSystemA(0), std::invalid_argument);
}

TEST(Hasse, WordsPairingAndMarks) {
  for (int l = 3; l <= 8; ++l) {
    auto comps = hasse_weight2(l);
    ASSERT_EQ(comps.size(), 3u);
    EXPECT_EQ(comps[0].word, (std::pair{1, 2}));
    EXPECT_EQ(comps[1].word, (std::pair{l, l - 1}));
    EXPECT_EQ(comps[2].word, (std::pair{1, l}));
    EXPECT_EQ(comps[0].partner, comps[1].word);
    EXPECT_EQ(comps[1].partner, comps[0].word);
    EXPECT_TRUE(comps[2].self_conjugate());
    EXPECT_EQ(real_component_count(comps), 2);
    for (const auto& c : comps) {
      EXPECT_EQ(c.marks, eps_oracle(l, c.word.first, c.word.second));
      EXPECT_GT(c.homogeneity, 0);
      // Partner of the partner is the word itself.
      auto it = std::find_if(comps.begin(), comps.end(), [&](const auto& d) { return d.word == c.partner; });
      ASSERT_NE(it, comps.end());
      EXPECT_EQ(it->partner, c.word);
    }
    EXPECT_EQ(comps[0].homogeneity, 1);
    EXPECT_EQ(comps[2].homogeneity, 2);
  }
  EXPECT_THROW(hasse_weight2(2), std::invalid_argument);
}

TEST(Hasse, PrintedMarks) {
  for (int n = 3; n <= 5; ++n) {
    Marks want(static_cast<size_t>(n + 1), 0);
    want.front() = want.back() = -3;
    want[1] = want[static_cast<size_t>(n - 1)] = 2;
    EXPECT_EQ(hasse_weight2(n + 1)[2].marks, want);
  }
  // A_3: both neighbours feed the middle node.
  EXPECT_EQ(hasse_weight2(3)[2].marks, (Marks{-3, 4, -3}));
}

TEST(Hasse, InversionSetsUseCrossedNodes) {
  RootSystemA R(5);
  for (const auto& c : hasse_weight2(5)) {
    for (const auto& a : R.inversion_set({c.word.first, c.word.second})) EXPECT_TRUE(a.front() != 0 || a.back() != 0);
  }
  EXPECT_EQ(R.inversion_set({2, 3}).front(), (std::vector<int>{0, 1, 0, 0, 0}));
}

TEST(Satake, Counts) {
  auto s = satake(1, 5);
  EXPECT_EQ(s.arrows, 2);
  EXPECT_EQ(s.black, 2);
  EXPECT_EQ(s.white, 4);
  s = satake(2, 4);
  EXPECT_EQ(s.arrows, 2);
  EXPECT_EQ(s.black, 0);
  EXPECT_EQ(s.white, 5);
  s = satake(0, 3);
  EXPECT_EQ(s.arrows, 1);
  EXPECT_EQ(s.black, 2);
  EXPECT_EQ(s.white, 2);
  for (int n = 1; n <= 8; ++n)
    for (int k = 0; 2 * k <= n; ++k) EXPECT_EQ(satake(k, n).black + satake(k, n).white, n + 1);
  EXPECT_THROW(satake(2, 3), std::invalid_argument);
  EXPECT_THROW(satake(-1, 3), std::invalid_argument);
}

TEST(Satake, Render) {
  EXPECT_EQ(render_diagram(satake(0, 3), {-3, 2, 2, -3}), "nodes: x-*-*-x\nmarks: -3 2 2 -3\narrows: 1<->4\n");
  EXPECT_EQ(render_diagram(satake(1, 2)), "nodes: x-o-x\narrows: 1<->3\n");
  EXPECT_THROW(render_diagram(satake(0, 3), {1}), std::invalid_argument);
}

TEST(LowestWeight, OneNonRealLine) {
  for (int n = 2; n <= 4; ++n) {
    GradedSU G = graded_su(1, n + 1);
    auto comp = hasse_weight2(n + 1)[2];
    auto r = lowest_weight_vectors(G, comp);
    ASSERT_EQ(r.vectors.size(), 1u) << n;
    EXPECT_FALSE(r.real);
    EXPECT_EQ(r.annihilator_dim, n * n - 2 * n + 3);
    // The vector has the predicted weight.
    CurvatureModule<Gaussian> M(G.complex);
    Marks mu = comp.marks;
    for (auto& x : mu) x = -x;
    for (const auto& [b, v] : r.vectors[0]) EXPECT_EQ(module_weight(M, b), mu);
  }
}

TEST(LowestWeight, Errors) {
  GradedSU G = graded_su(1, 4);
  EXPECT_THROW(lowest_weight_vectors(G, hasse_weight2(5)[0]), std::invalid_argument);
  EXPECT_THROW(lowest_weight_vectors(G, hasse_weight2(5)[2]), std::invalid_argument);
}

TEST(LowestWeight, SigmaIsAnInvolution) {
  GradedSU G = graded_su(2, 3);
  CurvatureModule<Gaussian> M(G.complex);
  for (int b = 0; b < M.dim(); b += 7) {
    SparseVec<Gaussian> w{{b, Gaussian(Rational(2), Rational(-1))}};
    EXPECT_EQ(sigma_module(G, M, sigma_module(G, M, w)), w);
  }
  // Real elements of the module: the real basis is fixed by sigma on g.
  for (int a = 0; a < G.real.dim(); ++a) EXPECT_TRUE(is_zero(G.sigma(G.real.basis(a)) - G.real.basis(a)));
}

TEST(LowestWeight, AnnihilatorIsRigid) {
  for (int n = 2; n <= 3; ++n) {
    GradedSU G = graded_su(1, n + 1);
    auto r = lowest_weight_vectors(G, hasse_weight2(n + 1)[2]);
    CurvatureModule<Gaussian> M(G.complex);
    auto a0 = annihilator(M, r.vectors[0]);
    EXPECT_TRUE(is_subalgebra(G.complex, a0));
    auto pr = tanaka_prolongation(G.complex, a0, 3);
    EXPECT_EQ(pr.dims, (std::vector<int>{0, 0, 0})) << n;
    auto full = tanaka_prolongation(G.complex, all_of_g0(G.complex), 3);
    EXPECT_EQ(full.dims, (std::vector<int>{2 * n, 1, 0}));
  }
}

TEST(Bounds, Table) {
  auto b = bounds(2, 0);
  EXPECT_EQ(b.max_dim, 15);
  EXPECT_EQ(b.submax_dim, 7);
  EXPECT_EQ(bounds(2, 1).submax_dim, 8);
  EXPECT_EQ(bounds(1, 0).max_dim, 8);
  EXPECT_EQ(bounds(1, 0).submax_dim, 3);
  for (int n = 2; n <= 8; ++n) {
    GradedSU G = graded_su(1, n + 1);
    const int minus = G.real.dim(-2) + G.real.dim(-1);
    for (int k = 0; 2 * k <= n; ++k) {
      auto t = bounds(n, k);
      EXPECT_EQ(t.max_dim, G.real.dim());
      EXPECT_LT(t.submax_dim, t.max_dim);
      EXPECT_LE(t.submax_dim, t.universal_bound);
      EXPECT_EQ(minus + t.complex_annihilator_bound, t.universal_bound);
      EXPECT_EQ(minus + t.definite_annihilator_bound, n * n + 3);
      EXPECT_EQ(t.stability_group, G.real.dim(0) + G.real.dim(1) + G.real.dim(2));
    }
  }
  EXPECT_THROW(bounds(0, 0), std::invalid_argument);
  EXPECT_THROW(bounds(3, 2), std::invalid_argument);
}
