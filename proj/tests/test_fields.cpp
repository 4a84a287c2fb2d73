#include <gtest/gtest.h>

#include <random>

#include "crsym/fields.hpp"

using namespace crsym;

namespace {

const Gaussian kI = Gaussian::i();
Poly z(int j) { return Poly::variable(slot_z(j)); }

const HoloVectorField& find(const FieldBasis& b, const std::string& label) {
  for (const auto& f : b) {
    if (f.label == label) return f.field;
  }
  throw std::out_of_range(label);
}

int count_prefix(const FieldBasis& b, const std::string& prefix) {
  int c = 0;
  for (const auto& f : b) c += f.label.rfind(prefix, 0) == 0 ? 1 : 0;
  return c;
}

}  // namespace

TEST(Catalog, Counts) {
  for (int n = 2; n <= 6; ++n) {
    std::vector<int> eps(static_cast<size_t>(n - 2), 1);
    EXPECT_EQ(builtin_symmetries(Family::Indefinite, n, eps).size(), static_cast<size_t>(n * n + 4)) << n;
    EXPECT_EQ(builtin_symmetries(Family::Definite, n).size(), static_cast<size_t>(n * n + 3)) << n;
  }
  FieldBasis b2 = builtin_symmetries(Family::Indefinite, 2, {});
  std::vector<std::string> labels;
  for (const auto& f : b2) labels.push_back(f.label);
  EXPECT_EQ(labels, (std::vector<std::string>{"H_1", "H_2", "T_1", "T_1'", "T_2", "T_2'", "T_3", "S_1"}));

  FieldBasis b4 = builtin_symmetries(Family::Indefinite, 4, {1, -1});
  EXPECT_EQ(count_prefix(b4, "R_"), 2);
  EXPECT_EQ(count_prefix(b4, "S_"), 5);
  EXPECT_THROW(builtin_symmetries(Family::Indefinite, 1, {}), std::invalid_argument);
  EXPECT_THROW(builtin_symmetries(Family::Flat, 2, {1, 1}), std::invalid_argument);
}

TEST(Bracket, H2WithT1) {
  // Term-by-term: [H_2,T_1] = -i d1 - 4 z1^2 d2 - i z2 d3.
  FieldBasis b = builtin_symmetries(Family::Indefinite, 2, {});
  HoloVectorField oracle = HoloVectorField::component(2, 1, Poly(-kI)) +
                           HoloVectorField::component(2, 2, Gaussian(-4) * z(1).pow(2)) +
                           HoloVectorField::component(2, 3, -kI * z(2));
  HoloVectorField br = bracket(find(b, "H_2"), find(b, "T_1"));
  EXPECT_EQ(br, oracle);
  EXPECT_EQ(br, Gaussian(-1) * find(b, "T_1'"));
}

TEST(Bracket, TrivialCases) {
  FieldBasis b = builtin_symmetries(Family::Definite, 3);
  const HoloVectorField& t4 = find(b, "T_4");
  for (const auto& f : b) {
    EXPECT_TRUE(bracket(t4, f.field).is_zero()) << f.label;
    EXPECT_TRUE(bracket(f.field, f.field).is_zero()) << f.label;
  }
}

TEST(Bracket, JacobiOnRandomCatalogTriples) {
  std::vector<FieldBasis> pools = {builtin_symmetries(Family::Indefinite, 4, {1, -1}),
                                   builtin_symmetries(Family::Definite, 4)};
  std::mt19937 rng(2024);
  for (int c = 0; c < 1000; ++c) {
    const FieldBasis& pool = pools[static_cast<size_t>(c % 2)];
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> coef(-3, 3);
    auto random_field = [&] {
      HoloVectorField v = HoloVectorField::zero(4);
      for (int t = 0; t < 2; ++t) v += Gaussian(Rational(coef(rng)), Rational(coef(rng))) * pool[pick(rng)].field;
      return v;
    };
    HoloVectorField u = random_field(), v = random_field(), w = random_field();
    HoloVectorField s = bracket(u, bracket(v, w)) + bracket(v, bracket(w, u)) + bracket(w, bracket(u, v));
    ASSERT_TRUE(s.is_zero());
  }
}

TEST(Closure, CatalogsAreClosed) {
  for (int n = 2; n <= 4; ++n) {
    std::vector<int> eps(static_cast<size_t>(n - 2), 1);
    if (n == 4) eps = {1, -1};
    EXPECT_EQ(close_and_structure(builtin_symmetries(Family::Indefinite, n, eps)).dim(), n * n + 4);
    EXPECT_EQ(close_and_structure(builtin_symmetries(Family::Definite, n)).dim(), n * n + 3);
  }
}

TEST(Closure, Errors) {
  FieldBasis dup = {{"A", HoloVectorField::partial(1, 1)},
                    {"B", HoloVectorField::component(1, 2, z(1))},
                    {"C", Gaussian(2) * HoloVectorField::partial(1, 1)}};
  try {
    close_and_structure(dup);
    FAIL();
  } catch (const NotIndependent& e) {
    EXPECT_EQ(e.index(), 2);
  }
  // Over R, d1 and i d1 are independent.
  FieldBasis pair = {{"A", HoloVectorField::partial(1, 1)}, {"B", kI * HoloVectorField::partial(1, 1)}};
  EXPECT_EQ(close_and_structure(pair).dim(), 2);

  FieldBasis open = {{"A", HoloVectorField::partial(1, 1)}, {"B", HoloVectorField::component(1, 1, z(1).pow(2))}};
  try {
    close_and_structure(open);
    FAIL();
  } catch (const NotClosed& e) {
    EXPECT_EQ(e.a(), 0);
    EXPECT_EQ(e.b(), 1);
    EXPECT_EQ(e.residual(), "2*z1 ; 0");
  }
}

TEST(FieldFile, Parse) {
  FieldBasis b = parse_field_file(2, "# comment\nT_3 : 0 ; 0 ; 1\nS_1 : 0 ; z1 ; 0\n");
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b[1].label, "S_1");
  EXPECT_EQ(b[1].field, HoloVectorField::component(2, 2, z(1)));
  EXPECT_THROW(parse_field_file(2, "X : 1 ; 0\n"), std::invalid_argument);
  EXPECT_THROW(parse_field_file(2, "X : conj(z1) ; 0 ; 0\n"), std::invalid_argument);
  EXPECT_THROW(parse_field_file(2, "X 1 ; 0 ; 0\n"), std::invalid_argument);
  EXPECT_THROW(parse_field_file(2, "X : log(1+abs2(z1)) ; 0 ; 0\n"), std::invalid_argument);
}

TEST(Solver, IndefiniteLowDegree) {
  SymmetrySolution s = solve_symmetries(builtin_model(Family::Indefinite, 2, {}), 2);
  EXPECT_EQ(s.dimension, 8);
  for (const auto& f : builtin_symmetries(Family::Indefinite, 2, {})) EXPECT_TRUE(s.contains(f.field)) << f.label;
  EXPECT_FALSE(s.contains(HoloVectorField::partial(2, 1)));
  HypersurfaceModel m = builtin_model(Family::Indefinite, 2, {});
  for (const auto& v : s.basis) EXPECT_TRUE(is_zero(tangency_residual(m, v)));
}

TEST(Solver, FlatQuadric) {
  EXPECT_EQ(solve_symmetries(builtin_model(Family::Flat, 2, {1, 1}), 2).dimension, 15);
  EXPECT_EQ(solve_symmetries(builtin_model(Family::Flat, 1, {1}), 2).dimension, 8);
}

TEST(Solver, DefiniteStable) {
  HypersurfaceModel m = builtin_model(Family::Definite, 2);
  SymmetrySolution s2 = solve_symmetries(m, 2);
  SymmetrySolution s3 = solve_symmetries(m, 3);
  EXPECT_EQ(s2.dimension, 7);
  EXPECT_EQ(s3.dimension, 7);
  for (const auto& f : builtin_symmetries(Family::Definite, 2)) EXPECT_TRUE(s3.contains(f.field)) << f.label;
  EXPECT_THROW(solve_symmetries(m, 0), std::invalid_argument);
}
