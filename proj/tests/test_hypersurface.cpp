#include <gtest/gtest.h>

#include "crsym/fields.hpp"
#include "crsym/hypersurface.hpp"
#include "crsym/parser.hpp"

using namespace crsym;

namespace {

const Gaussian kI = Gaussian::i();
Expr z(int j) { return Expr::variable(slot_z(j)); }
Expr w(int j) { return Expr::variable(slot_w(j)); }
Expr half_i_inv() { return Expr(Gaussian(Rational(0), Rational(-1, 2))); }  // 1/(2i)

}  // namespace

TEST(BuiltinModel, IndefiniteLowDimension) {
  HypersurfaceModel m = builtin_model(Family::Indefinite, 2, {});
  Expr expected = half_i_inv() * (z(1) * w(2) - w(1) * z(2)) + (z(1) * w(1)).pow(2);
  EXPECT_EQ(m.potential(), expected);
  EXPECT_TRUE(m.log_terms().empty());
}

TEST(BuiltinModel, DefiniteHasOneLogTerm) {
  HypersurfaceModel m = builtin_model(Family::Definite, 3);
  ASSERT_EQ(m.log_terms().size(), 1u);
  EXPECT_EQ(m.log_terms()[0].coeff, Rational(1));
  EXPECT_EQ(m.log_terms()[0].arg, (Expr(1) + z(1) * w(1)).as_poly());
  EXPECT_EQ(m.poly_part(), (z(2) * w(2) + z(3) * w(3)).as_poly());
}

TEST(BuiltinModel, FlatQuadric) {
  HypersurfaceModel m = builtin_model(Family::Flat, 2, {1, 1});
  EXPECT_EQ(m.potential(), z(1) * w(1) + z(2) * w(2));
}

TEST(BuiltinModel, Errors) {
  EXPECT_THROW(builtin_model(Family::Indefinite, 1, {}), std::invalid_argument);
  EXPECT_THROW(builtin_model(Family::Indefinite, 3, {}), std::invalid_argument);
  EXPECT_THROW(builtin_model(Family::Flat, 2, {1}), std::invalid_argument);
  EXPECT_THROW(builtin_model(Family::Definite, 1), std::invalid_argument);
}

TEST(CustomModel, Validation) {
  EXPECT_NO_THROW(custom_model(2, "abs2(z1) - abs2(z2) + Re(z1^2*conj(z2))"));
  EXPECT_THROW(custom_model(2, "z1 + abs2(z1) + abs2(z2)"), std::invalid_argument);  // not real
  EXPECT_THROW(custom_model(2, "1 + abs2(z1) + abs2(z2)"), std::invalid_argument);   // phi(0) != 0
  EXPECT_THROW(custom_model(2, "abs2(z1)"), std::invalid_argument);                  // degenerate
  EXPECT_THROW(custom_model(2, "abs2(z1) + abs2(z2) + u"), std::invalid_argument);   // not rigid
  EXPECT_THROW(custom_model(1, "log(2 + abs2(z1))"), std::invalid_argument);        // Q(0) != 1
}

TEST(ModelFile, Parse) {
  HypersurfaceModel m = parse_model_file("# definite\nn = 2\npotential = log(1 + abs2(z1)) + abs2(z2)\n");
  EXPECT_EQ(m.n(), 2);
  EXPECT_EQ(m.potential(), builtin_model(Family::Definite, 2).potential());
  EXPECT_THROW(parse_model_file("potential = abs2(z1)\n"), std::invalid_argument);
  EXPECT_THROW(parse_model_file("n = 1\npotential = abs2(z2)\n"), std::invalid_argument);
  EXPECT_THROW(parse_model_file("n = x\npotential = abs2(z1)\n"), std::invalid_argument);
  EXPECT_THROW(parse_model_file("n = 1\nphi = abs2(z1)\n"), std::invalid_argument);
}

TEST(Tangency, TranslationAlongNormal) {
  HypersurfaceModel m = builtin_model(Family::Indefinite, 3, {1});
  EXPECT_TRUE(is_zero(tangency_residual(m, HoloVectorField::partial(3, 4))));
}

TEST(Tangency, NonSymmetryResidual) {
  // Hand differentiation of phi = (z1 w2 - w1 z2)/(2i) + z1^2 w1^2:
  // F_z1 + F_w1 = (z2 - w2)/(2i) - 2 z1 w1 (z1 + w1).
  HypersurfaceModel m = builtin_model(Family::Indefinite, 2, {});
  Expr r = tangency_residual(m, HoloVectorField::partial(2, 1));
  Expr oracle = half_i_inv() * (z(2) - w(2)) - Expr(2) * z(1) * w(1) * (z(1) + w(1));
  EXPECT_EQ(r, oracle);
  EXPECT_FALSE(is_zero(r));
}

TEST(Tangency, CatalogFieldsAreSymmetries) {
  for (int n = 2; n <= 4; ++n) {
    std::vector<int> eps(static_cast<size_t>(n - 2), 1);
    if (n == 4) eps = {1, -1};
    HypersurfaceModel m1 = builtin_model(Family::Indefinite, n, eps);
    for (const auto& f : builtin_symmetries(Family::Indefinite, n, eps)) {
      EXPECT_TRUE(is_zero(tangency_residual(m1, f.field))) << "indefinite n=" << n << " " << f.label;
    }
    HypersurfaceModel m2 = builtin_model(Family::Definite, n);
    for (const auto& f : builtin_symmetries(Family::Definite, n)) {
      EXPECT_TRUE(is_zero(tangency_residual(m2, f.field))) << "definite n=" << n << " " << f.label;
    }
  }
}

TEST(Tangency, ResidualIsRealAndLinear) {
  HypersurfaceModel m = builtin_model(Family::Definite, 2);
  HoloVectorField v = HoloVectorField::component(2, 1, (z(1).pow(2) + Expr(kI) * z(2)).as_poly());
  HoloVectorField x = HoloVectorField::component(2, 3, (z(3) * z(1)).as_poly());
  Expr rv = tangency_residual(m, v);
  Expr rx = tangency_residual(m, x);
  EXPECT_EQ(bar(rv), rv);
  EXPECT_EQ(bar(rx), rx);
  Gaussian a(Rational(3, 2)), b(Rational(-5));
  EXPECT_EQ(tangency_residual(m, a * v + b * x), Expr(a) * rv + Expr(b) * rx);
}

TEST(Tangency, DimensionMismatch) {
  HypersurfaceModel m = builtin_model(Family::Definite, 2);
  EXPECT_THROW(tangency_residual(m, HoloVectorField::partial(3, 1)), std::invalid_argument);
}

TEST(LeviSignature, Families) {
  for (int n = 2; n <= 5; ++n) EXPECT_EQ(levi_signature(builtin_model(Family::Definite, n)), (LeviSignature{n, 0, 0}));
  EXPECT_EQ(levi_signature(builtin_model(Family::Flat, 3, {1, -1, -1})), (LeviSignature{1, 2, 0}));
  // [[0, -i/2], [i/2, 0]] + [1]: the 2x2 block has negative determinant.
  EXPECT_EQ(levi_signature(builtin_model(Family::Indefinite, 3, {1})), (LeviSignature{2, 1, 0}));
  for (int n = 2; n <= 6; ++n) {
    std::vector<int> eps(static_cast<size_t>(n - 2), -1);
    LeviSignature s = levi_signature(builtin_model(Family::Indefinite, n, eps));
    EXPECT_GE(s.pos, 1);
    EXPECT_GE(s.neg, 1);
    EXPECT_EQ(s.null, 0);
  }
}

TEST(BuiltinModel, PotentialsAreReal) {
  for (int n = 2; n <= 5; ++n) {
    std::vector<int> eps(static_cast<size_t>(n - 2), 1);
    for (const auto& m : {builtin_model(Family::Indefinite, n, eps), builtin_model(Family::Definite, n)}) {
      EXPECT_TRUE(is_zero(bar(m.potential()) - m.potential()));
    }
  }
}
