#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "gsfock/errors.hpp"
#include "gsfock/statistics_ops.hpp"
#include "gsfock/statistics_zoo.hpp"

namespace gsfock {
namespace {

TEST(AbelianGroup, MixedRadixEnumeration) {
  const AbelianGroup g({2, 3});
  EXPECT_EQ(g.order(), 6u);
  EXPECT_EQ(g.element(0), (GroupElement{0, 0}));
  EXPECT_EQ(g.element(1), (GroupElement{0, 1}));
  EXPECT_EQ(g.element(3), (GroupElement{1, 0}));
  for (std::size_t k = 0; k < g.order(); ++k) EXPECT_EQ(g.index(g.element(k)), k);
  EXPECT_EQ(g.add({1, 2}, {1, 2}), (GroupElement{0, 1}));
  EXPECT_EQ(g.normalize({-1, 4}), (GroupElement{1, 1}));
}

TEST(AbelianGroup, Limits) {
  EXPECT_THROW(AbelianGroup({}), InputError);
  EXPECT_THROW(AbelianGroup({0}), InputError);
  EXPECT_THROW(AbelianGroup({8, 9}), InputError);
  EXPECT_NO_THROW(AbelianGroup({8, 8}));
}

TEST(Bicharacter, StandardZ2IsExactSign) {
  const Bicharacter eps = Bicharacter::standard(AbelianGroup({2}));
  EXPECT_EQ(eps({0}, {0}), Complex(1.0));
  EXPECT_EQ(eps({0}, {1}), Complex(1.0));
  EXPECT_EQ(eps({1}, {1}), Complex(-1.0));
  const BicharacterReport r = check_bicharacter(eps);
  EXPECT_TRUE(r.bicharacter_ok);
  EXPECT_TRUE(r.symmetric_ok);
  EXPECT_TRUE(r.phases_ok);
}

TEST(Bicharacter, StandardZ3) {
  const Bicharacter eps = Bicharacter::standard(AbelianGroup({3}));
  const Complex w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  EXPECT_LE(std::abs(eps({1}, {1}) - w), 1e-15);
  EXPECT_LE(std::abs(eps({1}, {2}) - w * w), 1e-15);
  EXPECT_TRUE(check_bicharacter(eps).bicharacter_ok);
  // eps(1, 1)^2 = exp(4 pi i / 3) != 1.
  EXPECT_FALSE(check_bicharacter(eps).symmetric_ok);
}

TEST(Bicharacter, TrivialGroup) {
  const Bicharacter eps = Bicharacter::standard(AbelianGroup({1}));
  EXPECT_EQ(eps({0}, {0}), Complex(1.0));
  EXPECT_TRUE(check_bicharacter(eps).bicharacter_ok);
}

TEST(Bicharacter, ViolationsAreDetected) {
  ComplexMatrix table = ComplexMatrix::Ones(2, 2);
  table(1, 1) = 2.0;
  const BicharacterReport r = check_bicharacter(Bicharacter(AbelianGroup({2}), table));
  EXPECT_FALSE(r.bicharacter_ok);
  EXPECT_FALSE(r.phases_ok);
  EXPECT_THROW(family_color(Bicharacter(AbelianGroup({2}), table), {{0}, {1}}), ValidationError);
  EXPECT_THROW(Bicharacter(AbelianGroup({2}), ComplexMatrix::Ones(3, 3)), InputError);
}

TEST(Bicharacter, NonSymmetricAcceptedWithWarning) {
  // eps(a, b) = (-1)^{a_1 b_2} on Z2 + Z2 is bimultiplicative but not symmetric.
  const AbelianGroup g({2, 2});
  ComplexMatrix table(4, 4);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      table(a, b) = (g.element(a)[0] * g.element(b)[1]) % 2 ? -1.0 : 1.0;
  const Bicharacter eps(g, table);
  const BicharacterReport r = check_bicharacter(eps);
  EXPECT_TRUE(r.bicharacter_ok);
  EXPECT_FALSE(r.symmetric_ok);
  const StatisticsSpec s = family_color(eps, {{1, 0}, {0, 1}});
  EXPECT_FALSE(s.warnings.empty());
}

TEST(Families, BoltzmannHasZeroCrossAndNoBraid) {
  const StatisticsSpec s = family_boltzmann(3);
  EXPECT_EQ(s.cross.matrix(), ComplexMatrix::Zero(9, 9));
  EXPECT_FALSE(s.braid.has_value());
}

TEST(Families, BosonAndFermion) {
  const StatisticsSpec b = family_boson(2);
  EXPECT_EQ(b.cross.matrix(), flip(2));
  ASSERT_TRUE(b.braid.has_value());
  EXPECT_EQ(b.braid->matrix(), flip(2));
  const StatisticsSpec f = family_fermion(2);
  EXPECT_EQ(f.cross.matrix(), -flip(2));
  ASSERT_TRUE(f.braid.has_value());
  EXPECT_EQ(f.braid->matrix(), -flip(2));
}

TEST(Families, QuonReducesToBoltzmannAndBoson) {
  EXPECT_EQ(family_quon(2, 0.0).cross.matrix(), family_boltzmann(2).cross.matrix());
  EXPECT_EQ(family_quon(2, 1.0).cross.matrix(), family_boson(2).cross.matrix());
  EXPECT_FALSE(family_quon(2, 0.5).braid.has_value());
  EXPECT_TRUE(family_quon(2, 0.5).warnings.empty());
  EXPECT_FALSE(family_quon(2, 1.5).warnings.empty());
  EXPECT_THROW(family_quon(2, std::nan("")), InputError);
  EXPECT_THROW(family_boson(0), InputError);
}

TEST(Families, ColorReproducesBosonAndFermion) {
  const Bicharacter eps = Bicharacter::standard(AbelianGroup({2}));
  const StatisticsSpec even = family_color(eps, {{0}, {0}});
  EXPECT_EQ(even.cross.matrix(), flip(2));
  EXPECT_EQ(even.braid->matrix(), flip(2));
  const StatisticsSpec odd = family_color(eps, {{1}, {1}});
  EXPECT_EQ(odd.cross.matrix(), -flip(2));
  EXPECT_EQ(odd.braid->matrix(), -flip(2));
}

TEST(Families, ColorCoefficients) {
  const Bicharacter eps = Bicharacter::standard(AbelianGroup({3}));
  const Grading degrees = {{0}, {1}, {2}};
  const StatisticsSpec s = family_color(eps, degrees);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_EQ(s.cross.coefficient(i, j, j, i), eps(degrees[j], degrees[i]));
      EXPECT_EQ(s.braid->coefficient(i, j, j, i), eps(degrees[i], degrees[j]));
    }
  // For a color cross the rearranged operator is the braid.
  EXPECT_LE(max_abs(tilde(s.cross).matrix() - s.braid->matrix()), 0.0);
}

TEST(Families, ColorRejectsBadDegrees) {
  const Bicharacter eps = Bicharacter::standard(AbelianGroup({2}));
  EXPECT_THROW(family_color(eps, {}), InputError);
  EXPECT_THROW(family_color(eps, {{0, 1}}), InputError);
}

TEST(Families, LoadCustom) {
  const StatisticsSpec s = load_custom(flip(2), flip(2));
  EXPECT_EQ(s.dim, 2u);
  EXPECT_TRUE(s.braid.has_value());
  EXPECT_FALSE(load_custom(flip(2), std::nullopt).braid.has_value());
  EXPECT_THROW(load_custom(ComplexMatrix::Zero(3, 3), std::nullopt), InputError);
  EXPECT_THROW(load_custom(ComplexMatrix::Zero(4, 3), std::nullopt), InputError);
  EXPECT_THROW(load_custom(flip(2), flip(3)), InputError);
}

}  // namespace
}  // namespace gsfock
