// Seeded property tests over random algebras.

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "homalg/constructions.hpp"
#include "homalg/homstruct.hpp"
#include "homalg/io.hpp"

using namespace homalg;

namespace {

GeneratorConfig config(std::uint64_t seed, bool left_unital = false) {
  GeneratorConfig cfg;
  cfg.seed = 300 + seed;
  cfg.field = seed % 3 == 0 ? Field::rational() : Field::prime(seed % 3 == 1 ? 2 : 5);
  cfg.dim = 2 + seed % 3;
  cfg.pool = default_pool(cfg.field);
  cfg.force_left_unital = left_unital;
  return cfg;
}

class Property : public ::testing::TestWithParam<std::uint64_t> {};

}  // namespace

TEST_P(Property, TwistCombinationsAreHomAssociative) {
  const GeneratorConfig cfg = config(GetParam());
  const Algebra a = random_algebra(cfg);
  const TwistSpace t = twist_space(a);
  std::mt19937_64 rng(GetParam());
  const Element coeffs = random_element(cfg.field, t.dim(), rng);
  LinearMap m(cfg.field, cfg.dim, cfg.dim);
  for (std::size_t i = 0; i < t.dim(); ++i) m = m + coeffs[i] * t.maps[i];
  EXPECT_TRUE(is_hom_associative(HomAlgebra(a, m)).holds);
}

TEST_P(Property, HuChainAndOppositeSymmetry) {
  const Algebra a = random_algebra(config(GetParam()));
  const Subspace two = hu_n(a, Side::two_sided);
  EXPECT_TRUE(hu_n(a, Side::left).contains(two));
  EXPECT_TRUE(hu_n(a, Side::right).contains(two));
  EXPECT_TRUE(hu_t(a, Side::left).contains(hu_n(a, Side::left)));
  EXPECT_TRUE(hu_t(a, Side::right).contains(hu_n(a, Side::right)));
  const Algebra op = opposite(a);
  EXPECT_EQ(hu_t(op, Side::left), hu_t(a, Side::right));
  EXPECT_EQ(hu_n(op, Side::left), hu_n(a, Side::right));
  EXPECT_EQ(ac_right_conditions(a), ac_left_conditions(op));
}

TEST_P(Property, LeftUnitalSplitAndDimensions) {
  const Algebra a = random_algebra(config(GetParam(), true));
  const OneSidedAC r = ac_one_sided(a, Side::left);
  EXPECT_TRUE(is_direct_sum(r.ac_unit, r.annihilator, r.ac));
  EXPECT_EQ(twist_space(a).dim(), r.ac_unit.dim());
  for (const auto& v : r.ac.vectors()) {
    EXPECT_TRUE(is_hom_associative(HomAlgebra(a, left_op(a, v))).holds);
  }
}

TEST_P(Property, SubspaceDimensionFormula) {
  const GeneratorConfig cfg = config(GetParam());
  std::mt19937_64 rng(GetParam());
  std::vector<Element> xs, ys;
  for (int i = 0; i < 3; ++i) xs.push_back(random_element(cfg.field, 5, rng));
  for (int i = 0; i < 3; ++i) ys.push_back(random_element(cfg.field, 5, rng));
  ys.push_back(xs[0]);
  const Subspace x = Subspace::span(cfg.field, 5, xs), y = Subspace::span(cfg.field, 5, ys);
  EXPECT_EQ(x.dim() + y.dim(), meet(x, y).dim() + join(x, y).dim());
  std::reverse(xs.begin(), xs.end());
  EXPECT_EQ(Subspace::span(cfg.field, 5, xs), x);
  const Matrix m = Matrix::from_rows(cfg.field, 5, ys);
  for (const auto& v : kernel(m).vectors()) EXPECT_TRUE(is_zero(m.apply(v)));
  EXPECT_EQ(kernel(m).dim() + rank(m), 5u);
}

TEST_P(Property, DocumentsRoundTrip) {
  const GeneratorConfig cfg = config(GetParam());
  AlgebraDocument doc = document_of(random_algebra(cfg));
  std::mt19937_64 rng(GetParam());
  doc.twist = random_matrix(cfg.field, cfg.dim, cfg.dim, rng);
  doc.meta["generator"] = generator_meta(cfg);
  EXPECT_EQ(parse_document(emit_document(doc)), doc);
}

TEST_P(Property, YauCriterionMatchesDirectCheck) {
  const GeneratorConfig cfg = config(GetParam());
  const Algebra a = random_algebra(cfg);
  std::mt19937_64 rng(GetParam() + 99);
  const LinearMap al = GetParam() % 2 ? random_matrix(cfg.field, cfg.dim, cfg.dim, rng)
                                      : left_op(a, random_element(cfg.field, cfg.dim, rng));
  EXPECT_EQ(yau_criterion(a, al).holds, is_hom_associative(yau_twist(a, al)).holds);
}

INSTANTIATE_TEST_SUITE_P(Seeds, Property, ::testing::Range<std::uint64_t>(0, 24));
