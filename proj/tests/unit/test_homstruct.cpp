#include <gtest/gtest.h>

#include <random>

#include "homalg/catalog.hpp"
#include "homalg/constructions.hpp"
#include "homalg/error.hpp"
#include "homalg/homstruct.hpp"
#include "homalg/report.hpp"

using namespace homalg;

namespace {

const Field Q = Field::rational();

// Every n x n matrix over F2, decoded from the bits of `code`.
LinearMap f2_map(std::size_t n, std::uint64_t code) {
  const Field f2 = Field::prime(2);
  LinearMap m(f2, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = Scalar::from_int(f2, (code >> (r * n + c)) & 1);
  return m;
}

// Direct triple evaluation, independent of the library's checker.
bool hom_assoc_by_hand(const Algebra& a, const LinearMap& al) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k) {
        const Element lhs = multiply(a, basis_product(a, i, j), al.column(k));
        const Element rhs = multiply(a, al.column(i), basis_product(a, j, k));
        if (lhs != rhs) return false;
      }
  return true;
}

}  // namespace

TEST(Twist, CayleyDicksonDimensions) {
  const std::size_t want[] = {2, 1, 0, 0};
  for (std::size_t level = 1; level <= 4; ++level) {
    const Algebra a = cayley_dickson_chain(level).base();
    EXPECT_EQ(twist_space(a).dim(), want[level - 1]) << level;
    EXPECT_EQ(ac_two_sided(a).dim(), want[level - 1]) << level;
  }
}

TEST(Twist, ZeroProductAdmitsEveryMap) {
  EXPECT_EQ(twist_space(zero_algebra_2()).dim(), 4u);
}

TEST(Twist, MatchesBruteForceOverF2) {
  const Field f2 = Field::prime(2);
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    GeneratorConfig cfg;
    cfg.seed = seed;
    cfg.dim = 2 + seed % 2;
    cfg.field = f2;
    cfg.pool = default_pool(f2);
    const Algebra a = random_algebra(cfg);
    const TwistSpace t = twist_space(a);
    std::size_t members = 0;
    const std::uint64_t total = std::uint64_t{1} << (cfg.dim * cfg.dim);
    for (std::uint64_t code = 0; code < total; ++code) {
      const LinearMap m = f2_map(cfg.dim, code);
      const bool ok = hom_assoc_by_hand(a, m);
      members += ok;
      EXPECT_EQ(t.contains(m), ok) << "seed " << seed << " code " << code;
    }
    EXPECT_EQ(members, std::uint64_t{1} << t.dim()) << seed;
  }
}

TEST(Twist, FlattenRoundTrip) {
  std::mt19937_64 rng(1);
  const LinearMap m = random_matrix(Q, 3, 3, rng);
  const Element v = flatten(m);
  EXPECT_EQ(v[1 * 3 + 2], m(1, 2));
  EXPECT_EQ(unflatten(Q, 3, v), m);
}

TEST(HuT, AssociativeWithoutAnnihilatorGivesCenter) {
  const Algebra h = quaternions();
  EXPECT_EQ(hu_t(h, Side::left), center(h));
  EXPECT_EQ(hu_n(h, Side::two_sided), center(h));
  const Algebra m = matrix_algebra_2();
  EXPECT_EQ(hu_t(m, Side::left), center(m));
}

TEST(AC, LeftUnitalP2Splits) {
  const Algebra p = left_unital_p2();
  const OneSidedAC r = ac_one_sided(p, Side::left);
  EXPECT_TRUE(r.split_ok);
  EXPECT_EQ(r.annihilator, Subspace::span(Q, 2, {p.basis(1)}));
  EXPECT_TRUE(is_direct_sum(r.ac_unit, r.annihilator, r.ac));
  EXPECT_EQ(r.ac_unit.dim(), twist_space(p).dim());
  EXPECT_NE(r.ac_unit, r.ac);
}

TEST(AC, MissingUnitiesAreTyped) {
  EXPECT_THROW(ac_one_sided(zero_algebra_2(), Side::left), NotUnitalOnSide);
  EXPECT_THROW(ac_two_sided(left_unital_p2()), NotTwoSidedUnital);
}

TEST(AC, TwoSidedIsMeetOfOneSidedConditions) {
  for (const Algebra& a : {quaternions(), matrix_algebra_2(), upper_triangular_2(), truncated_poly(4, true)}) {
    EXPECT_EQ(ac_two_sided(a), meet(ac_left_conditions(a), ac_right_conditions(a)));
  }
}

TEST(AC, ComplexNumbersAreAllHomAssociativeMultipliers) {
  const Algebra c = cayley_dickson_chain(1).base();
  EXPECT_TRUE(ac_two_sided(c).is_full());
  const BijectionReport b = bijection_report(c, Side::left);
  EXPECT_TRUE(b.checks.all_pass());
  EXPECT_EQ(b.twist_dim, 2u);
}

TEST(Multiplicativity, IdentityOnQuaternions) {
  const Algebra h = quaternions();
  const HomAlgebra id(h, Matrix::identity(Q, 4));
  const MultiplicativityReport r = multiplicativity_report(id, h.basis(0), Side::two_sided);
  EXPECT_TRUE(r.multiplicative && r.consistent());
  const HomAlgebra half(h, Scalar::parse(Q, "1/2") * Matrix::identity(Q, 4));
  const MultiplicativityReport s = multiplicativity_report(half, h.basis(0), Side::two_sided);
  EXPECT_FALSE(s.multiplicative);
  EXPECT_TRUE(s.consistent());
}

TEST(Multiplicativity, RequiresHomAssociativity) {
  const Algebra h = quaternions();
  LinearMap swap(Q, 4, 4);
  swap(0, 1) = Scalar::one(Q);
  swap(1, 0) = Scalar::one(Q);
  swap(2, 2) = Scalar::one(Q);
  swap(3, 3) = Scalar::one(Q);
  EXPECT_THROW(multiplicativity_report(HomAlgebra(h, swap), h.basis(0), Side::two_sided), PreconditionViolated);
}

TEST(RelationTables, HoldOnTwistsOfUnitalAlgebras) {
  const Algebra p = left_unital_p2();
  for (const auto& m : twist_space(p).maps) {
    EXPECT_TRUE(relation_tables_check(HomAlgebra(p, m), p.basis(0), Side::left).all_pass());
  }
  const Algebra t = truncated_poly(3, true);
  for (const auto& m : twist_space(t).maps) {
    EXPECT_TRUE(relation_tables_check(HomAlgebra(t, m), t.basis(0), Side::two_sided).all_pass());
  }
}

TEST(Domain, OctonionsAndMatrices) {
  EXPECT_TRUE(domain_status(cayley_dickson_chain(3).base()).domain);
  EXPECT_FALSE(domain_status(matrix_algebra_2()).domain);
}

TEST(Audit, OppositeSwapsSides) {
  for (const Algebra& a : {left_unital_p2(), upper_triangular_2(), truncated_poly(3), cayley_dickson_chain(2).base()}) {
    const HomStructureReport r = structure_theorem_audit(a);
    const HomStructureReport o = structure_theorem_audit(opposite(a));
    EXPECT_EQ(to_json(r.left), to_json(o.right));
    EXPECT_EQ(to_json(r.right), to_json(o.left));
    EXPECT_EQ(r.failures(), 0u);
  }
}

TEST(Audit, OctonionsHaveNoTwists) {
  const HomStructureReport r = structure_theorem_audit(cayley_dickson_chain(3).base());
  EXPECT_FALSE(r.associative);
  EXPECT_TRUE(r.two_sided_unital);
  EXPECT_TRUE(r.twist_basis.empty());
  EXPECT_EQ(r.failures(), 0u);
}
