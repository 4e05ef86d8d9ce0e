#include <gtest/gtest.h>

#include "homalg/catalog.hpp"
#include "homalg/constructions.hpp"
#include "homalg/error.hpp"
#include "homalg/homstruct.hpp"
#include "homalg/leibniz.hpp"

using namespace homalg;

namespace {

const Field Q = Field::rational();

// Leibniz identities evaluated on raw structure constants mod p, dim 2.
struct Bracket2 {
  std::uint64_t p;
  int c[2][2][2];
  std::array<int, 2> br(std::array<int, 2> x, std::array<int, 2> y) const {
    std::array<int, 2> r{0, 0};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) r[k] = static_cast<int>((r[k] + x[i] * y[j] * c[i][j][k]) % p);
    return r;
  }
  bool left_leibniz() const {
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int d = 0; d < 2; ++d) {
          const std::array<int, 2> x{a == 0, a == 1}, y{b == 0, b == 1}, z{d == 0, d == 1};
          const auto lhs = br(x, br(y, z));
          const auto r1 = br(br(x, y), z), r2 = br(y, br(x, z));
          for (int k = 0; k < 2; ++k)
            if ((lhs[k] - r1[k] - r2[k]) % static_cast<int>(p) != 0) return false;
        }
    return true;
  }
  bool right_leibniz() const {
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int d = 0; d < 2; ++d) {
          const std::array<int, 2> x{a == 0, a == 1}, y{b == 0, b == 1}, z{d == 0, d == 1};
          const auto lhs = br(br(x, y), z);
          const auto r1 = br(br(x, z), y), r2 = br(x, br(y, z));
          for (int k = 0; k < 2; ++k)
            if ((lhs[k] - r1[k] - r2[k]) % static_cast<int>(p) != 0) return false;
        }
    return true;
  }
};

std::size_t count_leibniz_dim2(std::uint64_t p) {
  std::size_t count = 0;
  std::uint64_t total = 1;
  for (int i = 0; i < 8; ++i) total *= p;
  for (std::uint64_t code = 0; code < total; ++code) {
    Bracket2 b{p, {}};
    std::uint64_t c = code;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k, c /= p) b.c[i][j][k] = static_cast<int>(c % p);
    count += b.left_leibniz() || b.right_leibniz();
  }
  return count;
}

}  // namespace

TEST(Leibniz, Leib2IsLeibnizOnBothSides) {
  const Algebra l = leib2();
  EXPECT_TRUE(leibniz_check(l, Side::right).holds);
  EXPECT_TRUE(leibniz_check(l, Side::left).holds);
  EXPECT_FALSE(is_anticommutative(l));
}

TEST(Leibniz, OneSidedExample) {
  const Algebra l = left_leibniz_yx();
  EXPECT_TRUE(leibniz_check(l, Side::left).holds);
  const TripleCheck r = leibniz_check(l, Side::right);
  EXPECT_FALSE(r.holds);
  EXPECT_TRUE(r.witness.has_value());
  EXPECT_TRUE(leibniz_check(opposite(l), Side::right).holds);
}

TEST(Leibniz, PerturbationBreaksIdentity) {
  StructureTensor t = leib2().tensor();
  t.at(0, 1, 1) = Scalar::one(Q);  // [x,y] = y
  t.at(1, 0, 0) = Scalar::one(Q);  // [y,x] = x
  EXPECT_FALSE(is_leibniz(Algebra(t)));
  EXPECT_THROW(hu_n_leibniz(Algebra(t)), NotLeibniz);
}

TEST(Leibniz, HuNOfLeib2IsEverything) {
  const Algebra l = leib2();
  EXPECT_TRUE(hu_n_leibniz(l).is_full());
  EXPECT_TRUE(is_hom_associative(HomAlgebra(l, left_op(l, l.basis(1)))).holds);
  EXPECT_TRUE(is_three_nilpotent(l, l.basis(1)));
}

TEST(Leibniz, LieAlgebrasHaveSmallHuN) {
  EXPECT_TRUE(hu_n_leibniz(sl2()).is_zero());
  const Algebra h = heisenberg();
  EXPECT_EQ(hu_n_leibniz(h), center(h));
}

TEST(Leibniz, CharacteristicTwoCounterexample) {
  const Algebra l = leibniz_char2_example();
  EXPECT_TRUE(leibniz_check(l, Side::left).holds);
  EXPECT_TRUE(leibniz_check(l, Side::right).holds);
  EXPECT_TRUE(is_commutative(l));
  const Subspace c = meet(center(l), annihilator(l, span_of(l, SpanKind::products), Side::left));
  ASSERT_TRUE(c.contains(l.basis(0)));
  const Element y = l.basis(1);
  EXPECT_FALSE(is_zero(multiply(l, y, multiply(l, l.basis(0), y))));
  EXPECT_THROW(hu_n_leibniz(l), InternalCheckFailure);
}

TEST(Leibniz, ExhaustiveDim2CountsMatchDirectEnumeration) {
  EXPECT_EQ(leibniz_dim2_exhaustive(Field::prime(2)).size(), count_leibniz_dim2(2));
  EXPECT_EQ(leibniz_dim2_exhaustive(Field::prime(3)).size(), count_leibniz_dim2(3));
}

TEST(Leibniz, AssociatorSpansAreNestedProducts) {
  for (Field f : {Field::prime(3), Field::prime(2)}) {
    for (const Algebra& a : leibniz_dim2_exhaustive(f)) {
      const Subspace assoc = span_of(a, SpanKind::associators);
      if (leibniz_check(a, Side::left).holds) EXPECT_EQ(assoc, nested_product_span(a, Side::left));
      if (leibniz_check(a, Side::right).holds) EXPECT_EQ(assoc, nested_product_span(a, Side::right));
    }
  }
}

TEST(Leibniz, OddCharacteristicHuNIsThreeNilpotent) {
  for (const Algebra& a : leibniz_dim2_exhaustive(Field::prime(3))) {
    const Subspace s = hu_n_leibniz(a);
    for (const auto& v : s.vectors()) EXPECT_TRUE(is_three_nilpotent(a, v));
  }
}

TEST(Leibniz, UnitalityCollapses) {
  for (Field f : {Field::prime(3), Field::prime(2)}) {
    for (const Algebra& a : leibniz_dim2_exhaustive(f)) EXPECT_TRUE(unitality_collapse_check(a).all_pass());
  }
  EXPECT_TRUE(unitality_collapse_check(sl2()).all_pass());
}

TEST(HomLie, LieAlgebraWithIdentityTwist) {
  const HomLieCheck c = hom_lie_check(HomAlgebra(sl2(), Matrix::identity(Q, 3)));
  EXPECT_TRUE(c.holds);
  EXPECT_TRUE(hom_lie_check(HomAlgebra(cross_product_algebra(), Matrix::identity(Q, 3))).holds);
}

TEST(HomLie, Leib2IsNotAlternating) {
  const HomLieCheck c = hom_lie_check(HomAlgebra(leib2(), Matrix::identity(Q, 2)));
  EXPECT_FALSE(c.holds);
  EXPECT_EQ(c.failed, "alternating");
  EXPECT_EQ(c.witness, (std::vector<std::size_t>{1, 1}));
}

TEST(HomLie, YauTwistOfLeibnizAlgebras) {
  std::size_t produced = 0;
  for (Field f : {Field::prime(3), Field::prime(2)}) {
    for (const Algebra& a : leibniz_dim2_exhaustive(f)) {
      for (std::size_t m = 0; m < 2; ++m)
        for (std::size_t w = 0; w < 2; ++w)
          for (Side side : {Side::left, Side::right}) {
            try {
              const HomAlgebra h = leibniz_yau_to_homlie(a, a.basis(m), a.basis(w), side);
              EXPECT_TRUE(hom_lie_check(h).holds);
              ++produced;
            } catch (const PreconditionViolated&) {
            }
          }
    }
  }
  EXPECT_GT(produced, 0u);
}
