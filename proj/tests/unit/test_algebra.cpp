#include <gtest/gtest.h>

#include <random>

#include "homalg/catalog.hpp"
#include "homalg/constructions.hpp"
#include "homalg/error.hpp"

using namespace homalg;

namespace {

const Field Q = Field::rational();

// 2x2 matrix product on coordinates (E11, E12, E21, E22), written out by hand.
Element mat_mul(const Element& x, const Element& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}

}  // namespace

TEST(Algebra, MatrixAlgebraMatchesHandProduct) {
  const Algebra m = matrix_algebra_2();
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const Element x = random_element(Q, 4, rng), y = random_element(Q, 4, rng);
    EXPECT_EQ(multiply(m, x, y), mat_mul(x, y));
  }
  EXPECT_TRUE(is_associative(m).holds);
  EXPECT_FALSE(is_commutative(m));
}

TEST(Algebra, OperatorsHaveProductColumns) {
  const Algebra m = matrix_algebra_2();
  const Element x = {Scalar::from_int(Q, 1), Scalar::from_int(Q, 2), Scalar::from_int(Q, 0), Scalar::from_int(Q, -1)};
  const LinearMap l = left_op(m, x), r = right_op(m, x);
  for (std::size_t j = 0; j < 4; ++j) {
    EXPECT_EQ(l.column(j), multiply(m, x, m.basis(j)));
    EXPECT_EQ(r.column(j), multiply(m, m.basis(j), x));
  }
}

TEST(Algebra, AssociatorWitnessIsLexicographicallyFirst) {
  const Algebra o = cayley_dickson_chain(3).base();
  const TripleCheck c = is_associative(o);
  ASSERT_FALSE(c.holds);
  const Triple w = *c.witness;
  EXPECT_FALSE(is_zero(associator(o, o.basis(w[0]), o.basis(w[1]), o.basis(w[2]))));
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      for (std::size_t k = 0; k < 8; ++k) {
        if (Triple{i, j, k} >= w) continue;
        EXPECT_TRUE(is_zero(associator(o, o.basis(i), o.basis(j), o.basis(k))));
      }
}

TEST(Algebra, CrossProductIsAnticommutative) {
  const Algebra c = cross_product_algebra();
  EXPECT_TRUE(is_anticommutative(c));
  EXPECT_EQ(multiply(c, c.basis(0), c.basis(1)), c.basis(2));
}

TEST(Algebra, DimensionLimit) {
  EXPECT_THROW(Algebra(StructureTensor(Q, max_dimension() + 1)), DimensionLimitExceeded);
  EXPECT_NO_THROW(Algebra::zero(Q, 3));
}

TEST(Algebra, HomAlgebraRejectsWrongShape) {
  EXPECT_THROW(HomAlgebra(Algebra::zero(Q, 2), Matrix::identity(Q, 3)), DimensionMismatch);
}

TEST(Algebra, IdentityTwistOnAssociativeAlgebra) {
  const Algebra m = matrix_algebra_2();
  const HomAlgebra h(m, Matrix::identity(Q, 4));
  EXPECT_TRUE(is_hom_associative(h).holds);
  EXPECT_TRUE(is_multiplicative(h));
  EXPECT_TRUE(is_idempotent_map(Matrix::identity(Q, 4)));
  EXPECT_TRUE(is_idempotent_elem(m, m.basis(0)));
  EXPECT_FALSE(is_idempotent_elem(m, m.basis(1)));
}

TEST(Algebra, HomAssociatorDefinition) {
  const Algebra o = cayley_dickson_chain(3).base();
  std::mt19937_64 rng(5);
  const LinearMap al = random_matrix(Q, 8, 8, rng);
  const HomAlgebra h(o, al);
  const Element x = o.basis(1), y = o.basis(2), z = o.basis(4);
  const Element expect =
      sub(multiply(o, multiply(o, x, y), al.apply(z)), multiply(o, al.apply(x), multiply(o, y, z)));
  EXPECT_EQ(hom_associator(h, x, y, z), expect);
}
