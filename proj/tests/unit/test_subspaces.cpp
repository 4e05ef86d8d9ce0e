#include <gtest/gtest.h>

#include "homalg/catalog.hpp"
#include "homalg/constructions.hpp"
#include "homalg/error.hpp"
#include "homalg/subspaces.hpp"

using namespace homalg;

namespace {
const Field Q = Field::rational();
}

TEST(Subspaces, CenterOfMatricesIsScalars) {
  const Algebra m = matrix_algebra_2();
  const Subspace z = center(m);
  ASSERT_EQ(z.dim(), 1u);
  EXPECT_TRUE(z.contains(add(m.basis(0), m.basis(3))));
}

TEST(Subspaces, NucleusOfAssociativeAlgebraIsEverything) {
  EXPECT_TRUE(nucleus(matrix_algebra_2()).is_full());
  EXPECT_TRUE(nucleus(quaternions()).is_full());
}

TEST(Subspaces, OctonionNucleusIsTheReals) {
  const Algebra o = cayley_dickson_chain(3).base();
  const Subspace n = nucleus(o);
  ASSERT_EQ(n.dim(), 1u);
  EXPECT_TRUE(n.contains(o.basis(0)));
  EXPECT_EQ(center(o), n);
}

TEST(Subspaces, LeftUnitalP2) {
  const Algebra p = left_unital_p2();
  const AffineSet u = find_unities(p, Side::left);
  ASSERT_FALSE(u.empty);
  EXPECT_EQ(u.particular, p.basis(0));
  EXPECT_EQ(u.direction, Subspace::span(Q, 2, {p.basis(1)}));
  EXPECT_TRUE(find_unities(p, Side::right).empty);
  EXPECT_EQ(annihilator(p, Side::left), Subspace::span(Q, 2, {p.basis(1)}));
}

TEST(Subspaces, SpansOfHeisenberg) {
  const Algebra h = heisenberg();
  const Subspace z = Subspace::span(Q, 3, {h.basis(2)});
  EXPECT_EQ(span_of(h, SpanKind::products), z);
  EXPECT_EQ(span_of(h, SpanKind::commutators), z);
  EXPECT_TRUE(span_of(h, SpanKind::associators).is_zero());
  EXPECT_EQ(center(h), z);
}

TEST(Subspaces, IdempotentsOfUpperTriangularOverF3) {
  const Field f3 = Field::prime(3);
  const Algebra t = upper_triangular_2(f3);
  const auto e = idempotents(t, Subspace::full(f3, 3));
  // 0, 1, and E11 + c E12, E22 + c E12 for c in F3.
  EXPECT_EQ(e.size(), 8u);
  for (const auto& x : e) EXPECT_TRUE(is_idempotent_elem(t, x));
}

TEST(Subspaces, IdempotentLimits) {
  EXPECT_THROW(idempotents(matrix_algebra_2(), Subspace::full(Q, 4)), UnsupportedDimensionOverQ);
  const Field f2 = Field::prime(2);
  EXPECT_THROW(idempotents(Algebra::zero(f2, 8), Subspace::full(f2, 8), 16), SearchSpaceTooLarge);
}

TEST(Subspaces, SideParsing) {
  EXPECT_EQ(parse_side("two"), Side::two_sided);
  EXPECT_EQ(parse_side("left"), Side::left);
  EXPECT_THROW(parse_side("up"), PreconditionViolated);
}
