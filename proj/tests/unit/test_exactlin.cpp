#include <gtest/gtest.h>

#include <random>

#include "homalg/constructions.hpp"
#include "homalg/error.hpp"
#include "homalg/exactlin.hpp"

using namespace homalg;

namespace {

Element q_vec(std::initializer_list<long long> xs) {
  Element v;
  for (auto x : xs) v.push_back(Scalar::from_int(Field::rational(), x));
  return v;
}

}  // namespace

TEST(Rref, KnownMatrix) {
  const Field q = Field::rational();
  const Matrix m = Matrix::from_rows(q, 3, {q_vec({1, 2, 3}), q_vec({2, 4, 7}), q_vec({1, 2, 4})});
  const Rref r = rref(m);
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(r.matrix.row(0), q_vec({1, 2, 0}));
  EXPECT_EQ(r.matrix.row(1), q_vec({0, 0, 1}));
  EXPECT_EQ(r.matrix.row(2), q_vec({0, 0, 0}));
  EXPECT_EQ(rank(m), 2u);
}

TEST(Kernel, VectorsAreAnnihilated) {
  const Field q = Field::rational();
  const Matrix m = Matrix::from_rows(q, 4, {q_vec({1, 1, 0, 2}), q_vec({0, 1, 1, -1})});
  const Subspace k = kernel(m);
  ASSERT_EQ(k.dim(), 2u);
  for (const auto& v : k.vectors()) EXPECT_TRUE(is_zero(m.apply(v)));
}

TEST(Subspace, MeetAndJoinDimensions) {
  const Field q = Field::rational();
  const Subspace a = Subspace::span(q, 3, {q_vec({1, 0, 0}), q_vec({0, 1, 0})});
  const Subspace b = Subspace::span(q, 3, {q_vec({0, 1, 0}), q_vec({0, 0, 1})});
  EXPECT_EQ(meet(a, b), Subspace::span(q, 3, {q_vec({0, 1, 0})}));
  EXPECT_TRUE(join(a, b).is_full());
  EXPECT_FALSE(is_direct_sum(a, b, Subspace::full(q, 3)));
  EXPECT_TRUE(is_direct_sum(a, Subspace::span(q, 3, {q_vec({0, 0, 1})}), Subspace::full(q, 3)));
}

TEST(Subspace, CanonicalBasisIgnoresSpanningOrder) {
  const Field q = Field::rational();
  const Subspace a = Subspace::span(q, 3, {q_vec({1, 2, 3}), q_vec({0, 1, 1})});
  const Subspace b = Subspace::span(q, 3, {q_vec({1, 3, 4}), q_vec({2, 4, 6}), q_vec({1, 1, 2})});
  EXPECT_EQ(a, b);
}

TEST(Subspace, CoordinatesRecombine) {
  const Field q = Field::rational();
  const Subspace s = Subspace::span(q, 4, {q_vec({1, 2, 0, 1}), q_vec({0, 1, 1, 0})});
  const Element v = q_vec({2, 7, 3, 2});
  ASSERT_TRUE(s.contains(v));
  EXPECT_EQ(s.combine(s.coordinates(v)), v);
  EXPECT_FALSE(s.contains(q_vec({0, 0, 0, 1})));
}

TEST(AffineSolve, ParticularHasZeroFreeCoordinates) {
  const Field q = Field::rational();
  const Matrix m = Matrix::from_rows(q, 3, {q_vec({1, 1, 1})});
  const AffineSet s = solve_affine(m, q_vec({5}));
  ASSERT_FALSE(s.empty);
  EXPECT_EQ(s.particular, q_vec({5, 0, 0}));
  EXPECT_EQ(s.direction.dim(), 2u);
  EXPECT_TRUE(solve_affine(Matrix::from_rows(q, 1, {q_vec({0})}), q_vec({1})).empty);
}

TEST(Eigenspace, DiagonalMatrix) {
  const Field q = Field::rational();
  Matrix d(q, 3, 3);
  d(0, 0) = Scalar::from_int(q, 2);
  d(1, 1) = Scalar::from_int(q, 2);
  d(2, 2) = Scalar::from_int(q, 5);
  EXPECT_EQ(eigenspace(d, Scalar::from_int(q, 2)).dim(), 2u);
  EXPECT_EQ(eigenspace(d, Scalar::from_int(q, 3)).dim(), 0u);
}

TEST(RowReducer, SparseAndDenseRowsAgree) {
  const Field f = Field::prime(5);
  std::mt19937_64 rng(9);
  RowReducer dense(f, 6), sparse(f, 6);
  for (int r = 0; r < 4; ++r) {
    const Element row = random_element(f, 6, rng);
    dense.add(row);
    SparseRow sr;
    for (std::uint32_t c = 0; c < 6; ++c) {
      if (!row[c].is_zero()) sr.push_back({c, row[c]});
    }
    sparse.add(sr);
  }
  EXPECT_EQ(dense.row_space(), sparse.row_space());
  EXPECT_EQ(dense.kernel(), kernel(dense.row_space().basis()));
}

TEST(RowReducer, MergeMatchesSingleReducer) {
  const Field q = Field::rational();
  std::mt19937_64 rng(4);
  std::vector<Element> rows;
  for (int i = 0; i < 5; ++i) rows.push_back(random_element(q, 7, rng));
  RowReducer whole(q, 7), first(q, 7), second(q, 7);
  for (int i = 0; i < 5; ++i) {
    whole.add(rows[i]);
    (i < 2 ? first : second).add(rows[i]);
  }
  first.merge(second);
  EXPECT_EQ(first.row_space(), whole.row_space());
}

TEST(Matrix, ShapeErrors) {
  const Field q = Field::rational();
  EXPECT_THROW(Matrix::from_rows(q, 2, {q_vec({1, 2, 3})}), DimensionMismatch);
  EXPECT_THROW(Matrix(q, 2, 3) * Matrix(q, 2, 3), DimensionMismatch);
}
