#include <gtest/gtest.h>

#include "homalg/error.hpp"
#include "homalg/scalar.hpp"

using namespace homalg;

TEST(Scalar, RationalsAreCanonical) {
  const Field q = Field::rational();
  const Scalar a = Scalar::parse(q, "-6/4");
  EXPECT_EQ(a.to_string(), "-3/2");
  EXPECT_EQ(Scalar::parse(q, "4/2").to_string(), "2");
  EXPECT_EQ((a + Scalar::from_int(q, 2)).to_string(), "1/2");
  EXPECT_EQ((a * a).to_string(), "9/4");
  EXPECT_EQ((Scalar::one(q) / a).to_string(), "-2/3");
}

TEST(Scalar, PrimeFieldArithmetic) {
  const Field f7 = Field::prime(7);
  EXPECT_EQ(Scalar::from_int(f7, -1).residue(), 6u);
  EXPECT_EQ(Scalar::parse(f7, "10").residue(), 3u);
  for (long long v = 1; v < 7; ++v) {
    const Scalar x = Scalar::from_int(f7, v);
    EXPECT_TRUE((x * x.inverse()).is_one()) << v;
  }
  EXPECT_TRUE((Scalar::from_int(f7, 3) + Scalar::from_int(f7, 4)).is_zero());
}

TEST(Scalar, LargePrimeDoesNotOverflow) {
  const std::uint64_t p = (std::uint64_t{1} << 61) - 1;
  const Field f = Field::prime(p);
  const Scalar x = Scalar::from_int(f, -2);
  EXPECT_EQ((x * x).residue(), 4u);
  EXPECT_TRUE((x * x.inverse()).is_one());
}

TEST(Scalar, ErrorsAreTyped) {
  const Field q = Field::rational();
  EXPECT_THROW(Scalar::zero(q).inverse(), DivisionByZero);
  EXPECT_THROW(Scalar::one(q) + Scalar::one(Field::prime(3)), FieldMismatch);
  EXPECT_THROW(Field::prime(9), InvariantViolation);
  EXPECT_THROW(Field::parse("Fp:x"), InvariantViolation);
}

TEST(Scalar, FieldTextRoundTrips) {
  for (const Field f : {Field::rational(), Field::prime(2), Field::prime(101)}) {
    EXPECT_EQ(Field::parse(f.to_string()), f);
  }
  EXPECT_EQ(Field::prime(5).to_string(), "Fp:5");
}

TEST(Scalar, SubMulMatchesOperators) {
  const Field q = Field::rational();
  Scalar acc = Scalar::parse(q, "1/3");
  const Scalar a = Scalar::parse(q, "2/5"), b = Scalar::parse(q, "-7/2");
  const Scalar expect = acc - a * b;
  acc.sub_mul(a, b);
  EXPECT_EQ(acc, expect);
  acc.add_mul(a, b);
  EXPECT_EQ(acc, Scalar::parse(q, "1/3"));
}
