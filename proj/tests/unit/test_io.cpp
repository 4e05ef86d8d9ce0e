#include <gtest/gtest.h>

#include <filesystem>

#include "homalg/catalog.hpp"
#include "homalg/constructions.hpp"
#include "homalg/error.hpp"
#include "homalg/io.hpp"

using namespace homalg;

TEST(Io, RoundTripsAlgebrasTwistsAndConjugations) {
  const InvolutiveAlgebra o = cayley_dickson_chain(3);
  const Algebra p = truncated_poly(4, true);
  for (const AlgebraDocument& doc :
       {document_of(o), document_of(quaternions()), document_of(yau_twist(p, left_op(p, p.basis(1)))),
        document_of(left_unital_p2(Field::prime(2)))}) {
    const std::string text = emit_document(doc);
    const AlgebraDocument back = parse_document(text);
    EXPECT_EQ(back, doc);
    EXPECT_EQ(emit_document(back), text);
  }
}

TEST(Io, MinimalFile) {
  const AlgebraDocument d = parse_document(
      R"({"format_version": 1, "field": "Q", "dim": 2, "structure": [[1, 1, 0, "1/2"]]})");
  EXPECT_EQ(d.algebra.dim(), 2u);
  EXPECT_EQ(d.algebra.coeff(1, 1, 0), Scalar::parse(Field::rational(), "1/2"));
  EXPECT_FALSE(d.twist.has_value());
}

TEST(Io, QuaternionProductSurvives) {
  const Algebra h = parse_document(emit_document(document_of(quaternions()))).algebra;
  EXPECT_EQ(basis_product(h, 1, 2), h.basis(3));
  EXPECT_EQ(h.labels()[3], "k");
}

TEST(Io, DuplicateEntriesAreRejected) {
  EXPECT_THROW(parse_document(R"({"format_version": 1, "field": "Q", "dim": 2,
                                   "structure": [[0, 0, 0, "1"], [0, 0, 0, "2"]]})"),
               InvariantViolation);
}

TEST(Io, SyntaxErrorsCarryPosition) {
  try {
    parse_document("{\n  \"dim\": 2,\n  oops\n}");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_GT(e.column(), 0u);
  }
}

TEST(Io, SchemaErrors) {
  EXPECT_THROW(parse_document(R"({"format_version": 1, "field": "Q", "dim": 2, "structure": [[0, 0, 5, "1"]]})"),
               ParseError);
  EXPECT_THROW(parse_document(R"({"format_version": 2, "field": "Q", "dim": 1, "structure": []})"), ParseError);
  EXPECT_THROW(parse_document(R"({"format_version": 1, "field": "Q", "dim": 1, "structure": [], "extra": 1})"),
               ParseError);
  EXPECT_THROW(
      parse_document(R"({"format_version": 1, "field": {"Fp": 3}, "dim": 1, "structure": [[0, 0, 0, "1/2"]]})"),
      ParseError);
  EXPECT_THROW(parse_document(R"({"format_version": 1, "field": {"Fp": 4}, "dim": 1, "structure": []})"),
               InvariantViolation);
}

TEST(Io, NonInvolutiveConjugationIsRejected) {
  EXPECT_THROW(parse_document(R"({"format_version": 1, "field": "Q", "dim": 1, "structure": [],
                                   "conj": [["2"]]})"),
               InvariantViolation);
}

TEST(Io, GeneratorMetadataRoundTrips) {
  GeneratorConfig cfg;
  cfg.seed = 11;
  cfg.dim = 3;
  cfg.field = Field::prime(3);
  cfg.pool = default_pool(cfg.field);
  cfg.force_left_unital = true;
  const auto back = generator_of(nlohmann::json{{"generator", generator_meta(cfg)}}, cfg.field);
  ASSERT_TRUE(back.has_value());
  EXPECT_EQ(*back, cfg);
  EXPECT_EQ(random_algebra(*back), random_algebra(cfg));
}

TEST(Io, FileWriteAndRead) {
  const auto path = std::filesystem::temp_directory_path() / "homalg_io_test.json";
  const AlgebraDocument doc = document_of(cayley_dickson_chain(2));
  write_document(doc, path);
  EXPECT_EQ(read_document(path), doc);
  std::filesystem::remove(path);
  EXPECT_THROW(read_document(path), Error);
}
