#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "homalg/algebra.hpp"
#include "homalg/constructions.hpp"

namespace homalg {

inline constexpr int kFormatVersion = 1;

/// Contents of one algebra file.
struct AlgebraDocument {
  Algebra algebra;
  std::optional<LinearMap> twist;
  std::optional<LinearMap> conj;
  nlohmann::json meta = nlohmann::json::object();

  friend bool operator==(const AlgebraDocument& a, const AlgebraDocument& b) {
    return a.algebra == b.algebra && a.twist == b.twist && a.conj == b.conj && a.meta == b.meta;
  }
};

AlgebraDocument document_of(const Algebra& a);
AlgebraDocument document_of(const HomAlgebra& h);
AlgebraDocument document_of(const InvolutiveAlgebra& s);

/// Throws ParseError for malformed JSON or schema violations and
/// InvariantViolation for duplicate entries, bad primes or a non-involutive conj.
AlgebraDocument parse_document(const std::string& text);
AlgebraDocument read_document(const std::filesystem::path& path);

/// Canonical text: sorted keys, nonzero structure entries in (i,j,k) order,
/// canonical scalars. Ends with a newline.
std::string emit_document(const AlgebraDocument& doc);
void write_document(const AlgebraDocument& doc, const std::filesystem::path& path);

nlohmann::json generator_meta(const GeneratorConfig& cfg);
/// Reads meta.generator back; nullopt when absent.
std::optional<GeneratorConfig> generator_of(const nlohmann::json& meta, Field f);

nlohmann::json to_json(const Scalar& s);
nlohmann::json to_json(const Element& v);
/// List of rows.
nlohmann::json to_json(const Matrix& m);

}  // namespace homalg
