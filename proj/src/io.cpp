#include "homalg/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include "homalg/error.hpp"

namespace homalg {

using nlohmann::json;

namespace {

/// 1-based line and column of a byte offset.
std::pair<std::size_t, std::size_t> position_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void schema(const std::string& what) { throw ParseError(what); }

std::size_t index_of(const json& v, std::size_t n, const std::string& where) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    schema(where + ": index must be a non-negative integer");
  }
  const auto i = v.get<std::uint64_t>();
  if (i >= n) schema(where + ": index " + std::to_string(i) + " out of range for dimension " + std::to_string(n));
  return static_cast<std::size_t>(i);
}

Scalar scalar_of(const json& v, Field f, const std::string& where) {
  std::string text;
  if (v.is_string()) {
    text = v.get<std::string>();
  } else if (v.is_number_integer()) {
    text = v.dump();
  } else {
    schema(where + ": scalar must be a string or an integer");
  }
  if (!f.is_rational() && text.find('/') != std::string::npos) {
    schema(where + ": fractions are not allowed over " + f.to_string());
  }
  try {
    return Scalar::parse(f, text);
  } catch (const Error& e) {
    schema(where + ": " + e.what());
  }
}

LinearMap grid_of(const json& v, Field f, std::size_t n, const std::string& key) {
  if (!v.is_array() || v.size() != n) schema(key + " must be a " + std::to_string(n) + "x" + std::to_string(n) + " grid");
  LinearMap m(f, n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!v[r].is_array() || v[r].size() != n) schema(key + " row " + std::to_string(r) + " has the wrong length");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = scalar_of(v[r][c], f, key + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
  }
  return m;
}

Field field_of_json(const json& v) {
  if (v.is_string() && v.get<std::string>() == "Q") return Field::rational();
  if (v.is_object() && v.size() == 1 && v.contains("Fp")) {
    const json& p = v["Fp"];
    if (!p.is_number_unsigned() && !(p.is_number_integer() && p.get<long long>() > 0)) {
      schema("field.Fp must be a positive integer");
    }
    return Field::prime(p.get<std::uint64_t>());  // InvariantViolation unless prime
  }
  schema("field must be \"Q\" or {\"Fp\": p}");
}

json field_json(Field f) {
  if (f.is_rational()) return "Q";
  return json{{"Fp", f.characteristic()}};
}

}  // namespace

json to_json(const Scalar& s) { return s.to_string(); }

json to_json(const Element& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

json to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

AlgebraDocument document_of(const Algebra& a) { return {a, std::nullopt, std::nullopt}; }
AlgebraDocument document_of(const HomAlgebra& h) { return {h.base(), h.twist(), std::nullopt}; }
AlgebraDocument document_of(const InvolutiveAlgebra& s) { return {s.base(), std::nullopt, s.conj()}; }

AlgebraDocument parse_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = position_of(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(e.what(), line, col);
  }
  if (!doc.is_object()) schema("top level must be an object");
  for (const char* key : {"format_version", "field", "dim", "structure"}) {
    if (!doc.contains(key)) schema(std::string("missing key '") + key + "'");
  }
  for (const auto& [key, _] : doc.items()) {
    static const std::set<std::string> known = {"format_version", "field", "dim", "basis", "structure", "twist", "conj", "meta"};
    if (!known.count(key)) schema("unknown key '" + key + "'");
  }
  if (!doc["format_version"].is_number_integer() || doc["format_version"].get<long long>() != kFormatVersion) {
    schema("unsupported format_version");
  }
  const Field f = field_of_json(doc["field"]);
  if (!doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 1) schema("dim must be a positive integer");
  const auto n = static_cast<std::size_t>(doc["dim"].get<long long>());
  if (n > max_dimension()) {
    throw DimensionLimitExceeded("dimension " + std::to_string(n) + " exceeds the limit " + std::to_string(max_dimension()));
  }

  std::vector<std::string> labels;
  if (doc.contains("basis")) {
    const json& b = doc["basis"];
    if (!b.is_array() || b.size() != n) schema("basis must list " + std::to_string(n) + " labels");
    for (const auto& l : b) {
      if (!l.is_string()) schema("basis labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }

  const json& st = doc["structure"];
  if (!st.is_array()) schema("structure must be a list");
  StructureTensor t(f, n);
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  for (std::size_t e = 0; e < st.size(); ++e) {
    const std::string where = "structure[" + std::to_string(e) + "]";
    const json& entry = st[e];
    if (!entry.is_array() || entry.size() != 4) schema(where + " must be [i, j, k, scalar]");
    const std::size_t i = index_of(entry[0], n, where), j = index_of(entry[1], n, where), k = index_of(entry[2], n, where);
    if (!seen.insert({i, j, k}).second) {
      throw InvariantViolation("duplicate structure entry (" + std::to_string(i) + "," + std::to_string(j) + "," +
                               std::to_string(k) + ")");
    }
    t.at(i, j, k) = scalar_of(entry[3], f, where);
  }

  AlgebraDocument out{Algebra(std::move(t), std::move(labels)), std::nullopt, std::nullopt};
  if (doc.contains("twist")) out.twist = grid_of(doc["twist"], f, n, "twist");
  if (doc.contains("conj")) {
    LinearMap c = grid_of(doc["conj"], f, n, "conj");
    out.conj = InvolutiveAlgebra(out.algebra, c).conj();
  }
  if (doc.contains("meta")) out.meta = doc["meta"];
  return out;
}

AlgebraDocument read_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

std::string emit_document(const AlgebraDocument& doc) {
  const Algebra& a = doc.algebra;
  const std::size_t n = a.dim();
  json out;
  out["format_version"] = kFormatVersion;
  out["field"] = field_json(a.field());
  out["dim"] = n;
  if (a.has_labels()) out["basis"] = a.labels();
  json st = json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : a.terms(i, j)) st.push_back(json::array({i, j, k, c.to_string()}));
  out["structure"] = std::move(st);
  if (doc.twist) out["twist"] = to_json(*doc.twist);
  if (doc.conj) out["conj"] = to_json(*doc.conj);
  if (!doc.meta.is_null() && !doc.meta.empty()) out["meta"] = doc.meta;
  return out.dump(2) + "\n";
}

void write_document(const AlgebraDocument& doc, const std::filesystem::path& path) {
  std::ofstream o(path, std::ios::binary);
  if (!o) throw Error("cannot write " + path.string());
  o << emit_document(doc);
}

json generator_meta(const GeneratorConfig& cfg) {
  json pool = json::array();
  for (const auto& s : cfg.pool) pool.push_back(s.to_string());
  return {{"prng", kPrngName},
          {"version", kGeneratorVersion},
          {"seed", cfg.seed},
          {"dim", cfg.dim},
          {"field", cfg.field.to_string()},
          {"pool", pool},
          {"left_unital", cfg.force_left_unital},
          {"commutative", cfg.commutative},
          {"anticommutative", cfg.anticommutative}};
}

std::optional<GeneratorConfig> generator_of(const json& meta, Field f) {
  if (!meta.is_object() || !meta.contains("generator")) return std::nullopt;
  const json& g = meta["generator"];
  try {
    if (g.at("prng").get<std::string>() != kPrngName || g.at("version").get<int>() != kGeneratorVersion) {
      schema("generator metadata from a different generator");
    }
    GeneratorConfig cfg;
    cfg.seed = g.at("seed").get<std::uint64_t>();
    cfg.dim = g.at("dim").get<std::size_t>();
    cfg.field = Field::parse(g.at("field").get<std::string>());
    if (!(cfg.field == f)) schema("generator field differs from the file field");
    for (const auto& s : g.at("pool")) cfg.pool.push_back(scalar_of(s, f, "meta.generator.pool"));
    cfg.force_left_unital = g.at("left_unital").get<bool>();
    cfg.commutative = g.at("commutative").get<bool>();
    cfg.anticommutative = g.at("anticommutative").get<bool>();
    return cfg;
  } catch (const json::exception& e) {
    schema(std::string("meta.generator: ") + e.what());
  }
}

}  // namespace homalg
