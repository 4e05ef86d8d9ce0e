#include "homalg/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>

#include "homalg/campaign.hpp"
#include "homalg/constructions.hpp"
#include "homalg/error.hpp"
#include "homalg/homstruct.hpp"
#include "homalg/io.hpp"
#include "homalg/leibniz.hpp"
#include "homalg/report.hpp"

namespace homalg::cli {

namespace {

using nlohmann::json;

/// Bad input for the requested command; maps to the usage exit code.
struct UsageError : Error {
  using Error::Error;
};

void write_text(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream o(path, std::ios::binary);
  if (!o) throw UsageError("cannot write " + path);
  o << text;
}

void emit_json(const json& j, std::ostream& out) { out << j.dump(2) << "\n"; }

json witness_json(const TripleCheck& c) {
  json w = nullptr;
  if (c.witness) w = json::array({(*c.witness)[0], (*c.witness)[1], (*c.witness)[2]});
  return {{"holds", c.holds}, {"witness", w}};
}

/// --twist-from-file, --left-mult i or --right-mult i; nullopt when none given.
struct TwistChoice {
  bool from_file = false;
  std::optional<std::size_t> left;
  std::optional<std::size_t> right;

  void add_options(CLI::App* cmd) {
    auto* f = cmd->add_flag("--twist-from-file", from_file, "use the twist stored in the file");
    auto* l = cmd->add_option("--left-mult", left, "twist by left multiplication with basis vector i");
    auto* r = cmd->add_option("--right-mult", right, "twist by right multiplication with basis vector i");
    f->excludes(l)->excludes(r);
    l->excludes(r);
  }

  std::optional<LinearMap> resolve(const AlgebraDocument& doc) const {
    const Algebra& a = doc.algebra;
    auto basis = [&](std::size_t i) {
      if (i >= a.dim()) throw UsageError("basis index " + std::to_string(i) + " out of range");
      return a.basis(i);
    };
    if (from_file) {
      if (!doc.twist) throw UsageError("the file has no twist");
      return doc.twist;
    }
    if (left) return left_op(a, basis(*left));
    if (right) return right_op(a, basis(*right));
    return std::nullopt;
  }
};

json idempotents_json(const Algebra& a, const Subspace& within) {
  try {
    json list = json::array();
    for (const auto& e : idempotents(a, within)) list.push_back(to_json(e));
    return list;
  } catch (const SearchSpaceTooLarge& e) {
    return {{"unavailable", e.what()}};
  } catch (const UnsupportedDimensionOverQ& e) {
    return {{"unavailable", e.what()}};
  }
}

json leibniz_report(const AlgebraDocument& doc, const std::optional<LinearMap>& twist, std::size_t& failures) {
  const Algebra& a = doc.algebra;
  json out;
  out["left"] = witness_json(leibniz_check(a, Side::left));
  out["right"] = witness_json(leibniz_check(a, Side::right));
  out["hom_lie_definition"] = kHomLieDefinition;
  const LinearMap al = twist ? *twist : Matrix::identity(a.field(), a.dim());
  if (twist) {
    out["hom_left"] = witness_json(leibniz_check(a, Side::left, al));
    out["hom_right"] = witness_json(leibniz_check(a, Side::right, al));
    const CheckList crossed = crossed_unitality_check(HomAlgebra(a, al));
    failures += crossed.failures();
    out["crossed_unitality"] = to_json(crossed);
  }
  const HomLieCheck lie = hom_lie_check(HomAlgebra(a, al));
  out["hom_lie"] = {{"holds", lie.holds}, {"failed", lie.failed}, {"witness", lie.witness}};
  if (is_leibniz(a)) {
    try {
      out["hu_n"] = to_json(hu_n_leibniz(a));
    } catch (const InternalCheckFailure& e) {
      ++failures;
      out["hu_n"] = {{"error", e.what()}};
    }
    out["associator_span"] = to_json(span_of(a, SpanKind::associators));
    out["nested_left"] = to_json(nested_product_span(a, Side::left));
    out["nested_right"] = to_json(nested_product_span(a, Side::right));
  } else {
    out["hu_n"] = nullptr;
  }
  const CheckList collapse = unitality_collapse_check(a);
  failures += collapse.failures();
  out["unitality_collapse"] = to_json(collapse);
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hom-associative structures on finite-dimensional algebras", "homalg"};
  app.require_subcommand(1);

  std::string file, output, side_text = "left", field_text = "Q", gamma_text, dir, report_path;
  std::size_t levels = 1, degree = 6, dim = 3, seeds = 0;
  std::uint64_t seed = 0;
  bool with_constants = false, left_unital = false, commutative = false, anticommutative = false, serial = false;
  TwistChoice twist_choice;

  auto* analyze = app.add_subcommand("analyze", "full structure report as JSON");
  analyze->add_option("file", file)->required();

  auto* twist = app.add_subcommand("twist-space", "basis of all hom-associative twists");
  twist->add_option("file", file)->required();
  twist->add_flag("--serial", serial, "use the serial reference elimination");

  auto* ac = app.add_subcommand("ac", "AC subspace of one side or both");
  ac->add_option("file", file)->required();
  ac->add_option("--side", side_text, "left, right or two")->required();

  auto* cd = app.add_subcommand("cayley-dickson", "emit a Cayley-Dickson algebra");
  cd->add_option("--levels", levels)->required();
  cd->add_option("--gamma", gamma_text, "comma-separated gammas, default -1 at every level");
  cd->add_option("--field", field_text);
  cd->add_option("-o,--output", output);

  auto* unit = app.add_subcommand("unitalize", "adjoin a two-sided unity");
  unit->add_option("file", file)->required();
  unit->add_option("-o,--output", output);

  auto* yau = app.add_subcommand("yau", "Yau twist by a map");
  yau->add_option("file", file)->required();
  yau->add_option("-o,--output", output);

  auto* opp = app.add_subcommand("opposite", "opposite algebra");
  opp->add_option("file", file)->required();
  opp->add_option("-o,--output", output);

  auto* poly = app.add_subcommand("poly", "truncated polynomial algebra");
  poly->add_option("--degree", degree)->required();
  poly->add_flag("--with-constants", with_constants);
  poly->add_option("-o,--output", output);

  auto* leib = app.add_subcommand("leibniz", "Leibniz and hom-Lie report");
  leib->add_option("file", file)->required();

  auto* rnd = app.add_subcommand("random", "seeded random algebra");
  rnd->add_option("--dim", dim)->required();
  rnd->add_option("--field", field_text);
  rnd->add_option("--seed", seed)->required();
  auto* lu = rnd->add_flag("--left-unital", left_unital);
  auto* co = rnd->add_flag("--commutative", commutative);
  auto* an = rnd->add_flag("--anticommutative", anticommutative);
  an->excludes(lu)->excludes(co);
  rnd->add_option("-o,--output", output);

  auto* camp = app.add_subcommand("campaign", "invariant suite over a corpus plus generated algebras");
  camp->add_option("--dir", dir, "directory of algebra files");
  camp->add_option("--seeds", seeds, "number of generated algebras");
  camp->add_option("--report", report_path, "write the JSON report here instead of standard output");
  camp->add_flag("--serial", serial, "process instances one at a time");

  // Only `yau` and `leibniz` take a twist.
  TwistChoice yau_choice;
  yau_choice.add_options(yau);
  twist_choice.add_options(leib);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "homalg: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*analyze) {
      const HomStructureReport r = structure_theorem_audit(read_document(file).algebra);
      emit_json(to_json(r), out);
      return r.failures() ? kExitCheckFailure : kExitOk;
    }
    if (*twist) {
      const Algebra a = read_document(file).algebra;
      const TwistSpace t = twist_space(a, serial ? Execution::serial : Execution::openmp);
      json maps = json::array();
      for (const auto& m : t.maps) maps.push_back(to_json(m));
      emit_json({{"dim", t.dim()}, {"basis", maps}}, out);
      return kExitOk;
    }
    if (*ac) {
      const Algebra a = read_document(file).algebra;
      const Side side = parse_side(side_text);
      json j;
      if (side == Side::two_sided) {
        const Subspace s = ac_two_sided(a);
        j = {{"side", to_string(side)}, {"ac", to_json(s)}, {"idempotents", idempotents_json(a, s)}};
      } else {
        const OneSidedAC r = ac_one_sided(a, side);
        j = to_json(r);
        j["idempotents"] = idempotents_json(a, r.ac_unit);
      }
      emit_json(j, out);
      return kExitOk;
    }
    if (*cd) {
      const Field f = Field::parse(field_text);
      std::vector<Scalar> gammas;
      if (!gamma_text.empty()) {
        std::size_t start = 0;
        while (start <= gamma_text.size()) {
          const std::size_t comma = std::min(gamma_text.find(',', start), gamma_text.size());
          gammas.push_back(Scalar::parse(f, gamma_text.substr(start, comma - start)));
          start = comma + 1;
        }
        if (gammas.size() != levels) throw UsageError("expected " + std::to_string(levels) + " gammas");
      }
      write_text(emit_document(document_of(cayley_dickson_chain(levels, gammas, f))), output, out);
      return kExitOk;
    }
    if (*unit) {
      write_text(emit_document(document_of(unitalize(read_document(file).algebra).algebra)), output, out);
      return kExitOk;
    }
    if (*yau) {
      const AlgebraDocument doc = read_document(file);
      const auto al = yau_choice.resolve(doc);
      if (!al) throw UsageError("yau needs --twist-from-file, --left-mult or --right-mult");
      const TripleCheck crit = yau_criterion(doc.algebra, *al);
      AlgebraDocument res = document_of(yau_twist(doc.algebra, *al));
      res.meta["yau_criterion"] = witness_json(crit);
      write_text(emit_document(res), output, out);
      return kExitOk;
    }
    if (*opp) {
      write_text(emit_document(document_of(opposite(read_document(file).algebra))), output, out);
      return kExitOk;
    }
    if (*poly) {
      write_text(emit_document(document_of(truncated_poly(degree, with_constants))), output, out);
      return kExitOk;
    }
    if (*leib) {
      const AlgebraDocument doc = read_document(file);
      std::size_t failures = 0;
      emit_json(leibniz_report(doc, twist_choice.resolve(doc), failures), out);
      return failures ? kExitCheckFailure : kExitOk;
    }
    if (*rnd) {
      GeneratorConfig cfg;
      cfg.seed = seed;
      cfg.dim = dim;
      cfg.field = Field::parse(field_text);
      cfg.pool = default_pool(cfg.field);
      cfg.force_left_unital = left_unital;
      cfg.commutative = commutative;
      cfg.anticommutative = anticommutative;
      AlgebraDocument doc = document_of(random_algebra(cfg));
      doc.meta["generator"] = generator_meta(cfg);
      write_text(emit_document(doc), output, out);
      return kExitOk;
    }
    if (*camp) {
      std::vector<CorpusItem> items;
      if (!dir.empty()) items = load_corpus(dir);
      for (std::uint64_t s = 0; s < seeds; ++s) items.push_back(generated_item(s));
      const CampaignReport r = run_campaign(items, serial ? Execution::serial : Execution::openmp);
      write_text(r.to_json().dump(2) + "\n", report_path, out);
      err << "homalg: " << r.instances.size() << " instances, " << r.failures() << " failed checks\n";
      return r.failures() ? kExitCheckFailure : kExitOk;
    }
  } catch (const InternalCheckFailure& e) {
    err << "homalg: " << e.what() << "\n";
    return kExitCheckFailure;
  } catch (const std::exception& e) {
    err << "homalg: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace homalg::cli
