#include "homalg/campaign.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "homalg/catalog.hpp"
#include "homalg/error.hpp"
#include "homalg/homstruct.hpp"
#include "homalg/leibniz.hpp"

namespace homalg {

using nlohmann::json;

std::vector<CorpusItem> load_corpus(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::recursive_directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<CorpusItem> out;
  for (const auto& f : files) out.push_back({f.string(), read_document(f)});
  return out;
}

std::vector<CorpusItem> standard_corpus() {
  const Field f2 = Field::prime(2);
  std::vector<CorpusItem> out;
  auto add_alg = [&](std::string name, const Algebra& a) { out.push_back({std::move(name), document_of(a)}); };
  const InvolutiveAlgebra c = cayley_dickson_chain(1);
  out.push_back({"complex", document_of(c)});
  add_alg("quaternions", quaternions());
  out.push_back({"octonions", document_of(cayley_dickson_chain(3))});
  out.push_back({"complex-conjugation-yau", document_of(yau_twist(c.base(), c.conj()))});
  const Algebra poly = truncated_poly(6, true);
  out.push_back({"truncated-poly-Lt-yau", document_of(yau_twist(poly, left_op(poly, poly.basis(1))))});
  add_alg("matrices-2", matrix_algebra_2());
  add_alg("upper-triangular-2", upper_triangular_2());
  add_alg("P2", left_unital_p2());
  add_alg("P2-F2", left_unital_p2(f2));
  add_alg("P2-opposite", opposite(left_unital_p2()));
  add_alg("N2", zero_algebra_2());
  add_alg("truncated-poly-3", truncated_poly(3));
  add_alg("truncated-poly-3-unital", truncated_poly(3, true));
  add_alg("N2-unitalized", unitalize(zero_algebra_2()).algebra);
  add_alg("truncated-poly-3-unitalized", unitalize(truncated_poly(3)).algebra);
  add_alg("Leib2", leib2());
  add_alg("left-Leibniz-yx", left_leibniz_yx());
  add_alg("sl2", sl2());
  add_alg("heisenberg", heisenberg());
  add_alg("cross-product", cross_product_algebra());
  return out;
}

GeneratorConfig campaign_config(std::uint64_t seed) {
  GeneratorConfig cfg;
  cfg.seed = seed;
  const std::size_t step = static_cast<std::size_t>(seed / 6);
  switch (seed % 6) {
    case 0:
      cfg.field = Field::rational();
      cfg.dim = 2 + step % 4;
      cfg.force_left_unital = true;
      break;
    case 1:
      cfg.field = Field::prime(2);
      cfg.dim = 2 + step % 4;
      cfg.force_left_unital = true;
      break;
    case 2:
      cfg.field = Field::rational();
      cfg.dim = 2 + step % 3;
      cfg.force_left_unital = true;
      cfg.commutative = true;
      break;
    case 3:
      cfg.field = Field::prime(3);
      cfg.dim = 2 + step % 2;
      break;
    case 4:
      cfg.field = Field::rational();
      cfg.dim = 3;
      cfg.anticommutative = true;
      break;
    default:
      cfg.field = Field::prime(2);
      cfg.dim = 2 + step % 2;
      break;
  }
  cfg.pool = default_pool(cfg.field);
  return cfg;
}

CorpusItem generated_item(std::uint64_t seed) {
  const GeneratorConfig cfg = campaign_config(seed);
  AlgebraDocument doc = document_of(random_algebra(cfg));
  doc.meta["generator"] = generator_meta(cfg);
  if (seed % 2 == 1) {
    std::mt19937_64 rng(seed ^ 0x7477697374ULL);
    doc.twist = random_matrix(cfg.field, cfg.dim, cfg.dim, rng);
  }
  return {"generated:" + std::to_string(seed), std::move(doc)};
}

bool hu_t_matches_exhaustive(const Algebra& a) {
  const std::size_t n = a.dim();
  const Field f = a.field();
  if (f.is_rational()) throw PreconditionViolated("exhaustive scan needs a prime field");
  const std::uint64_t p = f.characteristic();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= p;
    if (total > (1u << 16)) throw SearchSpaceTooLarge("p^n multiplier candidates");
  }
  const Subspace hut = hu_t(a, Side::left);
  for (std::uint64_t code = 0; code < total; ++code) {
    Element v;
    std::uint64_t c = code;
    for (std::size_t i = 0; i < n; ++i, c /= p) v.push_back(Scalar::from_int(f, static_cast<long long>(c % p)));
    if (is_hom_associative(HomAlgebra(a, left_op(a, v))).holds != hut.contains(v)) return false;
  }
  return true;
}

CheckList instance_suite(const AlgebraDocument& doc) {
  CheckList c;
  const Algebra& a = doc.algebra;
  const HomStructureReport audit = structure_theorem_audit(a);
  c.append(audit.shared_checks, "audit: ");
  c.append(audit.left.checks, "audit left: ");
  c.append(audit.right.checks, "audit right: ");

  try {
    ac_unitalized_by_eigenspaces(a);
    c.pass("unitalization: eigenspace form agrees");
  } catch (const InternalCheckFailure& e) {
    c.fail("unitalization: eigenspace form agrees", e.what());
  }
  c.expect(twist_space(a, Execution::serial).flat == twist_space(a, Execution::openmp).flat, "serial and parallel twist spaces agree");

  if (!a.field().is_rational() && a.field().characteristic() == 2 && a.dim() <= 3) {
    c.expect(hu_t_matches_exhaustive(a), "hu_t equals the exhaustive multiplier scan");
  }

  for (Side side : {Side::left, Side::right}) {
    if (find_unities(a, side).empty) continue;
    try {
      c.append(bijection_report(a, side).checks, "bijection " + to_string(side) + ": ");
    } catch (const InternalCheckFailure& e) {
      c.fail("bijection " + to_string(side) + ": split", e.what());
    }
  }

  if (doc.twist) {
    const HomAlgebra h(a, *doc.twist);
    try {
      const TripleCheck crit = yau_criterion(a, *doc.twist);
      c.pass("yau: criterion agrees with direct evaluation", crit.holds ? "hom-associative" : "not hom-associative");
    } catch (const InternalCheckFailure& e) {
      c.fail("yau: criterion agrees with direct evaluation", e.what());
    }
    if (is_hom_associative(h).holds) {
      for (Side side : {Side::left, Side::right, Side::two_sided}) {
        const AffineSet u = find_unities(a, side);
        if (u.empty) continue;
        const std::string tag = "given twist " + to_string(side) + ": ";
        c.expect(multiplicativity_report(h, u.particular, side).consistent(), tag + "multiplicativity equivalence");
        c.append(relation_tables_check(h, u.particular, side), tag);
      }
      c.append(crossed_unitality_check(h), "crossed unitality: ");
    }
  }

  if (is_leibniz(a)) {
    try {
      const Subspace hn = hu_n_leibniz(a);
      c.pass("leibniz: hu_n assertions", "dim " + std::to_string(hn.dim()));
    } catch (const InternalCheckFailure& e) {
      c.fail("leibniz: hu_n assertions", e.what());
    }
    c.append(unitality_collapse_check(a), "leibniz: ");
    const Subspace assoc = span_of(a, SpanKind::associators);
    if (leibniz_check(a, Side::left).holds) {
      c.expect(assoc == nested_product_span(a, Side::left), "leibniz: left associators span [L,[L,L]]");
    }
    if (leibniz_check(a, Side::right).holds) {
      c.expect(assoc == nested_product_span(a, Side::right), "leibniz: right associators span [[L,L],L]");
    }
  }
  return c;
}

std::size_t CampaignReport::failures() const {
  std::size_t n = 0;
  for (const auto& r : instances) n += r.checks.failures();
  return n;
}

json CampaignReport::to_json() const {
  json items = json::array();
  for (const auto& r : instances) {
    std::size_t pass = 0, skipped = 0;
    json failed = json::array();
    for (const auto& ch : r.checks.items()) {
      if (ch.status == Status::pass) ++pass;
      if (ch.status == Status::skipped) ++skipped;
      if (ch.status == Status::fail) failed.push_back({{"name", ch.name}, {"detail", ch.detail}});
    }
    items.push_back({{"name", r.name}, {"passed", pass}, {"skipped", skipped}, {"failed", failed}});
  }
  return {{"prng", kPrngName},
          {"generator_version", kGeneratorVersion},
          {"instances", items},
          {"instance_count", instances.size()},
          {"failures", failures()}};
}

CampaignReport run_campaign(const std::vector<CorpusItem>& items, Execution exec) {
  CampaignReport rep;
  rep.instances.resize(items.size());
  const auto n = static_cast<std::ptrdiff_t>(items.size());
  auto one = [&](std::ptrdiff_t i) {
    InstanceResult& r = rep.instances[static_cast<std::size_t>(i)];
    r.name = items[static_cast<std::size_t>(i)].name;
    try {
      r.checks = instance_suite(items[static_cast<std::size_t>(i)].doc);
    } catch (const std::exception& e) {
      r.checks.fail("pipeline", e.what());
    }
  };
  if (exec == Execution::openmp) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < n; ++i) one(i);
  } else {
    for (std::ptrdiff_t i = 0; i < n; ++i) one(i);
  }
  return rep;
}

}  // namespace homalg
