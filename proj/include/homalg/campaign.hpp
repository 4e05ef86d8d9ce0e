#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "homalg/check.hpp"
#include "homalg/constructions.hpp"
#include "homalg/io.hpp"
#include "homalg/kernels.hpp"

namespace homalg {

struct CorpusItem {
  std::string name;
  AlgebraDocument doc;
};

/// Every *.json file below dir, ordered by path. Parse failures propagate.
std::vector<CorpusItem> load_corpus(const std::filesystem::path& dir);

/// Named algebras exercised by the acceptance suite and the tests.
std::vector<CorpusItem> standard_corpus();

/// Generator settings for the s-th generated campaign instance.
GeneratorConfig campaign_config(std::uint64_t seed);
/// Generated instance for a seed, with generator metadata and, for odd seeds,
/// a random twist so the Yau criterion gets exercised.
CorpusItem generated_item(std::uint64_t seed);

/// True when hu_t(left) equals {v : L_v hom-associative} enumerated over all
/// p^n vectors. Throws SearchSpaceTooLarge above 2^16 candidates.
bool hu_t_matches_exhaustive(const Algebra& a);

/// The full invariant suite for one instance.
CheckList instance_suite(const AlgebraDocument& doc);

struct InstanceResult {
  std::string name;
  CheckList checks;
};

struct CampaignReport {
  std::vector<InstanceResult> instances;
  std::size_t failures() const;
  nlohmann::json to_json() const;
};

/// Runs the suite over the items (in parallel, reported in input order).
CampaignReport run_campaign(const std::vector<CorpusItem>& items, Execution exec = Execution::openmp);

}  // namespace homalg
