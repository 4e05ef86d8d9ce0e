#pragma once

#include <json.hpp>

#include "homalg/check.hpp"
#include "homalg/exactlin.hpp"
#include "homalg/homstruct.hpp"

namespace homalg {

/// {"dim", "basis"} with the canonical (RREF) basis.
nlohmann::json to_json(const Subspace& s);
nlohmann::json to_json(const AffineSet& s);
nlohmann::json to_json(const CheckList& c);
nlohmann::json to_json(const DomainStatus& d);
nlohmann::json to_json(const SideSection& s);
nlohmann::json to_json(const HomStructureReport& r);
nlohmann::json to_json(const OneSidedAC& ac);
nlohmann::json to_json(const BijectionReport& b);
nlohmann::json to_json(const MultiplicativityReport& m);

}  // namespace homalg
