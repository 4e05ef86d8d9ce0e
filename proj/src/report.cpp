#include "homalg/report.hpp"

#include "homalg/io.hpp"

namespace homalg {

using nlohmann::json;

json to_json(const Subspace& s) {
  json basis = json::array();
  for (const auto& v : s.vectors()) basis.push_back(to_json(v));
  return {{"dim", s.dim()}, {"basis", basis}};
}

json to_json(const AffineSet& s) {
  if (s.empty) return nullptr;
  return {{"particular", to_json(s.particular)}, {"direction", to_json(s.direction)}};
}

json to_json(const CheckList& c) {
  json out = json::array();
  for (const auto& r : c.items()) out.push_back({{"name", r.name}, {"status", to_string(r.status)}, {"detail", r.detail}});
  return out;
}

json to_json(const DomainStatus& d) { return {{"domain", d.domain}, {"detail", d.detail}}; }

json to_json(const SideSection& s) {
  json subs = json::object();
  for (const auto& n : s.subspaces) subs[n.name] = to_json(n.space);
  return {{"unital", s.unital},
          {"unities", s.unities ? to_json(*s.unities) : json(nullptr)},
          {"subspaces", subs},
          {"hu_t_outside_hu_n", s.hu_t_outside_hu_n ? to_json(*s.hu_t_outside_hu_n) : json(nullptr)},
          {"checks", to_json(s.checks)}};
}

json to_json(const HomStructureReport& r) {
  json shared = json::object();
  for (const auto& n : r.shared) shared[n.name] = to_json(n.space);
  json twist = json::array();
  for (const auto& m : r.twist_basis) twist.push_back(to_json(m));
  return {{"dim", r.dim},
          {"field", r.field.to_string()},
          {"associative", r.associative},
          {"commutative", r.commutative},
          {"two_sided_unital", r.two_sided_unital},
          {"domain", to_json(r.domain)},
          {"shared", shared},
          {"twist_basis", twist},
          {"shared_checks", to_json(r.shared_checks)},
          {"left", to_json(r.left)},
          {"right", to_json(r.right)},
          {"failures", r.failures()}};
}

json to_json(const OneSidedAC& ac) {
  return {{"side", to_string(ac.side)},
          {"ac", to_json(ac.ac)},
          {"ac_unit", to_json(ac.ac_unit)},
          {"annihilator", to_json(ac.annihilator)},
          {"unity", to_json(ac.unity)},
          {"split", ac.split_ok}};
}

json to_json(const BijectionReport& b) {
  json idem = json::array();
  for (const auto& e : b.idempotents) idem.push_back(to_json(e));
  return {{"side", to_string(b.side)},
          {"twist_dim", b.twist_dim},
          {"ac_unit_dim", b.ac_unit_dim},
          {"idempotents", idem},
          {"checks", to_json(b.checks)}};
}

json to_json(const MultiplicativityReport& m) {
  return {{"multiplicative", m.multiplicative},
          {"idempotent_map", m.idempotent_map},
          {"square_fixes_unit_image", m.square_fixes_unit_image},
          {"unit_image_idempotent", m.unit_image_idempotent},
          {"consistent", m.consistent()}};
}

}  // namespace homalg
