#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homalg/algebra.hpp"
#include "homalg/check.hpp"
#include "homalg/exactlin.hpp"
#include "homalg/kernels.hpp"
#include "homalg/subspaces.hpp"

namespace homalg {

/// Flattening of n x n maps into F^(n*n): entry (r, c) sits at r*n + c.
Element flatten(const LinearMap& m);
LinearMap unflatten(Field f, std::size_t n, const Element& v);

/// All hom-associative twisting maps of an algebra.
struct TwistSpace {
  Subspace flat;
  std::vector<LinearMap> maps;

  std::size_t dim() const { return flat.dim(); }
  bool contains(const LinearMap& m) const { return flat.contains(flatten(m)); }
};

/// Kernel of (e_i e_j) alpha(e_k) = alpha(e_i)(e_j e_k) over the n^2 entries of alpha.
TwistSpace twist_space(const Algebra& a, Execution exec = Execution::openmp);

/// Multipliers a whose left (right) multiplication operator is hom-associative.
Subspace hu_t(const Algebra& a, Side side, Execution exec = Execution::openmp);

/// two_sided: Z, N, Ann^l(assoc). left: Z_A(A A), N^l, N^m, Ann^l(assoc).
/// right: Z_A(A A), N^m, N^r, Ann^r(assoc).
Subspace hu_n(const Algebra& a, Side variant);

/// The two-sided formula, optionally checked against {alpha(1) : alpha in Twist}.
Subspace ac_two_sided(const Algebra& a, bool cross_check = true);

/// {a : a(xz) = x(az), (ax)(yz) = a((xy)z)}; needs no unity.
Subspace ac_left_conditions(const Algebra& a, Execution exec = Execution::openmp);
/// The mirrored conditions, computed on the opposite algebra.
Subspace ac_right_conditions(const Algebra& a, Execution exec = Execution::openmp);

struct OneSidedAC {
  Side side = Side::left;
  Subspace ac;
  /// AC_l * 1_l, or 1_r * AC_r.
  Subspace ac_unit;
  Subspace annihilator;
  Element unity;
  bool split_ok = false;
};

/// Throws NotUnitalOnSide without a unity on that side and InternalCheckFailure
/// if the decomposition AC = AC*1 + Ann fails.
OneSidedAC ac_one_sided(const Algebra& a, Side side);

struct BijectionReport {
  Side side = Side::left;
  std::size_t twist_dim = 0;
  std::size_t ac_unit_dim = 0;
  std::vector<Element> idempotents;
  CheckList checks;
};

BijectionReport bijection_report(const Algebra& a, Side side);

struct MultiplicativityReport {
  bool multiplicative = false;
  bool idempotent_map = false;
  bool square_fixes_unit_image = false;
  bool unit_image_idempotent = false;
  bool consistent() const {
    return multiplicative == idempotent_map && idempotent_map == square_fixes_unit_image &&
           square_fixes_unit_image == unit_image_idempotent;
  }
};

/// Throws PreconditionViolated unless h is hom-associative and `unity` is a unity on `side`.
MultiplicativityReport multiplicativity_report(const HomAlgebra& h, const Element& unity, Side side);

/// Every product relation of a one- or two-sided unital hom-associative
/// algebra, on basis elements. Same preconditions as multiplicativity_report.
CheckList relation_tables_check(const HomAlgebra& h, const Element& unity, Side side);

struct DomainStatus {
  bool domain = false;
  std::string detail;
};

/// Injectivity of L_x and R_x for basis vectors and 32 seeded random vectors.
DomainStatus domain_status(const Algebra& a);

struct NamedSubspace {
  std::string name;
  Subspace space;
};

/// One side of the audit. The right section is the left section of the
/// opposite algebra, so the opposite algebra swaps the two exactly.
struct SideSection {
  bool unital = false;
  std::optional<AffineSet> unities;
  std::vector<NamedSubspace> subspaces;
  std::optional<Element> hu_t_outside_hu_n;
  CheckList checks;
};

struct HomStructureReport {
  std::size_t dim = 0;
  Field field;
  bool associative = false;
  bool commutative = false;
  bool two_sided_unital = false;
  DomainStatus domain;
  std::vector<NamedSubspace> shared;
  std::vector<LinearMap> twist_basis;
  CheckList shared_checks;
  SideSection left;
  SideSection right;

  std::size_t failures() const {
    return shared_checks.failures() + left.checks.failures() + right.checks.failures();
  }
};

HomStructureReport structure_theorem_audit(const Algebra& a);

}  // namespace homalg
