#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homalg/algebra.hpp"
#include "homalg/check.hpp"
#include "homalg/exactlin.hpp"
#include "homalg/subspaces.hpp"

namespace homalg {

/// left:  [a(x),[y,z]] = [[x,y],a(z)] + [a(y),[x,z]]
/// right: [[x,y],a(z)] = [[x,z],a(y)] + [a(x),[y,z]]
/// with a the identity when no twist is given.
TripleCheck leibniz_check(const Algebra& a, Side side, const std::optional<LinearMap>& twist = std::nullopt);
bool is_leibniz(const Algebra& a);

/// [L,[L,L]] (outer factor on the left) or [[L,L],L].
Subspace nested_product_span(const Algebra& a, Side outer);

/// Every product of v with two basis vectors vanishes, in all slots and bracketings.
bool is_three_nilpotent(const Algebra& a, const Element& v);

/// C(L) meet Ann^l([L,L]). Throws NotLeibniz, or InternalCheckFailure when the
/// one-sided variants differ, a member is not 3-nilpotent or not in hu_t.
Subspace hu_n_leibniz(const Algebra& a);

/// A Leibniz algebra with a unity on either side has zero product.
CheckList unitality_collapse_check(const Algebra& a);

/// Implications for unital hom-associative hom-Leibniz algebras: crossed
/// sides put alpha(1) in an annihilator, matching sides force alpha = 0.
CheckList crossed_unitality_check(const HomAlgebra& h);

inline constexpr const char* kHomLieDefinition =
    "[x,y] = -[y,x], [x,x] = 0, [alpha(x),[y,z]] + [alpha(y),[z,x]] + [alpha(z),[x,y]] = 0";

struct HomLieCheck {
  bool holds = true;
  /// "skew-symmetry", "alternating" or "hom-Jacobi".
  std::string failed;
  std::vector<std::size_t> witness;
  explicit operator bool() const { return holds; }
};

HomLieCheck hom_lie_check(const HomAlgebra& h);

/// Product alpha o [.,.] and twist alpha o alpha, with alpha = L_mult (right
/// case, mult = [mult, w]) or R_mult (left case, mult = [w, mult]).
/// Throws PreconditionViolated naming the failed hypothesis.
HomAlgebra leibniz_yau_to_homlie(const Algebra& a, const Element& mult, const Element& w, Side side);

}  // namespace homalg
