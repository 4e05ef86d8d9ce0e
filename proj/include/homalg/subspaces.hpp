#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "homalg/algebra.hpp"
#include "homalg/exactlin.hpp"

namespace homalg {

enum class Side { left, right, two_sided };
enum class Slot { left, middle, right, full };
enum class SpanKind { products, commutators, associators };

std::string to_string(Side s);
/// Accepts "left", "right", "two", "two_sided".
Side parse_side(const std::string& text);

/// {v : v*b = b*v for every b in s}.
Subspace centralizer(const Algebra& a, const Subspace& s);
Subspace center(const Algebra& a);

/// Associator vanishes with v in the given slot and both other arguments in s.
Subspace nucleus(const Algebra& a, Slot slot, const Subspace& relative_to);
Subspace nucleus(const Algebra& a, Slot slot = Slot::full);

/// left: {v : v*s = 0}; right: {v : s*v = 0}; two_sided: both.
Subspace annihilator(const Algebra& a, const Subspace& s, Side side);
Subspace annihilator(const Algebra& a, Side side);

Subspace span_of(const Algebra& a, SpanKind kind);

/// Solves L_e = id (left), R_e = id (right), or both.
AffineSet find_unities(const Algebra& a, Side side);

constexpr std::uint64_t kDefaultIdempotentCap = std::uint64_t{1} << 20;

/// All x in `within` with x*x = x. Exhaustive over F_p; closed form over Q
/// for dim(within) <= 2. Throws UnsupportedDimensionOverQ when the solution
/// set over Q is infinite.
std::vector<Element> idempotents(const Algebra& a, const Subspace& within,
                                 std::uint64_t cap = kDefaultIdempotentCap);

}  // namespace homalg
