#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "homalg/algebra.hpp"
#include "homalg/exactlin.hpp"

namespace homalg {

/// The one-dimensional field-as-algebra with trivial conjugation.
InvolutiveAlgebra field_algebra(Field f = Field::rational());

/// Doubling (a,b)(c,d) = (ac + gamma sigma(d) b, da + b sigma(c)),
/// sigma'(a,b) = (sigma(a), -b). Basis: (e_i, 0) then (0, e_i).
InvolutiveAlgebra cayley_dickson(const InvolutiveAlgebra& base, const Scalar& gamma);
/// `levels` doublings of the field algebra; missing gammas default to -1.
InvolutiveAlgebra cayley_dickson_chain(std::size_t levels, const std::vector<Scalar>& gammas = {},
                                       Field f = Field::rational());

/// Basis 1, i, j, k with ij = k.
Algebra quaternions();

struct Unitalization {
  Algebra algebra;
  /// (n+1) x n, x -> (x, 0).
  Matrix embedding;
  /// (0, 1), the last basis vector.
  Element unity;
};

/// (a1,l1)(a2,l2) = (a1 a2 + l1 a2 + l2 a1, l1 l2).
Unitalization unitalize(const Algebra& a);

/// {(b, mu) : b in Z(A) and N(A), b*X + mu X = 0 for X spanning the
/// associators}, in the coordinates of unitalize(a). Cross-checked against
/// the two-sided formula on the unitalization, the kernel of (b,mu) -> mu
/// and the pairwise combination rule; throws InternalCheckFailure otherwise.
Subspace ac_unitalized_by_eigenspaces(const Algebra& a);

/// Product alpha(xy), twist alpha.
HomAlgebra yau_twist(const Algebra& a, const LinearMap& alpha);
/// alpha(alpha(xy) alpha(z) - alpha(x) alpha(yz)) = 0 on basis triples.
TripleCheck yau_criterion(const Algebra& a, const LinearMap& alpha);

Algebra opposite(const Algebra& a);

/// Basis t^1..t^N, or t^0..t^N with constants; t^a t^b = t^(a+b), zero past N.
Algebra truncated_poly(std::size_t degree_cap = 6, bool with_constants = false);

/// Name of the generator behind random_algebra; recorded in reports.
inline constexpr const char* kPrngName = "mt19937_64";
/// Bumped whenever the mapping from generator output to algebras changes.
inline constexpr int kGeneratorVersion = 1;

struct GeneratorConfig {
  std::uint64_t seed = 0;
  std::size_t dim = 3;
  Field field;
  std::vector<Scalar> pool;
  bool force_left_unital = false;
  bool commutative = false;
  bool anticommutative = false;

  friend bool operator==(const GeneratorConfig&, const GeneratorConfig&) = default;
};

/// Mostly zeros plus a few small values.
std::vector<Scalar> default_pool(Field f);

/// Structure constants drawn in (i,j,k) order as pool[rng() % pool.size()].
Algebra random_algebra(const GeneratorConfig& cfg);

/// Coordinates drawn from {-2,...,2}.
Element random_element(Field f, std::size_t n, std::mt19937_64& rng);
Matrix random_matrix(Field f, std::size_t rows, std::size_t cols, std::mt19937_64& rng);

}  // namespace homalg
