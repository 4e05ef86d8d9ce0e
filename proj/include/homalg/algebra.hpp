#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homalg/matrix.hpp"

namespace homalg {

/// Largest dimension accepted by Algebra; HOMALG_MAX_DIM overrides the default 32.
std::size_t max_dimension();

/// Dense n x n x n coefficient grid: e_i * e_j = sum_k c(i,j,k) e_k.
class StructureTensor {
 public:
  StructureTensor(Field f, std::size_t n);

  Field field() const { return field_; }
  std::size_t dim() const { return n_; }
  Scalar& at(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * n_ + j) * n_ + k]; }
  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * n_ + j) * n_ + k]; }
  /// Sets e_i * e_j to the given element.
  void set_product(std::size_t i, std::size_t j, const Element& v);

 private:
  Field field_;
  std::size_t n_;
  std::vector<Scalar> c_;
};

/// Finite-dimensional algebra given by structure constants. Immutable.
class Algebra {
 public:
  /// Throws DimensionLimitExceeded above max_dimension().
  explicit Algebra(StructureTensor t, std::vector<std::string> labels = {});

  /// The zero product on F^n.
  static Algebra zero(Field f, std::size_t n);

  Field field() const { return tensor_.field(); }
  std::size_t dim() const { return tensor_.dim(); }
  const StructureTensor& tensor() const { return tensor_; }
  const Scalar& coeff(std::size_t i, std::size_t j, std::size_t k) const { return tensor_.at(i, j, k); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// True when labels were supplied rather than defaulted.
  bool has_labels() const { return custom_labels_; }

  Element basis(std::size_t i) const { return unit_element(field(), dim(), i); }
  /// Nonzero (k, c) terms of e_i * e_j.
  const std::vector<std::pair<std::size_t, Scalar>>& terms(std::size_t i, std::size_t j) const {
    return terms_[i * dim() + j];
  }

  friend bool operator==(const Algebra& a, const Algebra& b);

 private:
  StructureTensor tensor_;
  std::vector<std::string> labels_;
  bool custom_labels_ = false;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> terms_;
};

/// Algebra together with a twisting map alpha.
class HomAlgebra {
 public:
  HomAlgebra(Algebra base, LinearMap twist);
  const Algebra& base() const { return base_; }
  const LinearMap& twist() const { return twist_; }

 private:
  Algebra base_;
  LinearMap twist_;
};

/// Algebra together with an involutive conjugation sigma.
class InvolutiveAlgebra {
 public:
  /// Throws InvariantViolation unless sigma * sigma is the identity.
  InvolutiveAlgebra(Algebra base, LinearMap conj);
  const Algebra& base() const { return base_; }
  const LinearMap& conj() const { return conj_; }

 private:
  Algebra base_;
  LinearMap conj_;
};

using Triple = std::array<std::size_t, 3>;
using Pair = std::array<std::size_t, 2>;

/// Outcome of a universally quantified basis check with the lexicographically
/// first failing index tuple.
template <class Index>
struct Check {
  bool holds = true;
  std::optional<Index> witness;
  explicit operator bool() const { return holds; }
};

using TripleCheck = Check<Triple>;
using PairCheck = Check<Pair>;

Element multiply(const Algebra& a, const Element& x, const Element& y);
Element basis_product(const Algebra& a, std::size_t i, std::size_t j);
LinearMap left_op(const Algebra& a, const Element& x);
LinearMap right_op(const Algebra& a, const Element& x);
Element commutator(const Algebra& a, const Element& x, const Element& y);
Element anticommutator(const Algebra& a, const Element& x, const Element& y);
Element associator(const Algebra& a, const Element& x, const Element& y, const Element& z);
Element hom_associator(const HomAlgebra& h, const Element& x, const Element& y, const Element& z);

TripleCheck is_hom_associative(const HomAlgebra& h);
PairCheck is_multiplicative_check(const HomAlgebra& h);
bool is_multiplicative(const HomAlgebra& h);
bool is_idempotent_map(const LinearMap& f);
bool is_idempotent_elem(const Algebra& a, const Element& x);

TripleCheck is_associative(const Algebra& a);
bool is_commutative(const Algebra& a);
/// x * x = 0 for every basis element and x * y = -y * x for every basis pair.
bool is_anticommutative(const Algebra& a);
/// Every structure constant is zero.
bool is_zero_product(const Algebra& a);

}  // namespace homalg
