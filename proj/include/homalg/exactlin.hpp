#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "homalg/matrix.hpp"

namespace homalg {

struct Rref {
  Matrix matrix;
  std::vector<std::size_t> pivots;
};

/// Unique reduced row-echelon form; zero rows are kept at the bottom.
Rref rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Subspace of F^n stored as its canonical reduced row-echelon basis.
class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace of F^n.
  Subspace(Field f, std::size_t ambient_dim);

  static Subspace full(Field f, std::size_t n);
  static Subspace span(Field f, std::size_t n, const std::vector<Element>& vectors);
  static Subspace row_space(const Matrix& m);

  Field field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_dim(); }

  /// Rows form the canonical basis.
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Element vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Element> vectors() const;

  bool contains(const Element& v) const;
  bool contains(const Subspace& s) const;
  /// v minus its projection along the basis onto pivot coordinates; zero iff v is a member.
  Element reduce(const Element& v) const;
  /// Coefficients of a member in the canonical basis.
  std::vector<Scalar> coordinates(const Element& v) const;
  /// Linear combination of the basis with the given coefficients.
  Element combine(const std::vector<Scalar>& coeffs) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.basis_ == b.basis_;
  }

 private:
  friend class RowReducer;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// particular + direction; particular has zeros in all free coordinates.
struct AffineSet {
  bool empty = true;
  Element particular;
  Subspace direction;

  bool contains(const Element& v) const;
};

Subspace kernel(const Matrix& m);
AffineSet solve_affine(const Matrix& m, const Element& b);
/// Vectors orthogonal to s under the standard pairing.
Subspace orthogonal(const Subspace& s);
Subspace meet(const Subspace& a, const Subspace& b);
Subspace join(const Subspace& a, const Subspace& b);
bool contains(const Subspace& s, const Element& v);
bool is_direct_sum(const Subspace& a, const Subspace& b, const Subspace& whole);
Subspace eigenspace(const Matrix& m, const Scalar& lambda);
/// Image of a subspace under a linear map.
Subspace image(const Matrix& m, const Subspace& s);

using SparseRow = std::vector<std::pair<std::uint32_t, Scalar>>;

/// Incremental reduced row-echelon accumulator. Each accepted row is fully
/// reduced against the current basis, so the final form does not depend on
/// insertion order.
class RowReducer {
 public:
  RowReducer(Field f, std::size_t cols);

  /// Returns true when the row raised the rank.
  bool add(const Element& row);
  /// Column indices must be distinct.
  bool add(const SparseRow& row);
  void merge(const RowReducer& other);

  Field field() const { return field_; }
  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  bool full_rank() const { return rows_.size() == cols_; }

  Subspace row_space() const;
  Subspace kernel() const;

 private:
  bool insert_reduced();

  Field field_;
  std::size_t cols_;
  std::vector<Element> rows_;
  std::vector<std::vector<std::uint32_t>> support_;
  std::vector<std::size_t> row_pivot_;
  std::vector<std::int64_t> pivot_row_;
  Element work_;
};

}  // namespace homalg
