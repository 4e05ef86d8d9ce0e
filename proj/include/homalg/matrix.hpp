#pragma once

#include <cstddef>
#include <vector>

#include "homalg/scalar.hpp"

namespace homalg {

/// Coordinate column of an algebra element in the fixed basis.
using Element = std::vector<Scalar>;

Element zero_element(Field f, std::size_t n);
Element unit_element(Field f, std::size_t n, std::size_t i);
Element add(const Element& a, const Element& b);
Element sub(const Element& a, const Element& b);
Element scale(const Scalar& s, const Element& v);
Element negate(const Element& v);
/// y += s * x
void axpy(Element& y, const Scalar& s, const Element& x);
bool is_zero(const Element& v);
/// Field of a non-empty element; throws FieldMismatch if entries disagree.
Field field_of(const Element& v);

/// Dense row-major matrix over one field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols);

  static Matrix identity(Field f, std::size_t n);
  /// Throws DimensionMismatch if a row has the wrong length.
  static Matrix from_rows(Field f, std::size_t cols, const std::vector<Element>& rows);
  static Matrix from_columns(Field f, std::size_t rows, const std::vector<Element>& columns);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Element row(std::size_t r) const;
  Element column(std::size_t c) const;
  void set_column(std::size_t c, const Element& v);

  /// Matrix-vector product.
  Element apply(const Element& v) const;
  Matrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;

  /// Stacks the rows of `below` under this matrix.
  Matrix stacked(const Matrix& below) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// A linear map on an n-dimensional algebra; column j is the image of e_j.
using LinearMap = Matrix;

}  // namespace homalg
