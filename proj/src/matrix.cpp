#include "homalg/matrix.hpp"

#include "homalg/error.hpp"

namespace homalg {

namespace {

void check_len(const Element& a, const Element& b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("element lengths " + std::to_string(a.size()) + " and " +
                            std::to_string(b.size()));
  }
}

void check_field(Field a, Field b) {
  if (!(a == b)) throw FieldMismatch(a.to_string() + " vs " + b.to_string());
}

}  // namespace

Element zero_element(Field f, std::size_t n) { return Element(n, Scalar::zero(f)); }

Element unit_element(Field f, std::size_t n, std::size_t i) {
  Element e = zero_element(f, n);
  e.at(i) = Scalar::one(f);
  return e;
}

Element add(const Element& a, const Element& b) {
  check_len(a, b);
  Element r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Element sub(const Element& a, const Element& b) {
  check_len(a, b);
  Element r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Element scale(const Scalar& s, const Element& v) {
  Element r = v;
  for (auto& x : r) x *= s;
  return r;
}

Element negate(const Element& v) {
  Element r = v;
  for (auto& x : r) x = -x;
  return r;
}

void axpy(Element& y, const Scalar& s, const Element& x) {
  check_len(y, x);
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!x[i].is_zero()) y[i].add_mul(s, x[i]);
  }
}

bool is_zero(const Element& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Field field_of(const Element& v) {
  if (v.empty()) return Field::rational();
  const Field f = v.front().field();
  for (const auto& x : v) check_field(f, x.field());
  return f;
}

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(Field f, std::size_t cols, const std::vector<Element>& rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("row length " + std::to_string(rows[r].size()));
    for (std::size_t c = 0; c < cols; ++c) {
      check_field(f, rows[r][c].field());
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

Matrix Matrix::from_columns(Field f, std::size_t rows, const std::vector<Element>& columns) {
  Matrix m(f, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
  return m;
}

Element Matrix::row(std::size_t r) const {
  return Element(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

Element Matrix::column(std::size_t c) const {
  Element v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

void Matrix::set_column(std::size_t c, const Element& v) {
  if (v.size() != rows_) throw DimensionMismatch("column length " + std::to_string(v.size()));
  for (std::size_t r = 0; r < rows_; ++r) {
    check_field(field_, v[r].field());
    (*this)(r, c) = v[r];
  }
}

Element Matrix::apply(const Element& v) const {
  if (v.size() != cols_) {
    throw DimensionMismatch("apply: " + std::to_string(cols_) + " columns vs length " +
                            std::to_string(v.size()));
  }
  Element out = zero_element(field_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& a = (*this)(r, c);
      if (!a.is_zero()) out[r].add_mul(a, v[c]);
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& x = (*this)(r, c);
      if (r == c ? !x.is_one() : !x.is_zero()) return false;
    }
  return true;
}

Matrix Matrix::stacked(const Matrix& below) const {
  if (rows_ == 0) return below;
  if (below.rows_ == 0) return *this;
  if (cols_ != below.cols_) throw DimensionMismatch("stacking different column counts");
  check_field(field_, below.field_);
  Matrix m = *this;
  m.rows_ += below.rows_;
  m.data_.insert(m.data_.end(), below.data_.begin(), below.data_.end());
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shapes");
  check_field(a.field_, b.field_);
  Matrix m(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) m(i, j).add_mul(x, y);
      }
    }
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum shapes");
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference shapes");
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
  return m;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
  Matrix r = m;
  for (auto& x : r.data_) x *= s;
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

}  // namespace homalg
