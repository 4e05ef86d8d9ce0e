#include "homalg/exactlin.hpp"

#include <algorithm>
#include <numeric>

#include "homalg/error.hpp"

namespace homalg {

namespace {

void check_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw DimensionMismatch("ambient dims " + std::to_string(a.ambient_dim()) + " and " +
                            std::to_string(b.ambient_dim()));
  }
  if (!(a.field() == b.field())) throw FieldMismatch(a.field().to_string() + " vs " + b.field().to_string());
}

void check_entries(const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!(m(r, c).field() == m.field())) {
        throw FieldMismatch("matrix entry over " + m(r, c).field().to_string() + " in a matrix over " +
                            m.field().to_string());
      }
    }
}

RowReducer reducer_of(const Matrix& m) {
  check_entries(m);
  RowReducer red(m.field(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) red.add(m.row(r));
  return red;
}

}  // namespace

// ---------------------------------------------------------------- RowReducer

RowReducer::RowReducer(Field f, std::size_t cols)
    : field_(f), cols_(cols), pivot_row_(cols, -1), work_(zero_element(f, cols)) {}

bool RowReducer::add(const Element& row) {
  if (row.size() != cols_) throw DimensionMismatch("row length " + std::to_string(row.size()));
  if (full_rank()) return false;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (!(row[c].field() == field_)) throw FieldMismatch("row entry over " + row[c].field().to_string());
    work_[c] = row[c];
  }
  for (std::size_t c = 0; c < cols_; ++c) {
    const auto pr = pivot_row_[c];
    if (pr < 0 || work_[c].is_zero()) continue;
    const Scalar coef = work_[c];
    const Element& basis = rows_[pr];
    for (auto j : support_[pr]) work_[j].sub_mul(coef, basis[j]);
  }
  return insert_reduced();
}

bool RowReducer::add(const SparseRow& row) {
  if (full_rank()) return false;
  for (auto& w : work_) w.set_zero();
  for (const auto& [c, v] : row) {
    if (c >= cols_) throw DimensionMismatch("sparse column " + std::to_string(c));
    work_[c] = v;
  }
  // Basis rows vanish on every other pivot column, so only the pivot
  // columns present in the input need eliminating.
  for (const auto& [c, v] : row) {
    const auto pr = pivot_row_[c];
    if (pr < 0 || v.is_zero()) continue;
    const Element& basis = rows_[pr];
    for (auto j : support_[pr]) work_[j].sub_mul(v, basis[j]);
  }
  return insert_reduced();
}

bool RowReducer::insert_reduced() {
  std::size_t lead = cols_;
  std::vector<std::uint32_t> supp;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (!work_[c].is_zero()) {
      if (lead == cols_) lead = c;
      supp.push_back(static_cast<std::uint32_t>(c));
    }
  }
  if (lead == cols_) return false;
  const Scalar inv = work_[lead].inverse();
  for (auto j : supp) work_[j] *= inv;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Element& row = rows_[r];
    if (row[lead].is_zero()) continue;
    const Scalar coef = row[lead];
    for (auto j : supp) row[j].sub_mul(coef, work_[j]);
    auto& s = support_[r];
    s.clear();
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!row[c].is_zero()) s.push_back(static_cast<std::uint32_t>(c));
    }
  }
  pivot_row_[lead] = static_cast<std::int64_t>(rows_.size());
  row_pivot_.push_back(lead);
  rows_.push_back(work_);
  support_.push_back(std::move(supp));
  return true;
}

void RowReducer::merge(const RowReducer& other) {
  if (other.cols_ != cols_) throw DimensionMismatch("merging reducers of different widths");
  if (!(other.field_ == field_)) throw FieldMismatch("merging reducers over different fields");
  for (std::size_t r = 0; r < other.rows_.size() && !full_rank(); ++r) {
    SparseRow sparse;
    for (auto j : other.support_[r]) sparse.emplace_back(j, other.rows_[r][j]);
    add(sparse);
  }
}

Subspace RowReducer::row_space() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return row_pivot_[a] < row_pivot_[b]; });
  Subspace s(field_, cols_);
  s.basis_ = Matrix(field_, rows_.size(), cols_);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t c = 0; c < cols_; ++c) s.basis_(i, c) = rows_[order[i]][c];
    s.pivots_.push_back(row_pivot_[order[i]]);
  }
  return s;
}

Subspace RowReducer::kernel() const {
  RowReducer out(field_, cols_);
  for (std::size_t f = 0; f < cols_; ++f) {
    if (pivot_row_[f] >= 0) continue;
    SparseRow v;
    v.emplace_back(static_cast<std::uint32_t>(f), Scalar::one(field_));
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Scalar& x = rows_[r][f];
      if (!x.is_zero()) v.emplace_back(static_cast<std::uint32_t>(row_pivot_[r]), -x);
    }
    out.add(v);
  }
  return out.row_space();
}

// ------------------------------------------------------------------ Subspace

Subspace::Subspace(Field f, std::size_t ambient_dim) : basis_(f, 0, ambient_dim) {}

Subspace Subspace::full(Field f, std::size_t n) {
  Subspace s(f, n);
  s.basis_ = Matrix::identity(f, n);
  s.pivots_.resize(n);
  std::iota(s.pivots_.begin(), s.pivots_.end(), 0);
  return s;
}

Subspace Subspace::span(Field f, std::size_t n, const std::vector<Element>& vectors) {
  RowReducer red(f, n);
  for (const auto& v : vectors) red.add(v);
  return red.row_space();
}

Subspace Subspace::row_space(const Matrix& m) { return reducer_of(m).row_space(); }

std::vector<Element> Subspace::vectors() const {
  std::vector<Element> out;
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
  return out;
}

Element Subspace::reduce(const Element& v) const {
  if (v.size() != ambient_dim()) {
    throw DimensionMismatch("vector length " + std::to_string(v.size()) + " in ambient " +
                            std::to_string(ambient_dim()));
  }
  Element w = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    const Scalar coef = w[pivots_[i]];
    if (coef.is_zero()) continue;
    for (std::size_t c = 0; c < ambient_dim(); ++c) {
      const Scalar& b = basis_(i, c);
      if (!b.is_zero()) w[c].sub_mul(coef, b);
    }
  }
  return w;
}

bool Subspace::contains(const Element& v) const { return homalg::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& s) const {
  check_ambient(*this, s);
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (!contains(s.vector(i))) return false;
  }
  return true;
}

std::vector<Scalar> Subspace::coordinates(const Element& v) const {
  if (!contains(v)) throw PreconditionViolated("coordinates of a non-member");
  std::vector<Scalar> out;
  for (auto p : pivots_) out.push_back(v[p]);
  return out;
}

Element Subspace::combine(const std::vector<Scalar>& coeffs) const {
  if (coeffs.size() != dim()) throw DimensionMismatch("coefficient count");
  Element v = zero_element(field(), ambient_dim());
  for (std::size_t i = 0; i < dim(); ++i) axpy(v, coeffs[i], basis_.row(i));
  return v;
}

bool AffineSet::contains(const Element& v) const {
  return !empty && direction.contains(sub(v, particular));
}

// ---------------------------------------------------------------- operations

Rref rref(const Matrix& m) {
  const Subspace s = reducer_of(m).row_space();
  Matrix out(m.field(), m.rows(), m.cols());
  for (std::size_t r = 0; r < s.dim(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = s.basis()(r, c);
  return {out, s.pivots()};
}

std::size_t rank(const Matrix& m) { return reducer_of(m).rank(); }

Subspace kernel(const Matrix& m) { return reducer_of(m).kernel(); }

AffineSet solve_affine(const Matrix& m, const Element& b) {
  if (b.size() != m.rows()) {
    throw DimensionMismatch("right-hand side length " + std::to_string(b.size()) + " for " +
                            std::to_string(m.rows()) + " equations");
  }
  check_entries(m);
  const std::size_t n = m.cols();
  RowReducer aug(m.field(), n + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Element row = m.row(r);
    row.push_back(b[r]);
    aug.add(row);
  }
  const Subspace rs = aug.row_space();
  AffineSet out;
  out.direction = kernel(m);
  out.particular = zero_element(m.field(), n);
  for (std::size_t i = 0; i < rs.dim(); ++i) {
    if (rs.pivots()[i] == n) return out;
    out.particular[rs.pivots()[i]] = rs.basis()(i, n);
  }
  out.empty = false;
  return out;
}

Subspace orthogonal(const Subspace& s) { return kernel(s.basis()); }

Subspace meet(const Subspace& a, const Subspace& b) {
  check_ambient(a, b);
  return orthogonal(join(orthogonal(a), orthogonal(b)));
}

Subspace join(const Subspace& a, const Subspace& b) {
  check_ambient(a, b);
  RowReducer red(a.field(), a.ambient_dim());
  for (std::size_t i = 0; i < a.dim(); ++i) red.add(a.vector(i));
  for (std::size_t i = 0; i < b.dim(); ++i) red.add(b.vector(i));
  return red.row_space();
}

bool contains(const Subspace& s, const Element& v) { return s.contains(v); }

bool is_direct_sum(const Subspace& a, const Subspace& b, const Subspace& whole) {
  check_ambient(a, b);
  check_ambient(a, whole);
  return meet(a, b).is_zero() && join(a, b) == whole;
}

Subspace eigenspace(const Matrix& m, const Scalar& lambda) {
  if (m.rows() != m.cols()) throw DimensionMismatch("eigenspace of a non-square matrix");
  return kernel(m - lambda * Matrix::identity(m.field(), m.rows()));
}

Subspace image(const Matrix& m, const Subspace& s) {
  RowReducer red(m.field(), m.rows());
  for (std::size_t i = 0; i < s.dim(); ++i) red.add(m.apply(s.vector(i)));
  return red.row_space();
}

}  // namespace homalg
