#include "homalg/algebra.hpp"

#include <cstdlib>

#include "homalg/error.hpp"

namespace homalg {

namespace {

void check_len(const Algebra& a, const Element& x) {
  if (x.size() != a.dim()) {
    throw DimensionMismatch("element of length " + std::to_string(x.size()) + " in a " +
                            std::to_string(a.dim()) + "-dimensional algebra");
  }
}

void check_map(const Algebra& a, const LinearMap& m, const char* what) {
  if (m.rows() != a.dim() || m.cols() != a.dim()) {
    throw DimensionMismatch(std::string(what) + " is " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + " for dimension " + std::to_string(a.dim()));
  }
  if (!(m.field() == a.field())) throw FieldMismatch(std::string(what) + " over " + m.field().to_string());
}

}  // namespace

std::size_t max_dimension() {
  if (const char* env = std::getenv("HOMALG_MAX_DIM")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 32;
}

StructureTensor::StructureTensor(Field f, std::size_t n) : field_(f), n_(n), c_(n * n * n, Scalar::zero(f)) {}

void StructureTensor::set_product(std::size_t i, std::size_t j, const Element& v) {
  if (v.size() != n_) throw DimensionMismatch("product of length " + std::to_string(v.size()));
  for (std::size_t k = 0; k < n_; ++k) at(i, j, k) = v[k];
}

Algebra::Algebra(StructureTensor t, std::vector<std::string> labels) : tensor_(std::move(t)) {
  const std::size_t n = tensor_.dim();
  if (n > max_dimension()) {
    throw DimensionLimitExceeded("dimension " + std::to_string(n) + " exceeds the limit " +
                                 std::to_string(max_dimension()));
  }
  if (!labels.empty() && labels.size() != n) {
    throw DimensionMismatch(std::to_string(labels.size()) + " basis labels for dimension " + std::to_string(n));
  }
  custom_labels_ = !labels.empty();
  if (labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  }
  labels_ = std::move(labels);
  terms_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = tensor_.at(i, j, k);
        if (!(c.field() == tensor_.field())) throw FieldMismatch("structure constant over " + c.field().to_string());
        if (!c.is_zero()) terms_[i * n + j].emplace_back(k, c);
      }
}

Algebra Algebra::zero(Field f, std::size_t n) { return Algebra(StructureTensor(f, n)); }

bool operator==(const Algebra& a, const Algebra& b) {
  if (!(a.field() == b.field()) || a.dim() != b.dim()) return false;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (a.coeff(i, j, k) != b.coeff(i, j, k)) return false;
      }
  return true;
}

HomAlgebra::HomAlgebra(Algebra base, LinearMap twist) : base_(std::move(base)), twist_(std::move(twist)) {
  check_map(base_, twist_, "twist");
}

InvolutiveAlgebra::InvolutiveAlgebra(Algebra base, LinearMap conj) : base_(std::move(base)), conj_(std::move(conj)) {
  check_map(base_, conj_, "conjugation");
  if (!(conj_ * conj_).is_identity()) throw InvariantViolation("conjugation is not an involution");
}

Element multiply(const Algebra& a, const Element& x, const Element& y) {
  check_len(a, x);
  check_len(a, y);
  const std::size_t n = a.dim();
  Element out = zero_element(a.field(), n);
  Scalar xy = Scalar::zero(a.field());
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const auto& t = a.terms(i, j);
      if (t.empty()) continue;
      xy = x[i];
      xy *= y[j];
      for (const auto& [k, c] : t) out[k].add_mul(xy, c);
    }
  }
  return out;
}

Element basis_product(const Algebra& a, std::size_t i, std::size_t j) {
  Element out = zero_element(a.field(), a.dim());
  for (const auto& [k, c] : a.terms(i, j)) out[k] = c;
  return out;
}

LinearMap left_op(const Algebra& a, const Element& x) {
  check_len(a, x);
  LinearMap m(a.field(), a.dim(), a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) m.set_column(j, multiply(a, x, a.basis(j)));
  return m;
}

LinearMap right_op(const Algebra& a, const Element& x) {
  check_len(a, x);
  LinearMap m(a.field(), a.dim(), a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) m.set_column(j, multiply(a, a.basis(j), x));
  return m;
}

Element commutator(const Algebra& a, const Element& x, const Element& y) {
  return sub(multiply(a, x, y), multiply(a, y, x));
}

Element anticommutator(const Algebra& a, const Element& x, const Element& y) {
  return add(multiply(a, x, y), multiply(a, y, x));
}

Element associator(const Algebra& a, const Element& x, const Element& y, const Element& z) {
  return sub(multiply(a, multiply(a, x, y), z), multiply(a, x, multiply(a, y, z)));
}

Element hom_associator(const HomAlgebra& h, const Element& x, const Element& y, const Element& z) {
  const Algebra& a = h.base();
  const LinearMap& al = h.twist();
  return sub(multiply(a, multiply(a, x, y), al.apply(z)), multiply(a, al.apply(x), multiply(a, y, z)));
}

TripleCheck is_hom_associative(const HomAlgebra& h) {
  const Algebra& a = h.base();
  const std::size_t n = a.dim();
  std::vector<Element> img(n), prod(n * n);
  for (std::size_t i = 0; i < n; ++i) img[i] = h.twist().column(i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) prod[i * n + j] = basis_product(a, i, j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Element lhs = multiply(a, prod[i * n + j], img[k]);
        const Element rhs = multiply(a, img[i], prod[j * n + k]);
        if (lhs != rhs) return {false, Triple{i, j, k}};
      }
  return {};
}

PairCheck is_multiplicative_check(const HomAlgebra& h) {
  const Algebra& a = h.base();
  const std::size_t n = a.dim();
  std::vector<Element> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = h.twist().column(i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (h.twist().apply(basis_product(a, i, j)) != multiply(a, img[i], img[j])) return {false, Pair{i, j}};
    }
  return {};
}

bool is_multiplicative(const HomAlgebra& h) { return is_multiplicative_check(h).holds; }

bool is_idempotent_map(const LinearMap& f) { return f * f == f; }

bool is_idempotent_elem(const Algebra& a, const Element& x) { return multiply(a, x, x) == x; }

TripleCheck is_associative(const Algebra& a) {
  return is_hom_associative(HomAlgebra(a, LinearMap::identity(a.field(), a.dim())));
}

bool is_commutative(const Algebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (a.coeff(i, j, k) != a.coeff(j, i, k)) return false;
      }
  return true;
}

bool is_anticommutative(const Algebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (i == j ? !a.coeff(i, i, k).is_zero() : a.coeff(i, j, k) != -a.coeff(j, i, k)) return false;
      }
  return true;
}

bool is_zero_product(const Algebra& a) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (!a.terms(i, j).empty()) return false;
    }
  return true;
}

}  // namespace homalg
