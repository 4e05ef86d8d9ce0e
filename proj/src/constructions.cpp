#include "homalg/constructions.hpp"

#include "homalg/error.hpp"
#include "homalg/homstruct.hpp"
#include "homalg/subspaces.hpp"

namespace homalg {

namespace {

Element head(const Element& v, std::size_t n) { return Element(v.begin(), v.begin() + n); }
Element tail(const Element& v, std::size_t n) { return Element(v.begin() + n, v.end()); }

Element concat(Element a, const Element& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

InvolutiveAlgebra field_algebra(Field f) {
  StructureTensor t(f, 1);
  t.at(0, 0, 0) = Scalar::one(f);
  return InvolutiveAlgebra(Algebra(std::move(t)), Matrix::identity(f, 1));
}

InvolutiveAlgebra cayley_dickson(const InvolutiveAlgebra& base, const Scalar& gamma) {
  const Algebra& a = base.base();
  const LinearMap& sigma = base.conj();
  const Field f = a.field();
  if (!(gamma.field() == f)) throw FieldMismatch("gamma over " + gamma.field().to_string());
  const std::size_t n = a.dim();
  auto mul = [&](const Element& x, const Element& y) {
    const Element xa = head(x, n), xb = tail(x, n), ya = head(y, n), yb = tail(y, n);
    Element first = multiply(a, xa, ya);
    axpy(first, gamma, multiply(a, sigma.apply(yb), xb));
    Element second = add(multiply(a, yb, xa), multiply(a, xb, sigma.apply(ya)));
    return concat(std::move(first), second);
  };
  StructureTensor t(f, 2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i)
    for (std::size_t j = 0; j < 2 * n; ++j) {
      t.set_product(i, j, mul(unit_element(f, 2 * n, i), unit_element(f, 2 * n, j)));
    }
  Matrix conj(f, 2 * n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) conj(r, c) = sigma(r, c);
    conj(n + r, n + r) = -Scalar::one(f);
  }
  return InvolutiveAlgebra(Algebra(std::move(t)), std::move(conj));
}

InvolutiveAlgebra cayley_dickson_chain(std::size_t levels, const std::vector<Scalar>& gammas, Field f) {
  InvolutiveAlgebra cur = field_algebra(f);
  for (std::size_t l = 0; l < levels; ++l) {
    const Scalar g = l < gammas.size() ? gammas[l] : Scalar::from_int(f, -1);
    cur = cayley_dickson(cur, g);
  }
  return cur;
}

Algebra quaternions() {
  const Algebra h = cayley_dickson_chain(2).base();
  return Algebra(h.tensor(), {"1", "i", "j", "k"});
}

Unitalization unitalize(const Algebra& a) {
  const Field f = a.field();
  const std::size_t n = a.dim();
  StructureTensor t(f, n + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) t.at(i, j, k) = a.coeff(i, j, k);
  const Scalar one = Scalar::one(f);
  for (std::size_t i = 0; i < n; ++i) {
    t.at(i, n, i) = one;
    t.at(n, i, i) = one;
  }
  t.at(n, n, n) = one;
  std::vector<std::string> labels;
  if (a.has_labels()) {
    labels = a.labels();
    labels.push_back("1");
  }
  Matrix emb(f, n + 1, n);
  for (std::size_t i = 0; i < n; ++i) emb(i, i) = one;
  return {Algebra(std::move(t), std::move(labels)), std::move(emb), unit_element(f, n + 1, n)};
}

Subspace ac_unitalized_by_eigenspaces(const Algebra& a) {
  const Field f = a.field();
  const std::size_t n = a.dim();
  const Subspace zn = meet(center(a), nucleus(a));
  RowReducer red(f, n + 1);
  for (const auto& w : orthogonal(zn).vectors()) red.add(concat(w, {Scalar::zero(f)}));
  for (const auto& x : span_of(a, SpanKind::associators).vectors()) {
    const LinearMap rx = right_op(a, x);
    for (std::size_t m = 0; m < n; ++m) red.add(concat(rx.row(m), {x[m]}));
  }
  const Subspace result = red.kernel();

  const Unitalization u = unitalize(a);
  if (!(result == ac_two_sided(u.algebra))) {
    throw InternalCheckFailure("eigenspace form disagrees with the two-sided formula on the unitalization");
  }
  const Subspace hun = hu_n(a, Side::two_sided);
  const Subspace last_zero = kernel(Matrix::from_rows(f, n + 1, {unit_element(f, n + 1, n)}));
  if (!(meet(result, last_zero) == image(u.embedding, hun))) {
    throw InternalCheckFailure("kernel of the projection to the scalar part differs from HU_n");
  }
  const auto vs = result.vectors();
  for (std::size_t p = 0; p < vs.size(); ++p)
    for (std::size_t q = p + 1; q < vs.size(); ++q) {
      // (a, l), (b, m): l b - m a must lie in HU_n.
      const Element comb = sub(scale(vs[p][n], head(vs[q], n)), scale(vs[q][n], head(vs[p], n)));
      if (!hun.contains(comb)) throw InternalCheckFailure("combination rule fails for a basis pair");
    }
  return result;
}

HomAlgebra yau_twist(const Algebra& a, const LinearMap& alpha) {
  if (alpha.rows() != a.dim() || alpha.cols() != a.dim()) throw DimensionMismatch("twist shape");
  StructureTensor t(a.field(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) t.set_product(i, j, alpha.apply(basis_product(a, i, j)));
  return HomAlgebra(Algebra(std::move(t), a.has_labels() ? a.labels() : std::vector<std::string>{}), alpha);
}

TripleCheck yau_criterion(const Algebra& a, const LinearMap& alpha) {
  const HomAlgebra twisted = yau_twist(a, alpha);
  const std::size_t n = a.dim();
  TripleCheck out;
  for (std::size_t i = 0; i < n && out.holds; ++i)
    for (std::size_t j = 0; j < n && out.holds; ++j)
      for (std::size_t k = 0; k < n && out.holds; ++k) {
        const Element lhs = multiply(a, alpha.apply(basis_product(a, i, j)), alpha.column(k));
        const Element rhs = multiply(a, alpha.column(i), alpha.apply(basis_product(a, j, k)));
        if (!is_zero(alpha.apply(sub(lhs, rhs)))) out = {false, Triple{i, j, k}};
      }
  const TripleCheck direct = is_hom_associative(twisted);
  if (direct.holds != out.holds || direct.witness != out.witness) {
    throw InternalCheckFailure("criterion and direct hom-associativity disagree");
  }
  return out;
}

Algebra opposite(const Algebra& a) {
  StructureTensor t(a.field(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k) t.at(i, j, k) = a.coeff(j, i, k);
  return Algebra(std::move(t), a.has_labels() ? a.labels() : std::vector<std::string>{});
}

Algebra truncated_poly(std::size_t degree_cap, bool with_constants) {
  if (degree_cap < 1) throw PreconditionViolated("degree cap must be at least 1");
  const Field f = Field::rational();
  const std::size_t low = with_constants ? 0 : 1;
  const std::size_t n = degree_cap + 1 - low;
  StructureTensor t(f, n);
  std::vector<std::string> labels;
  for (std::size_t a = low; a <= degree_cap; ++a) {
    labels.push_back("t^" + std::to_string(a));
    for (std::size_t b = low; b <= degree_cap; ++b) {
      if (a + b <= degree_cap) t.at(a - low, b - low, a + b - low) = Scalar::one(f);
    }
  }
  return Algebra(std::move(t), std::move(labels));
}

std::vector<Scalar> default_pool(Field f) {
  std::vector<long long> v{0, 0, 0, 0, 1};
  if (f.is_rational()) {
    v.push_back(-1);
    v.push_back(2);
  } else {
    if (f.characteristic() > 2) v.push_back(-1);
    if (f.characteristic() > 3) v.push_back(2);
  }
  std::vector<Scalar> pool;
  for (auto x : v) pool.push_back(Scalar::from_int(f, x));
  return pool;
}

Algebra random_algebra(const GeneratorConfig& cfg) {
  if (cfg.anticommutative && (cfg.force_left_unital || cfg.commutative)) {
    throw PreconditionViolated("anticommutative cannot be combined with left-unital or commutative");
  }
  const Field f = cfg.field;
  const std::size_t n = cfg.dim;
  std::vector<Scalar> pool = cfg.pool.empty() ? std::vector<Scalar>{Scalar::zero(f)} : cfg.pool;
  for (const auto& s : pool) {
    if (!(s.field() == f)) throw FieldMismatch("pool scalar over " + s.field().to_string());
  }
  std::mt19937_64 rng(cfg.seed);
  StructureTensor t(f, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (cfg.force_left_unital && i == 0) {
          t.at(i, j, k) = j == k ? Scalar::one(f) : Scalar::zero(f);
        } else if (cfg.commutative && j < i) {
          t.at(i, j, k) = t.at(j, i, k);
        } else if (cfg.anticommutative && j <= i) {
          t.at(i, j, k) = j == i ? Scalar::zero(f) : -t.at(j, i, k);
        } else {
          t.at(i, j, k) = pool[rng() % pool.size()];
        }
      }
  return Algebra(std::move(t));
}

Element random_element(Field f, std::size_t n, std::mt19937_64& rng) {
  Element v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(Scalar::from_int(f, static_cast<long long>(rng() % 5) - 2));
  return v;
}

Matrix random_matrix(Field f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Scalar::from_int(f, static_cast<long long>(rng() % 5) - 2);
  return m;
}

}  // namespace homalg
