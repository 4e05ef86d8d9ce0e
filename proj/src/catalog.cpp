#include "homalg/catalog.hpp"

#include "homalg/error.hpp"
#include "homalg/leibniz.hpp"

namespace homalg {

namespace {

struct Entry {
  std::size_t i, j, k;
  long long c;
};

Algebra build(Field f, std::size_t n, std::initializer_list<Entry> entries, std::vector<std::string> labels = {}) {
  StructureTensor t(f, n);
  for (const auto& e : entries) t.at(e.i, e.j, e.k) = Scalar::from_int(f, e.c);
  return Algebra(std::move(t), std::move(labels));
}

}  // namespace

Algebra leib2(Field f) { return build(f, 2, {{1, 1, 0, 1}}, {"x", "y"}); }

Algebra left_leibniz_yx() { return build(Field::rational(), 2, {{1, 0, 0, 1}}, {"x", "y"}); }

Algebra matrix_algebra_2(Field f) {
  StructureTensor t(f, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) t.at(2 * i + j, 2 * j + k, 2 * i + k) = Scalar::one(f);
  return Algebra(std::move(t), {"E11", "E12", "E21", "E22"});
}

Algebra upper_triangular_2(Field f) {
  return build(f, 3, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 2, 1, 1}, {2, 2, 2, 1}}, {"E11", "E12", "E22"});
}

Algebra left_unital_p2(Field f) { return build(f, 2, {{0, 0, 0, 1}, {0, 1, 1, 1}}, {"p", "q"}); }

Algebra zero_algebra_2(Field f) { return Algebra::zero(f, 2); }

Algebra cross_product_algebra() {
  return build(Field::rational(), 3,
               {{0, 1, 2, 1}, {1, 0, 2, -1}, {1, 2, 0, 1}, {2, 1, 0, -1}, {2, 0, 1, 1}, {0, 2, 1, -1}});
}

Algebra sl2() {
  return build(Field::rational(), 3,
               {{0, 1, 1, 2}, {1, 0, 1, -2}, {0, 2, 2, -2}, {2, 0, 2, 2}, {1, 2, 0, 1}, {2, 1, 0, -1}},
               {"h", "e", "f"});
}

Algebra heisenberg() { return build(Field::rational(), 3, {{0, 1, 2, 1}, {1, 0, 2, -1}}, {"x", "y", "z"}); }

Algebra leibniz_char2_example() {
  return build(Field::prime(2), 3, {{0, 1, 2, 1}, {1, 0, 2, 1}, {1, 2, 2, 1}, {2, 1, 2, 1}}, {"a", "y", "z"});
}

std::vector<Algebra> leibniz_dim2_exhaustive(Field f) {
  if (f.is_rational()) throw PreconditionViolated("exhaustive enumeration needs a prime field");
  const std::uint64_t p = f.characteristic();
  std::uint64_t total = 1;
  for (int i = 0; i < 8; ++i) total *= p;
  if (total > (1u << 20)) throw SearchSpaceTooLarge("p^8 structures");
  std::vector<Algebra> out;
  for (std::uint64_t code = 0; code < total; ++code) {
    StructureTensor t(f, 2);
    std::uint64_t c = code;
    for (std::size_t idx = 0; idx < 8; ++idx, c /= p) {
      t.at(idx / 4, (idx / 2) % 2, idx % 2) = Scalar::from_int(f, static_cast<long long>(c % p));
    }
    Algebra a(std::move(t));
    if (is_leibniz(a)) out.push_back(std::move(a));
  }
  return out;
}

}  // namespace homalg
