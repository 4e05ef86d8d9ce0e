#include "homalg/leibniz.hpp"

#include "homalg/constructions.hpp"
#include "homalg/error.hpp"
#include "homalg/homstruct.hpp"

namespace homalg {

TripleCheck leibniz_check(const Algebra& a, Side side, const std::optional<LinearMap>& twist) {
  if (side == Side::two_sided) throw PreconditionViolated("Leibniz identities are one-sided");
  const std::size_t n = a.dim();
  const LinearMap al = twist ? *twist : Matrix::identity(a.field(), n);
  if (al.rows() != n || al.cols() != n) throw DimensionMismatch("twist shape");
  auto br = [&](const Element& x, const Element& y) { return multiply(a, x, y); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Element x = a.basis(i), y = a.basis(j), z = a.basis(k);
        bool ok;
        if (side == Side::left) {
          ok = br(al.apply(x), br(y, z)) == add(br(br(x, y), al.apply(z)), br(al.apply(y), br(x, z)));
        } else {
          ok = br(br(x, y), al.apply(z)) == add(br(br(x, z), al.apply(y)), br(al.apply(x), br(y, z)));
        }
        if (!ok) return {false, Triple{i, j, k}};
      }
  return {};
}

bool is_leibniz(const Algebra& a) {
  return leibniz_check(a, Side::left).holds || leibniz_check(a, Side::right).holds;
}

Subspace nested_product_span(const Algebra& a, Side outer) {
  const std::size_t n = a.dim();
  std::vector<Element> vs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        vs.push_back(outer == Side::left ? multiply(a, a.basis(i), basis_product(a, j, k))
                                         : multiply(a, basis_product(a, i, j), a.basis(k)));
      }
  return Subspace::span(a.field(), n, vs);
}

bool is_three_nilpotent(const Algebra& a, const Element& v) {
  const std::size_t n = a.dim();
  auto br = [&](const Element& x, const Element& y) { return multiply(a, x, y); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Element x = a.basis(i), y = a.basis(j);
      if (!is_zero(br(br(v, x), y)) || !is_zero(br(br(x, v), y)) || !is_zero(br(br(x, y), v)) ||
          !is_zero(br(v, br(x, y))) || !is_zero(br(x, br(v, y))) || !is_zero(br(x, br(y, v)))) {
        return false;
      }
    }
  return true;
}

Subspace hu_n_leibniz(const Algebra& a) {
  if (!is_leibniz(a)) throw NotLeibniz("neither left nor right Leibniz");
  const Subspace c = center(a);
  const Subspace prods = span_of(a, SpanKind::products);
  const Subspace result = meet(c, annihilator(a, prods, Side::left));
  if (!(result == meet(c, annihilator(a, prods, Side::right))) ||
      !(result == meet(c, annihilator(a, prods, Side::two_sided)))) {
    throw InternalCheckFailure("one-sided annihilator variants differ");
  }
  const Subspace hut = hu_t(a, Side::left);
  for (std::size_t i = 0; i < result.dim(); ++i) {
    const Element v = result.vector(i);
    if (!is_three_nilpotent(a, v)) {
      throw InternalCheckFailure("basis vector " + std::to_string(i) + " has a nonzero triple product");
    }
    if (!hut.contains(v)) throw InternalCheckFailure("basis vector " + std::to_string(i) + " is not in hu_t");
  }
  return result;
}

CheckList unitality_collapse_check(const Algebra& a) {
  CheckList out;
  const std::string name = "unity collapses the product";
  if (!is_leibniz(a)) {
    out.skip(name, "not Leibniz");
  } else if (find_unities(a, Side::left).empty && find_unities(a, Side::right).empty) {
    out.pass(name, "vacuous: no unity");
  } else {
    out.expect(is_zero_product(a), name);
  }
  return out;
}

CheckList crossed_unitality_check(const HomAlgebra& h) {
  CheckList out;
  const Algebra& a = h.base();
  const LinearMap& al = h.twist();
  const std::vector<std::string> names = {"right hom-Leibniz, left unity: alpha(1) in Ann^r",
                                          "left hom-Leibniz, right unity: alpha(1) in Ann^l",
                                          "right hom-Leibniz, right unity: alpha = 0",
                                          "left hom-Leibniz, left unity: alpha = 0",
                                          "left unity, right hom-Leibniz: alpha = 0",
                                          "right unity, left hom-Leibniz: alpha = 0"};
  if (!is_hom_associative(h).holds) {
    for (const auto& n : names) out.skip(n, "not hom-associative");
    return out;
  }
  const AffineSet lu = find_unities(a, Side::left), ru = find_unities(a, Side::right);
  const bool lhl = leibniz_check(a, Side::left, al).holds, rhl = leibniz_check(a, Side::right, al).holds;
  auto gate = [&](bool hyp, const std::string& name, const std::string& why, auto conclusion) {
    if (hyp) {
      out.expect(conclusion(), name);
    } else {
      out.skip(name, why);
    }
  };
  // Every unity on a side, not just the particular one.
  auto all_unities = [](const AffineSet& s) {
    std::vector<Element> us{s.particular};
    for (const auto& d : s.direction.vectors()) us.push_back(add(s.particular, d));
    return us;
  };
  gate(rhl && !lu.empty, names[0], "hypotheses not met", [&] {
    const Subspace ann = annihilator(a, Side::right);
    for (const auto& u : all_unities(lu)) {
      if (!ann.contains(al.apply(u))) return false;
    }
    return true;
  });
  gate(lhl && !ru.empty, names[1], "hypotheses not met", [&] {
    const Subspace ann = annihilator(a, Side::left);
    for (const auto& u : all_unities(ru)) {
      if (!ann.contains(al.apply(u))) return false;
    }
    return true;
  });
  gate(rhl && !ru.empty, names[2], "hypotheses not met", [&] { return al.is_zero(); });
  gate(lhl && !lu.empty, names[3], "hypotheses not met", [&] { return al.is_zero(); });
  gate(rhl && !lu.empty, names[4], "hypotheses not met", [&] { return al.is_zero(); });
  gate(lhl && !ru.empty, names[5], "hypotheses not met", [&] { return al.is_zero(); });
  return out;
}

HomLieCheck hom_lie_check(const HomAlgebra& h) {
  const Algebra& a = h.base();
  const LinearMap& al = h.twist();
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_zero(basis_product(a, i, i))) return {false, "alternating", {i, i}};
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_zero(add(basis_product(a, i, j), basis_product(a, j, i)))) return {false, "skew-symmetry", {i, j}};
    }
  }
  auto br = [&](const Element& x, const Element& y) { return multiply(a, x, y); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Element x = a.basis(i), y = a.basis(j), z = a.basis(k);
        Element s = br(al.apply(x), br(y, z));
        axpy(s, Scalar::one(a.field()), br(al.apply(y), br(z, x)));
        axpy(s, Scalar::one(a.field()), br(al.apply(z), br(x, y)));
        if (!is_zero(s)) return {false, "hom-Jacobi", {i, j, k}};
      }
  return {};
}

HomAlgebra leibniz_yau_to_homlie(const Algebra& a, const Element& mult, const Element& w, Side side) {
  if (side == Side::two_sided) throw PreconditionViolated("side must be left or right");
  if (mult.size() != a.dim() || w.size() != a.dim()) throw DimensionMismatch("element length");
  const LinearMap al = side == Side::right ? left_op(a, mult) : right_op(a, mult);
  const Element fixed = side == Side::right ? multiply(a, mult, w) : multiply(a, w, mult);
  if (fixed != mult) {
    throw PreconditionViolated(side == Side::right ? "mult != [mult, w]" : "mult != [w, mult]");
  }
  if (!leibniz_check(a, side, al).holds) {
    throw PreconditionViolated(std::string("not ") + to_string(side) + " hom-Leibniz with this twist");
  }
  if (!is_multiplicative(HomAlgebra(a, al))) throw PreconditionViolated("twist is not multiplicative");
  const HomAlgebra twisted = yau_twist(a, al);
  HomAlgebra out(twisted.base(), al * al);
  const HomLieCheck lie = hom_lie_check(out);
  if (!lie.holds) throw InternalCheckFailure("Yau twist fails " + lie.failed);
  if (!is_multiplicative(out)) throw InternalCheckFailure("Yau twist is not multiplicative");
  return out;
}

}  // namespace homalg
