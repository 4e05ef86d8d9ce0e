#include "homalg/subspaces.hpp"

#include <algorithm>

#include "homalg/error.hpp"

namespace homalg {

namespace {

void check_ambient(const Algebra& a, const Subspace& s) {
  if (s.ambient_dim() != a.dim()) {
    throw DimensionMismatch("subspace of F^" + std::to_string(s.ambient_dim()) + " in a " +
                            std::to_string(a.dim()) + "-dimensional algebra");
  }
}

void add_rows(RowReducer& red, const Matrix& m) {
  for (std::size_t r = 0; r < m.rows() && !red.full_rank(); ++r) red.add(m.row(r));
}

// ---- rational root search for the two-parameter idempotent system

using Poly = std::vector<mpq_class>;  // coefficient of t^i at index i

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), mpq_class(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return a;
}

bool poly_is_zero(const Poly& p) {
  return std::all_of(p.begin(), p.end(), [](const mpq_class& c) { return sgn(c) == 0; });
}

mpq_class poly_eval(const Poly& p, const mpq_class& t) {
  mpq_class r(0);
  for (std::size_t i = p.size(); i-- > 0;) r = r * t + p[i];
  return r;
}

std::vector<mpz_class> divisors(mpz_class v) {
  v = abs(v);
  if (v > mpz_class("1000000000000")) {
    throw UnsupportedDimensionOverQ("coefficients too large for the rational root search");
  }
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      if (d * d != v) out.push_back(v / d);
    }
  }
  return out;
}

std::vector<mpq_class> rational_roots(Poly p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
  std::vector<mpq_class> roots;
  if (p.empty()) return roots;
  mpz_class den = 1;
  for (const auto& c : p) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> z;
  for (const auto& c : p) z.push_back(mpz_class(c * den));
  std::size_t low = 0;
  while (z[low] == 0) ++low;
  if (low > 0) roots.push_back(mpq_class(0));
  if (low + 1 == z.size()) return roots;
  for (const auto& num : divisors(z[low]))
    for (const auto& d : divisors(z.back()))
      for (int s : {1, -1}) {
        mpq_class t(num * s, d);
        t.canonicalize();
        if (sgn(poly_eval(p, t)) == 0 && std::find(roots.begin(), roots.end(), t) == roots.end()) {
          roots.push_back(t);
        }
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<Element> idempotents_on_line(const Algebra& a, const Element& u) {
  // (l u)^2 = l u with l != 0  <=>  l (u u) = u.
  std::vector<Element> out;
  const Element uu = multiply(a, u, u);
  for (std::size_t k = 0; k < uu.size(); ++k) {
    if (uu[k].is_zero()) continue;
    const Scalar l = u[k] / uu[k];
    if (!l.is_zero() && scale(l, uu) == u) out.push_back(scale(l, u));
    break;
  }
  return out;
}

std::vector<Element> idempotents_rational(const Algebra& a, const Subspace& within) {
  const Field q = a.field();
  std::vector<Element> out{zero_element(q, a.dim())};
  if (within.dim() == 0) return out;
  const Element u = within.vector(0);
  for (auto& e : idempotents_on_line(a, u)) out.push_back(std::move(e));
  if (within.dim() == 1) return out;

  // x = l u + m w with m != 0; write l = t m. Then for every coordinate k,
  // m P_k(t) = Q_k(t) with P_k = A_k t^2 + B_k t + C_k and Q_k = u_k t + w_k.
  const Element w = within.vector(1);
  const Element A = multiply(a, u, u);
  const Element B = add(multiply(a, u, w), multiply(a, w, u));
  const Element C = multiply(a, w, w);
  const std::size_t n = a.dim();
  std::vector<Poly> P(n), Q(n);
  for (std::size_t k = 0; k < n; ++k) {
    P[k] = {C[k].rational(), B[k].rational(), A[k].rational()};
    Q[k] = {w[k].rational(), u[k].rational()};
  }
  Poly cross;
  for (std::size_t k = 0; k < n && cross.empty(); ++k)
    for (std::size_t l = k + 1; l < n; ++l) {
      Poly c = poly_sub(poly_mul(P[k], Q[l]), poly_mul(P[l], Q[k]));
      if (!poly_is_zero(c)) {
        cross = std::move(c);
        break;
      }
    }
  if (cross.empty()) {
    const bool p_zero = std::all_of(P.begin(), P.end(), poly_is_zero);
    // P == 0 would force t u + w = 0; otherwise every t off the zeros of P works.
    if (p_zero) return out;
    throw UnsupportedDimensionOverQ("the idempotent set is infinite");
  }
  for (const auto& t : rational_roots(cross)) {
    std::size_t k = 0;
    while (k < n && sgn(poly_eval(P[k], t)) == 0) ++k;
    if (k == n) continue;
    const mpq_class m = poly_eval(Q[k], t) / poly_eval(P[k], t);
    if (sgn(m) == 0) continue;
    const Element x = add(scale(Scalar::from_rational(t * m), u), scale(Scalar::from_rational(m), w));
    if (is_idempotent_elem(a, x)) out.push_back(x);
  }
  return out;
}

std::vector<Element> idempotents_prime(const Algebra& a, const Subspace& within, std::uint64_t cap) {
  const Field f = a.field();
  const std::uint64_t p = f.characteristic();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < within.dim(); ++i) {
    if (total > cap / p) {
      throw SearchSpaceTooLarge(std::to_string(p) + "^" + std::to_string(within.dim()) + " exceeds the cap " +
                                std::to_string(cap));
    }
    total *= p;
  }
  std::vector<Element> out;
  std::vector<std::uint64_t> digits(within.dim(), 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<Scalar> coeffs;
    for (auto d : digits) coeffs.push_back(Scalar::from_int(f, static_cast<long long>(d)));
    const Element x = within.combine(coeffs);
    if (is_idempotent_elem(a, x)) out.push_back(x);
    for (std::size_t i = digits.size(); i-- > 0;) {
      if (++digits[i] < p) break;
      digits[i] = 0;
    }
  }
  return out;
}

}  // namespace

std::string to_string(Side s) {
  switch (s) {
    case Side::left:
      return "left";
    case Side::right:
      return "right";
    case Side::two_sided:
      return "two_sided";
  }
  return "?";
}

Side parse_side(const std::string& text) {
  if (text == "left") return Side::left;
  if (text == "right") return Side::right;
  if (text == "two" || text == "two_sided") return Side::two_sided;
  throw PreconditionViolated("unknown side '" + text + "'");
}

Subspace centralizer(const Algebra& a, const Subspace& s) {
  check_ambient(a, s);
  RowReducer red(a.field(), a.dim());
  for (const auto& b : s.vectors()) add_rows(red, right_op(a, b) - left_op(a, b));
  return red.kernel();
}

Subspace center(const Algebra& a) { return centralizer(a, Subspace::full(a.field(), a.dim())); }

Subspace nucleus(const Algebra& a, Slot slot, const Subspace& relative_to) {
  check_ambient(a, relative_to);
  const auto vs = relative_to.vectors();
  std::vector<LinearMap> L, R;
  for (const auto& v : vs) {
    L.push_back(left_op(a, v));
    R.push_back(right_op(a, v));
  }
  RowReducer red(a.field(), a.dim());
  const bool all = slot == Slot::full;
  for (std::size_t s = 0; s < vs.size(); ++s)
    for (std::size_t t = 0; t < vs.size(); ++t) {
      if (red.full_rank()) break;
      const Element st = multiply(a, vs[s], vs[t]);
      // [v,s,t] = (R_t R_s - R_st) v
      if (all || slot == Slot::left) add_rows(red, R[t] * R[s] - right_op(a, st));
      // [s,v,t] = (R_t L_s - L_s R_t) v
      if (all || slot == Slot::middle) add_rows(red, R[t] * L[s] - L[s] * R[t]);
      // [s,t,v] = (L_st - L_s L_t) v
      if (all || slot == Slot::right) add_rows(red, left_op(a, st) - L[s] * L[t]);
    }
  return red.kernel();
}

Subspace nucleus(const Algebra& a, Slot slot) { return nucleus(a, slot, Subspace::full(a.field(), a.dim())); }

Subspace annihilator(const Algebra& a, const Subspace& s, Side side) {
  check_ambient(a, s);
  RowReducer red(a.field(), a.dim());
  for (const auto& b : s.vectors()) {
    if (side != Side::right) add_rows(red, right_op(a, b));
    if (side != Side::left) add_rows(red, left_op(a, b));
  }
  return red.kernel();
}

Subspace annihilator(const Algebra& a, Side side) {
  return annihilator(a, Subspace::full(a.field(), a.dim()), side);
}

Subspace span_of(const Algebra& a, SpanKind kind) {
  const std::size_t n = a.dim();
  RowReducer red(a.field(), n);
  std::vector<Element> prod(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) prod[i * n + j] = basis_product(a, i, j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (kind == SpanKind::products) {
        red.add(prod[i * n + j]);
      } else if (kind == SpanKind::commutators) {
        red.add(sub(prod[i * n + j], prod[j * n + i]));
      } else {
        for (std::size_t k = 0; k < n && !red.full_rank(); ++k) {
          red.add(sub(multiply(a, prod[i * n + j], a.basis(k)), multiply(a, a.basis(i), prod[j * n + k])));
        }
      }
    }
  return red.row_space();
}

AffineSet find_unities(const Algebra& a, Side side) {
  const std::size_t n = a.dim();
  const Field f = a.field();
  std::vector<Element> rows;
  Element rhs;
  auto emit = [&](bool left) {
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Element row = zero_element(f, n);
        for (std::size_t i = 0; i < n; ++i) row[i] = left ? a.coeff(i, j, k) : a.coeff(j, i, k);
        rows.push_back(std::move(row));
        rhs.push_back(j == k ? Scalar::one(f) : Scalar::zero(f));
      }
  };
  if (side != Side::right) emit(true);
  if (side != Side::left) emit(false);
  return solve_affine(Matrix::from_rows(f, n, rows), rhs);
}

std::vector<Element> idempotents(const Algebra& a, const Subspace& within, std::uint64_t cap) {
  check_ambient(a, within);
  if (a.field().is_rational()) {
    if (within.dim() > 2) {
      throw UnsupportedDimensionOverQ("idempotent search over Q needs dim <= 2, got " +
                                      std::to_string(within.dim()));
    }
    return idempotents_rational(a, within);
  }
  return idempotents_prime(a, within, cap);
}

}  // namespace homalg
