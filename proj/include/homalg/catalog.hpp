#pragma once

#include <string>
#include <vector>

#include "homalg/algebra.hpp"

namespace homalg {

/// Basis x, y with [y,y] = x and every other bracket zero.
Algebra leib2(Field f = Field::rational());
/// Basis x, y with [y,x] = x only; left Leibniz, not right Leibniz.
Algebra left_leibniz_yx();
/// 2x2 matrices, basis E11, E12, E21, E22.
Algebra matrix_algebra_2(Field f = Field::rational());
/// Upper triangular 2x2 matrices, basis E11, E12, E22.
Algebra upper_triangular_2(Field f = Field::rational());
/// Basis p, q with pp = p, pq = q: left unities p + span{q}, Ann^l = span{q}.
Algebra left_unital_p2(Field f = Field::rational());
/// Zero product on F^2.
Algebra zero_algebra_2(Field f = Field::rational());
/// Cross product on Q^3.
Algebra cross_product_algebra();
Algebra sl2();
/// [x,y] = z.
Algebra heisenberg();
/// Commutative, left and right Leibniz over F2 with a in C(L) meet Ann^l([L,L])
/// but [y,[a,y]] != 0.
Algebra leibniz_char2_example();

/// Every Leibniz (left or right) structure on F_p^2.
std::vector<Algebra> leibniz_dim2_exhaustive(Field f);

}  // namespace homalg
