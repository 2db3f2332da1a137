#pragma once

#include "greenbox/arith/integer.hpp"
#include "greenbox/arith/number_field.hpp"
#include "greenbox/arith/polynomial.hpp"
#include "greenbox/diagrams/family.hpp"

namespace greenbox::sandwich {

using arith::Integer;
using arith::IntPoly;
using diagrams::Family;

Integer stirling2(int n, int k);
Integer double_factorial(int n);  // (-1)!! = 1

// Number of left cells (bottom halves) and right cells (top halves) in the
// J-cell with lambda through strands, from closed formulas.
Integer count_left_cells(Family f, int n, int lambda);
Integer count_right_cells(Family f, int n, int lambda);

// Determinant of the Gram matrix at lambda = n - 2 for Brauer, Motzkin and
// rook-Brauer, as a closed formula in d.
IntPoly reference_det_formula(Family f, int n);

inline constexpr int kInfinite = -1;

// Minimal l >= 0 with U_{l+1}(delta) = 0, or kInfinite.
int chebyshev_l(const arith::Rational& delta);
int chebyshev_l(const arith::NumberFieldElem& delta);

// Rank of the Temperley-Lieb Gram matrix from (l, p)-adic digit data:
// l as above (kInfinite for none), p the characteristic (0 for zero).
// The quantum characteristic is l + 2; ranks are the multiplicities of the
// tilting summands of the n-fold tensor power, whose Weyl factors are read
// off the digit expansion.
Integer tl_rank_closed_form(int n, int lambda, int l, int p);

}  // namespace greenbox::sandwich
