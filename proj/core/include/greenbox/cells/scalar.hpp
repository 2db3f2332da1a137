#pragma once

#include "greenbox/arith/laurent.hpp"
#include "greenbox/arith/polynomial.hpp"

#include <string>
#include <variant>
#include <vector>

namespace greenbox::cells {

using arith::IntPoly;
using arith::LaurentInt;
using arith::Rational;

enum class RingTag {
    PolyDelta,      // Z[d], d generic
    RationalDelta,  // d specialized to a rational value
    Laurent,        // Z[v, v^-1]
    Rationals,      // Q
};

std::string ring_name(RingTag r);

using Scalar = std::variant<Rational, IntPoly, LaurentInt>;

bool is_zero(const Scalar& s);
std::string to_string(const Scalar& s);

struct Term {
    Scalar coeff;
    int index = 0;
};

using SparseVec = std::vector<Term>;

}  // namespace greenbox::cells
