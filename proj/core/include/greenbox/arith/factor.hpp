#pragma once

#include "greenbox/arith/polynomial.hpp"

#include <string>
#include <utility>
#include <vector>

namespace greenbox::arith {

struct Factorization {
    Integer unit{1};  // signed content
    std::vector<std::pair<IntPoly, int>> factors;

    IntPoly expand() const;
};

// Square-free decomposition of a primitive polynomial: pairs (g_i, i) with
// p = prod g_i^i, each g_i square-free and primitive.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p);

// Complete factorization over Q; degree at most 12.
Factorization factor_rational(const IntPoly& p);

// "(d-1)^4*(d+1)^4*(d^2-2)" style rendering.
std::string to_factored_string(const Factorization& f, const std::string& var = "d");
std::string factored_string(const IntPoly& p, const std::string& var = "d");

}  // namespace greenbox::arith
