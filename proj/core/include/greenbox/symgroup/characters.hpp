#pragma once

#include "greenbox/arith/matrix.hpp"
#include "greenbox/symgroup/partitions.hpp"
#include "greenbox/symgroup/permutation.hpp"

#include <vector>

namespace greenbox::symgroup {

using arith::Rational;

long mn_character(const YoungPartition& shape, const YoungPartition& cycle_type);

struct CharacterTable {
    int m = 0;
    std::vector<YoungPartition> shapes;   // rows
    std::vector<YoungPartition> classes;  // columns, cycle types
    std::vector<long> class_sizes;
    std::vector<std::vector<long>> values;
};

CharacterTable character_table(int m);

// Element of Q[S_m], coefficients indexed by permutation_index.
struct GroupAlgebraElement {
    int m = 0;
    std::vector<Rational> coeffs;

    static GroupAlgebraElement zero(int m);
    static GroupAlgebraElement basis(const Permutation& p);
    static GroupAlgebraElement one(int m) { return basis(Permutation::identity(m)); }

    bool is_zero() const;
    GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
    GroupAlgebraElement scaled(const Rational& s) const;
    friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
    friend GroupAlgebraElement operator-(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
    friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
    friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;
};

// e = (chi(1)/m!) sum_g chi(g^-1) g
GroupAlgebraElement central_idempotent(const YoungPartition& shape);

// Matrix of v -> v*x on Q[S_m] with row vectors indexed by permutation_index.
// rho(x*y) = rho(x)*rho(y).
arith::RatMatrix regular_representation(const GroupAlgebraElement& x);

// Row g, column h holds the index of g*h.
const std::vector<std::vector<int>>& multiplication_table(int m);

}  // namespace greenbox::symgroup
