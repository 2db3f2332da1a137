#pragma once

#include "greenbox/sandwich/gram.hpp"
#include "greenbox/symgroup/partitions.hpp"

#include <optional>
#include <string>
#include <vector>

namespace greenbox::sandwich {

using symgroup::YoungPartition;

// Largest lambda for which dimensions through S_lambda are computed.
inline constexpr int kMaxSandwichDegree = 6;

// Stand-in value of delta for dimension computations in generic mode.
Rational generic_surrogate(int n);

// Rank of rho_reg(B * e_chi) where B is the sandwich matrix over Q[S_lambda]
// with entries delta^k * pi from the pairings, e_chi the central idempotent
// and rho_reg the right regular representation. Delta must be rational.
std::size_t sandwich_rank(Family f, int n, int lambda, const YoungPartition& chi, const Rational& delta);

// The same rank built literally from full regular-representation blocks
// (lambda <= 4); used to cross-check the compressed computation.
std::size_t sandwich_rank_regular(Family f, int n, int lambda, const YoungPartition& chi, const Rational& delta);

// Dimension of the simple module with apex lambda and label chi in
// characteristic 0. chi is ignored when the sandwiched algebra is trivial.
std::size_t simple_dimension(Family f, int n, int lambda, const YoungPartition& chi, const Delta& delta);

// Independent check: the form on the cell module built from left-cell keys
// tensored with the Specht module realized by a Young symmetrizer, computed
// from raw diagram products.
std::size_t oracle_simple_dimension(Family f, int n, int lambda, const YoungPartition& chi, const Delta& delta);

struct SimpleModule {
    int apex = 0;
    std::string label;               // "(2,1)" or "unit"
    std::optional<std::size_t> dim;  // empty when only counted
};

struct SimpleTable {
    Family family{};
    int n = 0;
    Delta delta;
    std::vector<int> apexes;
    std::vector<SimpleModule> simples;  // bottom apex first
};

SimpleTable simple_table(Family f, int n, const Delta& delta);

// Number of simple modules per apex in characteristic p (0 for infinity):
// p-restricted partitions of lambda for symmetric families, one for planar.
std::vector<std::pair<int, std::size_t>> simple_count(Family f, int n, const Delta& delta, int p);

struct Semisimplicity {
    bool semisimple = false;
    bool all_idempotent = false;
    arith::Integer sum_of_squares;
    std::size_t algebra_dimension = 0;
};

Semisimplicity semisimplicity_check(Family f, int n, const Rational& delta);

}  // namespace greenbox::sandwich
