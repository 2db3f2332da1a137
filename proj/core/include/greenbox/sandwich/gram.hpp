#pragma once

#include "greenbox/arith/matrix.hpp"
#include "greenbox/sandwich/diagram_algebra.hpp"
#include "greenbox/symgroup/permutation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace greenbox::sandwich {

using arith::IntPoly;
using arith::PolyMatrix;
using arith::RatMatrix;
using symgroup::Permutation;

// Left-cell keys are bottom halves (n -> lambda), right-cell keys are top
// halves (lambda -> n).
struct CellKeys {
    Family family{};
    int n = 0;
    int lambda = 0;
    std::vector<PartitionDiagram> left;
    std::vector<PartitionDiagram> right;
};

CellKeys cell_keys(Family f, int n, int lambda);

// Product of a bottom half stacked above a top half: d^closed times the
// permutation perm of the lambda strands, or nothing when strands are lost.
struct Pairing {
    int closed = 0;
    Permutation perm;
};

std::optional<Pairing> pairing_element(const PartitionDiagram& top_half, const PartitionDiagram& bottom_half);

struct GramMatrix {
    int lambda = 0;
    PolyMatrix matrix;  // rows: right cells, columns: left cells
};

GramMatrix gram_matrix(Family f, int n, int lambda);

std::size_t gram_rank(const GramMatrix& g, const Delta& delta);
std::size_t gram_rank(Family f, int n, int lambda, const Delta& delta);
IntPoly gram_determinant(const GramMatrix& g);

enum class SandwichKind { Trivial, SymmetricGroup };

struct SandwichedAlgebra {
    SandwichKind kind = SandwichKind::Trivial;
    int degree = 0;  // lambda for the symmetric group
    std::string to_string() const;
};

// Builds the H-cell of a strict idempotent modulo the higher ideal and checks
// that it is a group isomorphic to S_lambda via the middle permutation, or
// trivial.
SandwichedAlgebra sandwiched_algebra(Family f, int n, int lambda, const Delta& delta = Delta::generic());

// Through-strand counts whose J-cell is idempotent at delta, bottom (lambda = n) first.
std::vector<int> apexes(Family f, int n, const Delta& delta);

// S_lambda is the sandwiched group for symmetric families, trivial for planar ones.
bool has_symmetric_sandwich(Family f, int lambda);

}  // namespace greenbox::sandwich
