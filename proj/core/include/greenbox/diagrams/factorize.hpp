#pragma once

#include "greenbox/diagrams/family.hpp"
#include "greenbox/diagrams/partition_diagram.hpp"

#include <vector>

namespace greenbox::diagrams {

// a = top o middle o bottom, where bottom: n -> lambda keeps the bottom
// half of a, top: lambda -> n keeps the top half, and middle permutes the
// through strands. Strand k of bottom is the through block of rank k by
// least bottom label; strand k of top is the through block of rank k by
// least top label; middle[i] is the top rank of the block of bottom rank i.
struct Factorization {
    PartitionDiagram top;
    std::vector<int> middle;
    PartitionDiagram bottom;
    int through = 0;
};

Factorization factorize(const PartitionDiagram& a);
Factorization factorize(const PartitionDiagram& a, Family f);
PartitionDiagram recompose(const Factorization& f);

// Permutation diagram on k strands: bottom i joins top perm[i] (0-based).
PartitionDiagram permutation_diagram(const std::vector<int>& perm);

PartitionDiagram bottom_half(const PartitionDiagram& a);
PartitionDiagram top_half(const PartitionDiagram& a);

// Distinct bottom halves (n -> lambda) and top halves (lambda -> n) of the
// family members with lambda through strands, in canonical order.
std::vector<PartitionDiagram> bottom_halves(Family f, int n, int lambda);
std::vector<PartitionDiagram> top_halves(Family f, int n, int lambda);

// Through-strand counts that occur in the family on n strands, ascending.
std::vector<int> through_counts(Family f, int n);

}  // namespace greenbox::diagrams
