#pragma once

#include "greenbox/arith/integer.hpp"
#include "greenbox/cells/based_algebra.hpp"
#include "greenbox/diagrams/family.hpp"

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace greenbox::sandwich {

using arith::Rational;
using diagrams::Family;
using diagrams::PartitionDiagram;

// Loop parameter: generic (polynomials in d) or a rational value.
struct Delta {
    std::optional<Rational> value;

    static Delta generic() { return {}; }
    static Delta at(const Rational& v) { return Delta{v}; }
    bool is_generic() const { return !value.has_value(); }
    std::string to_string() const;
};

// Accepts "generic", "d" or a rational number.
Delta parse_delta(const std::string& text);

struct DiagramBasis {
    Family family{};
    int n = 0;
    std::vector<PartitionDiagram> elements;
    std::unordered_map<PartitionDiagram, int> index;

    int index_of(const PartitionDiagram& d) const;
};

using DiagramBasisPtr = std::shared_ptr<const DiagramBasis>;

DiagramBasisPtr diagram_basis(Family f, int n);

// Small generating set of the monoid: adjacent transpositions, cups, isolated
// points, merges, shifts and collapses, as far as they belong to the family.
std::vector<PartitionDiagram> monoid_generators(Family f, int n);

// The diagram algebra on the family basis; a product with k closed
// components carries d^k (generic) or delta^k.
cells::BasedAlgebra diagram_algebra(const DiagramBasisPtr& basis, const Delta& delta);

}  // namespace greenbox::sandwich
