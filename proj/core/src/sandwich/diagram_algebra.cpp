#include "greenbox/sandwich/diagram_algebra.hpp"

#include "greenbox/error.hpp"

#include <algorithm>

namespace greenbox::sandwich {

using diagrams::Label;

std::string Delta::to_string() const { return value ? arith::to_string(*value) : "generic"; }

Delta parse_delta(const std::string& text) {
    if (text == "generic" || text == "d" || text == "delta") return Delta::generic();
    return Delta::at(arith::parse_rational(text));
}

int DiagramBasis::index_of(const PartitionDiagram& d) const {
    auto it = index.find(d);
    return it == index.end() ? -1 : it->second;
}

DiagramBasisPtr diagram_basis(Family f, int n) {
    auto b = std::make_shared<DiagramBasis>();
    b->family = f;
    b->n = n;
    b->elements = diagrams::enumerate(f, n);
    b->index.reserve(b->elements.size());
    for (size_t i = 0; i < b->elements.size(); ++i) b->index.emplace(b->elements[i], static_cast<int>(i));
    return b;
}

namespace {

// Identity on every strand except those listed in special, plus extra blocks.
PartitionDiagram local(int n, const std::vector<int>& special, std::vector<std::vector<Label>> blocks) {
    for (int k = 0; k < n; ++k)
        if (std::find(special.begin(), special.end(), k) == special.end())
            blocks.push_back({Label{false, k}, Label{true, k}});
    return PartitionDiagram::make(n, blocks);
}

Label b(int i) { return Label{false, i}; }
Label t(int i) { return Label{true, i}; }

}  // namespace

std::vector<PartitionDiagram> monoid_generators(Family f, int n) {
    std::vector<PartitionDiagram> cand{PartitionDiagram::identity(n)};
    for (int i = 0; i < n; ++i) cand.push_back(local(n, {i}, {{b(i)}, {t(i)}}));
    for (int i = 0; i + 1 < n; ++i) {
        const std::vector<int> s{i, i + 1};
        cand.push_back(local(n, s, {{b(i), t(i + 1)}, {b(i + 1), t(i)}}));
        cand.push_back(local(n, s, {{b(i), b(i + 1)}, {t(i), t(i + 1)}}));
        cand.push_back(local(n, s, {{b(i), b(i + 1), t(i), t(i + 1)}}));
        cand.push_back(local(n, s, {{b(i + 1), t(i)}, {b(i)}, {t(i + 1)}}));
        cand.push_back(local(n, s, {{b(i), t(i + 1)}, {b(i + 1)}, {t(i)}}));
        cand.push_back(local(n, s, {{b(i), b(i + 1), t(i)}, {t(i + 1)}}));
        cand.push_back(local(n, s, {{b(i), b(i + 1), t(i + 1)}, {t(i)}}));
    }
    std::vector<PartitionDiagram> out;
    for (const auto& g : cand)
        if (diagrams::in_family(g, f) && std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
    return out;
}

cells::BasedAlgebra diagram_algebra(const DiagramBasisPtr& basis, const Delta& delta) {
    cells::BasedAlgebra alg;
    alg.size = basis->elements.size();
    alg.ring = delta.is_generic() ? cells::RingTag::PolyDelta : cells::RingTag::RationalDelta;
    // At delta = 0 a generator word can vanish while the element it spells
    // does not, so generator paths miss part of the preorder.
    const bool loop_free = diagrams::is_transformation_family(basis->family) ||
                           basis->family == Family::Symmetric || basis->family == Family::PlanarSymmetric;
    alg.nonneg_structure_constants = delta.is_generic() || sgn(*delta.value) > 0 || loop_free;
    alg.multiply = [basis, delta](int i, int j) -> cells::SparseVec {
        auto p = diagrams::multiply(basis->elements[static_cast<size_t>(i)], basis->elements[static_cast<size_t>(j)]);
        int k = basis->index_of(p.diagram);
        if (k < 0) throw VerificationFailure("diagram family not closed under multiplication");
        if (delta.is_generic()) return {cells::Term{arith::IntPoly::monomial(arith::Integer(1), p.closed), k}};
        Rational c = 1;
        for (int r = 0; r < p.closed; ++r) c *= *delta.value;
        if (sgn(c) == 0) return {};
        return {cells::Term{c, k}};
    };
    for (const auto& g : monoid_generators(basis->family, basis->n)) alg.generators.push_back(basis->index_of(g));
    if (diagrams::is_involutive(basis->family)) {
        std::vector<int> st(alg.size);
        for (size_t i = 0; i < alg.size; ++i) st[i] = basis->index_of(basis->elements[i].star());
        alg.star = st;
    }
    for (const auto& d : basis->elements) alg.names.push_back(d.to_text());
    return alg;
}

}  // namespace greenbox::sandwich
