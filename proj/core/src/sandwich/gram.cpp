#include "greenbox/sandwich/gram.hpp"

#include "greenbox/diagrams/factorize.hpp"
#include "greenbox/error.hpp"
#include "greenbox/util/parallel.hpp"

#include <algorithm>
#include <map>

namespace greenbox::sandwich {

CellKeys cell_keys(Family f, int n, int lambda) {
    CellKeys k;
    k.family = f;
    k.n = n;
    k.lambda = lambda;
    k.left = diagrams::bottom_halves(f, n, lambda);
    if (diagrams::is_involutive(f)) {
        for (const auto& b : k.left) k.right.push_back(b.star());
    } else {
        k.right = diagrams::top_halves(f, n, lambda);
    }
    if (k.left.empty() || k.right.empty())
        throw InvalidInput("no J-cell with " + std::to_string(lambda) + " through strands for " + diagrams::tag(f) +
                           " on " + std::to_string(n) + " strands");
    return k;
}

std::optional<Pairing> pairing_element(const PartitionDiagram& top_half, const PartitionDiagram& bottom_half) {
    auto p = diagrams::multiply(bottom_half, top_half);
    const auto& d = p.diagram;
    int lambda = d.top_count();
    if (d.bottom_count() != lambda || d.through_strands() != lambda) return std::nullopt;
    std::vector<int> img(static_cast<size_t>(lambda));
    for (int i = 0; i < lambda; ++i)
        for (int j = 0; j < lambda; ++j)
            if (d.block_of(diagrams::Label{false, i}) == d.block_of(diagrams::Label{true, j})) img[static_cast<size_t>(i)] = j;
    return Pairing{p.closed, Permutation(img)};
}

GramMatrix gram_matrix(Family f, int n, int lambda) {
    auto keys = cell_keys(f, n, lambda);
    GramMatrix g;
    g.lambda = lambda;
    g.matrix = PolyMatrix(keys.right.size(), keys.left.size(), IntPoly());
    util::parallel_for(keys.right.size(), [&](size_t i) {
        for (size_t j = 0; j < keys.left.size(); ++j) {
            auto pe = pairing_element(keys.right[i], keys.left[j]);
            if (pe) g.matrix(i, j) = IntPoly::monomial(arith::Integer(1), pe->closed);
        }
    });
    return g;
}

std::size_t gram_rank(const GramMatrix& g, const Delta& delta) {
    if (delta.is_generic()) return arith::matrix_rank(g.matrix);
    return arith::matrix_rank(arith::evaluate(g.matrix, *delta.value));
}

std::size_t gram_rank(Family f, int n, int lambda, const Delta& delta) {
    return gram_rank(gram_matrix(f, n, lambda), delta);
}

IntPoly gram_determinant(const GramMatrix& g) {
    if (g.matrix.rows() != g.matrix.cols()) throw InvalidInput("determinant of a non-square Gram matrix");
    return arith::matrix_det(g.matrix);
}

std::string SandwichedAlgebra::to_string() const {
    return kind == SandwichKind::Trivial ? "trivial" : "S" + std::to_string(degree);
}

bool has_symmetric_sandwich(Family f, int lambda) { return !diagrams::is_planar_family(f) && lambda >= 2; }

SandwichedAlgebra sandwiched_algebra(Family f, int n, int lambda, const Delta& delta) {
    auto keys = cell_keys(f, n, lambda);
    // locate a strict idempotent: a pairing with nonzero scalar at delta
    const PartitionDiagram* top = nullptr;
    const PartitionDiagram* bottom = nullptr;
    Pairing pe;
    for (const auto& t : keys.right) {
        for (const auto& b : keys.left) {
            auto p = pairing_element(t, b);
            if (!p) continue;
            if (!delta.is_generic() && p->closed > 0 && sgn(*delta.value) == 0) continue;
            top = &t;
            bottom = &b;
            pe = *p;
            break;
        }
        if (top) break;
    }
    if (!top) throw InvalidInput("J-cell " + std::to_string(lambda) + " is not idempotent at delta = " + delta.to_string());

    // the H-cell: top o sigma o bottom over the middle permutations present in the family
    std::vector<PartitionDiagram> h;
    std::vector<Permutation> mids;
    for (const auto& sigma : symgroup::all_permutations(lambda)) {
        auto mid = diagrams::permutation_diagram(sigma.images());
        auto x = diagrams::multiply(diagrams::multiply(*top, mid).diagram, *bottom).diagram;
        if (!diagrams::in_family(x, f)) continue;
        h.push_back(x);
        mids.push_back(sigma);
    }
    const size_t m = h.size();
    // multiplication table modulo the higher ideal, normalized by the eigenvalue
    std::vector<std::vector<int>> table(m, std::vector<int>(m, -1));
    for (size_t a = 0; a < m; ++a)
        for (size_t b = 0; b < m; ++b) {
            auto p = diagrams::multiply(h[a], h[b]);
            if (p.closed != pe.closed) throw VerificationFailure("sandwiched algebra: scalar differs within the H-cell");
            auto it = std::find(h.begin(), h.end(), p.diagram);
            if (it == h.end()) throw VerificationFailure("sandwiched algebra: product leaves the H-cell");
            table[a][b] = static_cast<int>(it - h.begin());
        }
    // group axioms
    int unit = -1;
    for (size_t e = 0; e < m && unit < 0; ++e) {
        bool ok = true;
        for (size_t a = 0; a < m && ok; ++a) ok = table[e][a] == static_cast<int>(a) && table[a][e] == static_cast<int>(a);
        if (ok) unit = static_cast<int>(e);
    }
    if (unit < 0) throw VerificationFailure("sandwiched algebra: no unit");
    for (size_t a = 0; a < m; ++a) {
        bool inv = false;
        for (size_t b = 0; b < m; ++b) inv = inv || table[a][b] == unit;
        if (!inv) throw VerificationFailure("sandwiched algebra: missing inverse");
        for (size_t b = 0; b < m; ++b)
            for (size_t c = 0; c < m; ++c)
                if (table[static_cast<size_t>(table[a][b])][c] != table[a][static_cast<size_t>(table[b][c])])
                    throw VerificationFailure("sandwiched algebra: not associative");
    }
    if (m == 1) {
        if (has_symmetric_sandwich(f, lambda)) throw VerificationFailure("sandwiched algebra: expected S_lambda");
        return {SandwichKind::Trivial, lambda};
    }
    // phi(top o sigma o bottom) = sigma * pi is a homomorphism onto S_lambda
    std::map<Permutation, size_t> image;
    for (size_t a = 0; a < m; ++a) image.emplace(mids[a] * pe.perm, a);
    if (image.size() != m || m != symgroup::all_permutations(lambda).size())
        throw VerificationFailure("sandwiched algebra: middle map is not a bijection onto S_lambda");
    for (size_t a = 0; a < m; ++a)
        for (size_t b = 0; b < m; ++b)
            if (mids[static_cast<size_t>(table[a][b])] * pe.perm != (mids[a] * pe.perm) * (mids[b] * pe.perm))
                throw VerificationFailure("sandwiched algebra: middle map is not multiplicative");
    return {SandwichKind::SymmetricGroup, lambda};
}

std::vector<int> apexes(Family f, int n, const Delta& delta) {
    auto counts = diagrams::through_counts(f, n);
    std::vector<int> out;
    for (auto it = counts.rbegin(); it != counts.rend(); ++it) {
        auto keys = cell_keys(f, n, *it);
        bool idem = false;
        for (const auto& t : keys.right) {
            for (const auto& b : keys.left) {
                auto p = pairing_element(t, b);
                if (p && (delta.is_generic() || p->closed == 0 || sgn(*delta.value) != 0)) {
                    idem = true;
                    break;
                }
            }
            if (idem) break;
        }
        if (idem) out.push_back(*it);
    }
    return out;
}

}  // namespace greenbox::sandwich
