#include "greenbox/check/suites.hpp"

#include "greenbox/cells/cell_structure.hpp"
#include "greenbox/diagrams/factorize.hpp"
#include "greenbox/diagrams/family.hpp"
#include "greenbox/dihedral/dihedral_algebra.hpp"
#include "greenbox/error.hpp"
#include "greenbox/sandwich/closed_forms.hpp"
#include "greenbox/sandwich/diagram_algebra.hpp"
#include "greenbox/symgroup/characters.hpp"
#include "greenbox/symgroup/rsk.hpp"

#include <map>
#include <random>
#include <set>

namespace greenbox::check {

using diagrams::Family;
using diagrams::PartitionDiagram;
using sandwich::Delta;

void SuiteResult::expect(bool cond, const std::string& what) {
    if (cond) {
        ++passed;
        return;
    }
    if (failed++ == 0) first_failure = what;
}

namespace {

std::mt19937_64 rng_for(const SuiteOptions& o, const std::string& name) {
    std::seed_seq seq(name.begin(), name.end());
    std::vector<std::uint64_t> mix(1);
    seq.generate(mix.begin(), mix.end());
    return std::mt19937_64(o.seed ^ mix[0]);
}

std::vector<std::set<int>> as_sets(const std::vector<int>& comp_of) {
    std::vector<std::set<int>> out;
    std::map<int, size_t> slot;
    for (size_t i = 0; i < comp_of.size(); ++i) {
        auto [it, fresh] = slot.emplace(comp_of[i], out.size());
        if (fresh) out.emplace_back();
        out[it->second].insert(static_cast<int>(i));
    }
    return out;
}

std::vector<int> combined(const cells::CellStructure& cs, const std::vector<int>& idx) {
    std::vector<int> out(cs.basis_size);
    for (size_t i = 0; i < cs.basis_size; ++i) out[i] = cs.jcell_of[i] * 100000 + idx[i];
    return out;
}

cells::BasedAlgebra symmetric_group_algebra(int m) {
    const auto& table = symgroup::multiplication_table(m);
    std::vector<int> inverse(table.size());
    for (size_t i = 0; i < table.size(); ++i)
        for (size_t j = 0; j < table.size(); ++j)
            if (table[i][j] == 0) inverse[i] = static_cast<int>(j);
    return cells::group_algebra(table, inverse);
}

void check_jcell_sizes(SuiteResult& r, const cells::CellStructure& cs, const std::string& what) {
    for (size_t j = 0; j < cs.jcells.size(); ++j) {
        const auto& jc = cs.jcells[j];
        const size_t h = jc.grid[0][0].elements.size();
        bool uniform = true;
        for (const auto& row : jc.grid)
            for (const auto& cell : row) uniform = uniform && cell.elements.size() == h;
        r.expect(uniform && jc.elements.size() == jc.left_cells.size() * h * jc.right_cells.size(),
                 what + " J-cell " + std::to_string(j));
    }
}

SuiteResult associativity(const SuiteOptions& o) {
    SuiteResult r{"associativity"};
    auto rng = rng_for(o, r.name);
    for (Family f : diagrams::all_families())
        for (int n = 1; n <= 4; ++n) {
            const auto basis = sandwich::diagram_basis(f, n);
            const auto& elems = basis->elements;
            std::uniform_int_distribution<size_t> pick(0, elems.size() - 1);
            const size_t count = n == 4 ? o.triples : o.triples / 10;
            for (size_t t = 0; t < count; ++t) {
                const auto &a = elems[pick(rng)], &b = elems[pick(rng)], &c = elems[pick(rng)];
                auto ab = diagrams::multiply(a, b), bc = diagrams::multiply(b, c);
                auto left = diagrams::multiply(ab.diagram, c), right = diagrams::multiply(a, bc.diagram);
                r.expect(left.diagram == right.diagram && ab.closed + left.closed == bc.closed + right.closed,
                         diagrams::tag(f) + ": (ab)c != a(bc) for " + a.to_text() + ", " + b.to_text() + ", " +
                             c.to_text());
            }
        }
    return r;
}

SuiteResult star(const SuiteOptions& o) {
    SuiteResult r{"star"};
    auto rng = rng_for(o, r.name);
    for (Family f : diagrams::involutive_families())
        for (int n = 1; n <= 4; ++n) {
            const auto basis = sandwich::diagram_basis(f, n);
            const auto& elems = basis->elements;
            std::uniform_int_distribution<size_t> pick(0, elems.size() - 1);
            for (size_t t = 0; t < o.triples / 2; ++t) {
                const auto &a = elems[pick(rng)], &b = elems[pick(rng)];
                auto ab = diagrams::multiply(a, b);
                auto ba = diagrams::multiply(b.star(), a.star());
                r.expect(ab.diagram.star() == ba.diagram && ab.closed == ba.closed && a.star().star() == a,
                         diagrams::tag(f) + ": (ab)* != b*a* for " + a.to_text() + ", " + b.to_text());
            }
        }
    for (int n = 3; n <= 9; ++n) {
        auto alg = dihedral::dihedral_based_algebra(n, dihedral::VMode::Generic);
        const auto& st = *alg.star;
        for (size_t i = 0; i < alg.size; ++i)
            for (size_t j = 0; j < alg.size; ++j) {
                auto lhs = alg.multiply(static_cast<int>(i), static_cast<int>(j));
                auto rhs = alg.multiply(st[j], st[i]);
                std::map<int, std::string> a, b;
                for (const auto& t : lhs) a[st[static_cast<size_t>(t.index)]] = cells::to_string(t.coeff);
                for (const auto& t : rhs) b[t.index] = cells::to_string(t.coeff);
                r.expect(a == b, "I2(" + std::to_string(n) + "): star fails on " + alg.name(static_cast<int>(i)) + ", " +
                                     alg.name(static_cast<int>(j)));
            }
    }
    return r;
}

SuiteResult family_closure(const SuiteOptions& o) {
    SuiteResult r{"family-closure"};
    auto rng = rng_for(o, r.name);
    for (Family f : diagrams::all_families())
        for (int n = 1; n <= 4; ++n) {
            const auto basis = sandwich::diagram_basis(f, n);
            const auto& elems = basis->elements;
            std::uniform_int_distribution<size_t> pick(0, elems.size() - 1);
            for (size_t t = 0; t < o.triples / 4; ++t) {
                const auto &a = elems[pick(rng)], &b = elems[pick(rng)];
                auto ab = diagrams::multiply(a, b);
                r.expect(diagrams::in_family(ab.diagram, f),
                         diagrams::tag(f) + ": product leaves the family for " + a.to_text() + ", " + b.to_text());
                r.expect(diagrams::recompose(diagrams::factorize(a, f)) == a,
                         diagrams::tag(f) + ": factorization does not recompose " + a.to_text());
            }
        }
    return r;
}

SuiteResult jcell_sizes(const SuiteOptions&) {
    SuiteResult r{"jcell-sizes"};
    for (Family f : diagrams::all_families())
        for (int n = 1; n <= 4; ++n) {
            auto alg = sandwich::diagram_algebra(sandwich::diagram_basis(f, n), Delta::generic());
            check_jcell_sizes(r, cells::compute_cells(alg), diagrams::tag(f) + " n=" + std::to_string(n));
        }
    for (int m = 1; m <= 5; ++m)
        check_jcell_sizes(r, cells::compute_cells(symmetric_group_algebra(m)), "S" + std::to_string(m));
    for (int n = 3; n <= 13; n += 2) {
        auto alg = dihedral::dihedral_based_algebra(n, dihedral::VMode::Generic);
        check_jcell_sizes(r, cells::compute_cells(alg), "I2(" + std::to_string(n) + ")");
    }
    return r;
}

SuiteResult closure_agreement(const SuiteOptions&) {
    SuiteResult r{"closure-agreement"};
    for (Family f : diagrams::all_families())
        for (int n = 0; n <= 8; ++n) {
            if (n > diagrams::enumeration_bound(f)) continue;
            auto basis = sandwich::diagram_basis(f, n);
            if (basis->elements.size() > 200) continue;
            for (const Delta& d : {Delta::generic(), Delta::at(1), Delta::at(2)}) {
                auto alg = sandwich::diagram_algebra(basis, d);
                auto a = cells::compute_cells(alg, {cells::Closure::Generators});
                auto b = cells::compute_cells(alg, {cells::Closure::FullBasis});
                bool same = as_sets(a.jcell_of) == as_sets(b.jcell_of) &&
                            as_sets(combined(a, a.left_index_of)) == as_sets(combined(b, b.left_index_of)) &&
                            as_sets(combined(a, a.right_index_of)) == as_sets(combined(b, b.right_index_of));
                // the J-order, compared through least elements
                if (same) {
                    for (size_t x = 0; x < a.jcells.size(); ++x)
                        for (size_t y = 0; y < a.jcells.size(); ++y) {
                            int bx = b.jcell_of[static_cast<size_t>(a.jcells[x].elements[0])];
                            int by = b.jcell_of[static_cast<size_t>(a.jcells[y].elements[0])];
                            same = same && a.below[x][y] == b.below[static_cast<size_t>(bx)][static_cast<size_t>(by)];
                        }
                }
                r.expect(same, diagrams::tag(f) + " n=" + std::to_string(n) + " delta=" + d.to_string());
            }
        }
    return r;
}

SuiteResult closed_counts(const SuiteOptions&) {
    SuiteResult r{"closed-counts"};
    for (Family f : diagrams::all_families()) {
        const int top = f == Family::Partition ? 4 : 5;
        for (int n = 1; n <= top; ++n)
            for (int l = 0; l <= n; ++l) {
                auto left = diagrams::bottom_halves(f, n, l).size();
                auto right = diagrams::top_halves(f, n, l).size();
                std::string what = diagrams::tag(f) + " n=" + std::to_string(n) + " lambda=" + std::to_string(l);
                r.expect(sandwich::count_left_cells(f, n, l) == arith::Integer(static_cast<unsigned long>(left)), what);
                r.expect(sandwich::count_right_cells(f, n, l) == arith::Integer(static_cast<unsigned long>(right)), what);
            }
    }
    r.expect(sandwich::stirling2(6, 3) == 90 && sandwich::stirling2(6, 3) == 3 * sandwich::stirling2(5, 3) + sandwich::stirling2(5, 2),
             "Stirling recursion at S(6,3)");
    return r;
}

SuiteResult rsk_roundtrip(const SuiteOptions&) {
    SuiteResult r{"rsk"};
    for (int m = 1; m <= 6; ++m)
        for (const auto& w : symgroup::all_permutations(m)) {
            auto pq = symgroup::rsk(w);
            r.expect(symgroup::inverse_rsk(pq.P, pq.Q) == w, "round trip fails for " + w.to_string());
            auto inv = symgroup::rsk(w.inverse());
            r.expect(inv.P == pq.Q && inv.Q == pq.P, "inverse does not swap tableaux for " + w.to_string());
        }
    return r;
}

SuiteResult characters(const SuiteOptions&) {
    SuiteResult r{"characters"};
    for (int m = 1; m <= 6; ++m) {
        auto ct = symgroup::character_table(m);
        long order = 0;
        for (long s : ct.class_sizes) order += s;
        for (size_t a = 0; a < ct.shapes.size(); ++a)
            for (size_t b = 0; b < ct.shapes.size(); ++b) {
                long sum = 0;
                for (size_t c = 0; c < ct.classes.size(); ++c) sum += ct.class_sizes[c] * ct.values[a][c] * ct.values[b][c];
                r.expect(sum == (a == b ? order : 0), "row orthogonality in S" + std::to_string(m));
            }
        for (size_t c = 0; c < ct.classes.size(); ++c)
            for (size_t d = 0; d < ct.classes.size(); ++d) {
                long sum = 0;
                for (size_t a = 0; a < ct.shapes.size(); ++a) sum += ct.values[a][c] * ct.values[a][d];
                r.expect(c == d ? sum * ct.class_sizes[c] == order : sum == 0, "column orthogonality in S" + std::to_string(m));
            }
    }
    return r;
}

SuiteResult dihedral_suite(const SuiteOptions& o) {
    using namespace dihedral;
    SuiteResult r{"dihedral"};
    auto rng = rng_for(o, r.name);
    std::uniform_int_distribution<int> len(0, 10), letter(1, 2);
    auto word = [&] {
        int k = len(rng);
        return k == 0 ? DihedralWord::identity() : DihedralWord{k, letter(rng)};
    };
    for (size_t t = 0; t < o.triples / 4; ++t) {
        HeckeElement x(word()), y(word()), z(word());
        r.expect(multiply(kInfinite, multiply(kInfinite, x, y), z) == multiply(kInfinite, x, multiply(kInfinite, y, z)),
                 "infinite associativity");
    }
    for (int n = 3; n <= 13; ++n) {
        auto words = dihedral_elements(n);
        bool nonneg = true;
        for (const auto& a : words)
            for (const auto& b : words) {
                const HeckeElement p = cg_multiply_finite(n, a, b);
                for (const auto& [w, c] : p.terms())
                    for (const auto& k : c.coefficients()) nonneg = nonneg && sgn(k) >= 0;
            }
        r.expect(nonneg, "negative structure constant in I2(" + std::to_string(n) + ")");
        auto alg = dihedral_based_algebra(n, VMode::Generic);
        auto cs = cells::compute_cells(alg);
        r.expect(cells::verify_sandwich_pair(alg, cs).pass == (n % 2 == 1),
                 "sandwich verification parity for I2(" + std::to_string(n) + ")");
        if (n % 2 == 1) {
            auto s = dihedral_simples(n, VMode::One);
            r.expect(s.sum_of_squares == 2 * static_cast<size_t>(n), "sum of squares for I2(" + std::to_string(n) + ")");
            auto m = middle_algebra(n, VMode::One);
            r.expect(m.matches_p_prime && m.semisimple, "middle algebra of I2(" + std::to_string(n) + ")");
        }
    }
    return r;
}

}  // namespace

const std::vector<Suite>& suites() {
    static const std::vector<Suite> all{
        {"associativity", associativity},
        {"star", star},
        {"family-closure", family_closure},
        {"jcell-sizes", jcell_sizes},
        {"closure-agreement", closure_agreement},
        {"closed-counts", closed_counts},
        {"rsk", rsk_roundtrip},
        {"characters", characters},
        {"dihedral", dihedral_suite},
    };
    return all;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
    for (const auto& s : suites())
        if (s.name == name) return s.run(opts);
    throw InvalidInput("unknown suite '" + name + "'");
}

}  // namespace greenbox::check
