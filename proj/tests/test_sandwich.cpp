#include "doctest.h"

#include "greenbox/arith/factor.hpp"
#include "greenbox/cells/cell_structure.hpp"
#include "greenbox/diagrams/factorize.hpp"
#include "greenbox/sandwich/closed_forms.hpp"
#include "greenbox/sandwich/simples.hpp"

#include <algorithm>

using namespace greenbox;
using namespace greenbox::sandwich;
using arith::Integer;
using diagrams::Family;
using symgroup::YoungPartition;

namespace {

YoungPartition shape(std::vector<int> p) { return YoungPartition(std::move(p)); }

std::size_t families_n_max(Family f) { return static_cast<std::size_t>(std::min(5, diagrams::enumeration_bound(f))); }

// Equality up to independent row and column permutations, for small matrices.
bool equal_up_to_permutation(const arith::PolyMatrix& a, std::vector<std::vector<int>> b) {
    if (a.rows() != b.size() || (a.rows() && a.cols() != b[0].size())) return false;
    std::vector<size_t> rp(a.rows()), cp(a.cols());
    for (size_t i = 0; i < rp.size(); ++i) rp[i] = i;
    do {
        for (size_t j = 0; j < cp.size(); ++j) cp[j] = j;
        do {
            bool ok = true;
            for (size_t i = 0; i < a.rows() && ok; ++i)
                for (size_t j = 0; j < a.cols() && ok; ++j)
                    ok = a(rp[i], cp[j]) == arith::IntPoly(b[i][j]);
            if (ok) return true;
        } while (std::next_permutation(cp.begin(), cp.end()));
    } while (std::next_permutation(rp.begin(), rp.end()));
    return false;
}

}  // namespace

TEST_CASE("pairings") {
    auto tl5 = cell_keys(Family::TemperleyLieb, 5, 1);
    for (size_t i = 0; i < tl5.left.size(); ++i) {
        auto p = pairing_element(tl5.right[i], tl5.left[i]);
        REQUIRE(p);
        CHECK(p->closed == 2);
    }
    auto tl4 = cell_keys(Family::TemperleyLieb, 4, 2);
    int zeros = 0;
    for (const auto& t : tl4.right)
        for (const auto& b : tl4.left) zeros += pairing_element(t, b) ? 0 : 1;
    CHECK(zeros == 2);
    // Brauer: cups {0,3} and {1,3} share one endpoint
    auto bottom = diagrams::parse_diagram("n=4:2; [b0 b3 | b1 t0 | b2 t1]");
    auto top = diagrams::parse_diagram("n=2:4; [t1 t3 | b0 t0 | b1 t2]");
    auto p = pairing_element(top, bottom);
    REQUIRE(p);
    CHECK(p->closed == 0);
    auto br = cell_keys(Family::Brauer, 4, 2);
    int loops = 0, swaps = 0;
    for (const auto& t : br.right)
        for (const auto& b : br.left) {
            auto q = pairing_element(t, b);
            if (!q) continue;
            if (q->closed == 1) ++loops;
            if (q->perm != Permutation::identity(2)) ++swaps;
        }
    CHECK(loops == 6);
    CHECK(swaps > 0);
}

TEST_CASE("Temperley-Lieb five strands") {
    auto g1 = gram_matrix(Family::TemperleyLieb, 5, 1);
    auto g3 = gram_matrix(Family::TemperleyLieb, 5, 3);
    auto g5 = gram_matrix(Family::TemperleyLieb, 5, 5);
    CHECK(arith::factored_string(gram_determinant(g1)) == "(d-1)^4*(d+1)^4*(d^2-2)");
    CHECK(arith::factored_string(gram_determinant(g3)) == "(d^2+d-1)*(d^2-d-1)");
    CHECK(arith::to_string(g3.matrix) == "[[d,1,0,0],[1,d,1,0],[0,1,d,1],[0,0,1,d]]");
    CHECK(arith::to_string(g5.matrix) == "[[1]]");
    CHECK(gram_rank(g1, Delta::at(1)) == 1);
    CHECK(gram_rank(g3, Delta::generic()) == 4);
}

TEST_CASE("planar transformations on three points") {
    CHECK(equal_up_to_permutation(gram_matrix(Family::PlanarTransformation, 3, 3).matrix, {{1}}));
    CHECK(equal_up_to_permutation(gram_matrix(Family::PlanarTransformation, 3, 2).matrix, {{1, 0}, {1, 1}, {0, 1}}));
    CHECK(equal_up_to_permutation(gram_matrix(Family::PlanarTransformation, 3, 1).matrix, {{1}, {1}, {1}}));
    for (int d : {0, 1, 5}) {
        CHECK(gram_rank(Family::PlanarTransformation, 3, 2, Delta::at(d)) == 2);
        CHECK(gram_rank(Family::PlanarTransformation, 3, 1, Delta::at(d)) == 1);
    }
}

TEST_CASE("rook Gram matrices are multiples of the identity") {
    for (int n = 1; n <= 4; ++n)
        for (int l = 0; l <= n; ++l) {
            auto g = gram_matrix(Family::Rook, n, l);
            for (size_t i = 0; i < g.matrix.rows(); ++i)
                for (size_t j = 0; j < g.matrix.cols(); ++j)
                    CHECK(g.matrix(i, j) == (i == j ? arith::IntPoly::monomial(Integer(1), n - l) : arith::IntPoly()));
        }
}

TEST_CASE("Gram entries agree with strict idempotent eigenvalues") {
    for (Family f : diagrams::involutive_families())
        for (int n = 1; n <= 3; ++n) {
            auto basis = diagram_basis(f, n);
            auto alg = diagram_algebra(basis, Delta::generic());
            auto cs = cells::compute_cells(alg);
            for (int l : diagrams::through_counts(f, n)) {
                auto keys = cell_keys(f, n, l);
                auto g = gram_matrix(f, n, l);
                for (size_t i = 0; i < keys.right.size(); ++i)
                    for (size_t j = 0; j < keys.left.size(); ++j) {
                        // the H-cell with top half i and bottom half j
                        const cells::HCell* h = nullptr;
                        for (const auto& jc : cs.jcells)
                            for (const auto& row : jc.grid)
                                for (const auto& c : row) {
                                    const auto& d = basis->elements[static_cast<size_t>(c.elements[0])];
                                    if (diagrams::top_half(d) == keys.right[i] && diagrams::bottom_half(d) == keys.left[j]) h = &c;
                                }
                        REQUIRE(h);
                        if (g.matrix(i, j).is_zero()) {
                            CHECK_FALSE(h->strictly_idempotent());
                        } else {
                            REQUIRE(h->idempotents.size() == 1);
                            CHECK(cells::to_string(h->idempotents[0].eigenvalue) == arith::to_string(g.matrix(i, j)));
                        }
                    }
            }
        }
}

TEST_CASE("Gram ranks at special values") {
    CHECK(gram_rank(Family::Brauer, 4, 2, Delta::generic()) == 6);
    CHECK(gram_rank(Family::Brauer, 4, 2, Delta::at(2)) == 4);
    CHECK(gram_rank(Family::Motzkin, 4, 2, Delta::at(0)) == 2);
    for (Family f : diagrams::involutive_families())
        for (int n = 1; n <= 4; ++n)
            for (int l : diagrams::through_counts(f, n)) {
                auto g = gram_matrix(f, n, l);
                auto r = gram_rank(g, Delta::generic());
                CHECK(r <= std::min(g.matrix.rows(), g.matrix.cols()));
                if (diagrams::is_planar_family(f)) CHECK(r == g.matrix.cols());
            }
}

TEST_CASE("sandwiched algebras") {
    CHECK(sandwiched_algebra(Family::Transformation, 3, 2).to_string() == "S2");
    CHECK(sandwiched_algebra(Family::Brauer, 4, 2).to_string() == "S2");
    CHECK(sandwiched_algebra(Family::Partition, 3, 3).to_string() == "S3");
    for (Family f : {Family::TemperleyLieb, Family::Motzkin, Family::PlanarPartition, Family::PlanarRook})
        CHECK(sandwiched_algebra(f, 4, 2).kind == SandwichKind::Trivial);
    CHECK_THROWS_AS(sandwiched_algebra(Family::Rook, 3, 1, Delta::at(0)), InvalidInput);
}

TEST_CASE("closed counts match enumeration") {
    for (Family f : diagrams::all_families())
        for (int n = 1; n <= static_cast<int>(families_n_max(f)); ++n)
            for (int l = 0; l <= n; ++l) {
                auto left = diagrams::bottom_halves(f, n, l).size();
                auto right = diagrams::top_halves(f, n, l).size();
                INFO(diagrams::tag(f), " n=", n, " lambda=", l);
                CHECK(count_left_cells(f, n, l) == Integer(static_cast<unsigned long>(left)));
                CHECK(count_right_cells(f, n, l) == Integer(static_cast<unsigned long>(right)));
            }
    CHECK(stirling2(6, 3) == 90);
    CHECK(stirling2(6, 3) == 3 * stirling2(5, 3) + stirling2(5, 2));
    CHECK(count_left_cells(Family::Brauer, 4, 2) == 6);
    CHECK(count_left_cells(Family::TemperleyLieb, 4, 0) == 2);
}

TEST_CASE("reference determinants") {
    for (int n : {4, 5, 6}) CHECK(gram_determinant(gram_matrix(Family::Brauer, n, n - 2)) == reference_det_formula(Family::Brauer, n));
    for (int n : {4, 5}) CHECK(gram_determinant(gram_matrix(Family::Motzkin, n, n - 2)) == reference_det_formula(Family::Motzkin, n));
    CHECK(arith::factored_string(reference_det_formula(Family::Brauer, 4)) == "(d-2)^2*d^3*(d+4)");
    // rook-Brauer: computed determinant is d^(n(n-1)) times the Brauer determinant at d-1
    for (int n : {4, 5}) {
        auto det = gram_determinant(gram_matrix(Family::RookBrauer, n, n - 2));
        auto br = reference_det_formula(Family::Brauer, n).compose(arith::IntPoly::x() - arith::IntPoly(1));
        CHECK(det == arith::IntPoly::monomial(Integer(1), n * (n - 1)) * br);
    }
}

TEST_CASE("apexes") {
    CHECK(apexes(Family::Rook, 4, Delta::at(0)) == std::vector<int>{4});
    CHECK(apexes(Family::Brauer, 4, Delta::at(0)) == std::vector<int>{4, 2});
    CHECK(apexes(Family::TemperleyLieb, 3, Delta::at(1)) == std::vector<int>{3, 1});
    CHECK(apexes(Family::Partition, 3, Delta::at(0)) == std::vector<int>{3, 2, 1});
    for (Family f : diagrams::all_families())
        CHECK(apexes(f, 3, Delta::at(2)).size() == diagrams::through_counts(f, 3).size());
}

TEST_CASE("simple counts") {
    auto t5 = simple_count(Family::Transformation, 5, Delta::generic(), 0);
    std::vector<std::size_t> counts;
    for (auto [l, c] : t5) counts.push_back(c);
    CHECK(counts == std::vector<std::size_t>{7, 5, 3, 2, 1});
    for (auto [l, c] : simple_count(Family::PlanarTransformation, 5, Delta::generic(), 0)) CHECK(c == 1);
    auto t5p2 = simple_count(Family::Transformation, 5, Delta::generic(), 2);
    CHECK(t5p2.front().second == symgroup::p_restricted_partitions(5, 2).size());
}

TEST_CASE("transformation monoid simple dimensions") {
    for (int n = 1; n <= 5; ++n)
        for (int l = 1; l <= n; ++l)
            for (const auto& chi : symgroup::partitions(l)) {
                auto dim = simple_dimension(Family::Transformation, n, l, chi, Delta::generic());
                bool sign = chi.parts == std::vector<int>(static_cast<size_t>(l), 1);
                Integer expect = sign ? arith::binomial(n - 1, l - 1) : arith::binomial(n, l) * symgroup::hook_length_dimension(chi);
                INFO("n=", n, " lambda=", l, " chi=", chi.to_string());
                CHECK(Integer(static_cast<unsigned long>(dim)) == expect);
            }
    CHECK(sandwich_rank(Family::Transformation, 3, 2, shape({2}), 0) == 3);
    CHECK(sandwich_rank(Family::Transformation, 3, 2, shape({1, 1}), 0) == 2);
}

TEST_CASE("compressed and literal regular representation ranks agree") {
    for (Family f : {Family::Transformation, Family::Brauer, Family::Partition, Family::Rook, Family::RookBrauer})
        for (int n = 2; n <= 4; ++n)
            for (int l : diagrams::through_counts(f, n)) {
                if (l < 2 || l > 4) continue;
                for (const auto& chi : symgroup::partitions(l))
                    for (int d : {0, 1, 3}) {
                        INFO(diagrams::tag(f), " n=", n, " lambda=", l, " chi=", chi.to_string(), " d=", d);
                        CHECK(sandwich_rank(f, n, l, chi, d) == sandwich_rank_regular(f, n, l, chi, d));
                    }
            }
}

TEST_CASE("oracle equivalence") {
    struct Case {
        Family f;
        int n;
    };
    for (auto [f, n] : {Case{Family::Transformation, 3}, Case{Family::Brauer, 3}, Case{Family::Rook, 3},
                        Case{Family::TemperleyLieb, 4}, Case{Family::Partition, 3}, Case{Family::Motzkin, 4}})
        for (const Delta& d : {Delta::at(7), Delta::at(1), Delta::at(0), Delta::generic()})
            for (int l : apexes(f, n, d)) {
                std::vector<YoungPartition> labels;
                if (has_symmetric_sandwich(f, l)) labels = symgroup::partitions(l);
                else labels = {YoungPartition()};
                for (const auto& chi : labels) {
                    INFO(diagrams::tag(f), " n=", n, " lambda=", l, " chi=", chi.to_string(), " d=", d.to_string());
                    CHECK(simple_dimension(f, n, l, chi, d) == oracle_simple_dimension(f, n, l, chi, d));
                }
            }
    CHECK(oracle_simple_dimension(Family::Transformation, 3, 2, shape({2}), Delta::generic()) == 3);
    CHECK(oracle_simple_dimension(Family::Brauer, 3, 1, YoungPartition(), Delta::at(1)) == 1);
    CHECK(oracle_simple_dimension(Family::TemperleyLieb, 3, 1, YoungPartition(), Delta::generic()) == 2);
}

TEST_CASE("semisimplicity") {
    auto tl = semisimplicity_check(Family::TemperleyLieb, 4, 3);
    CHECK(tl.semisimple);
    CHECK(tl.sum_of_squares == 14);
    CHECK_FALSE(semisimplicity_check(Family::Rook, 3, 0).semisimple);
    for (int n = 1; n <= 5; ++n) CHECK(semisimplicity_check(Family::Symmetric, n, 1).semisimple);
    CHECK(semisimplicity_check(Family::Brauer, 3, 7).semisimple);
    CHECK_FALSE(semisimplicity_check(Family::TemperleyLieb, 4, 1).semisimple);
}

TEST_CASE("Temperley-Lieb rank formula") {
    for (int n = 1; n <= 8; ++n)
        for (int l = n % 2; l <= n; l += 2) {
            CHECK(tl_rank_closed_form(n, l, kInfinite, 0) == count_left_cells(Family::TemperleyLieb, n, l));
            for (int d : {0, 1, -1, 2, 3}) {
                auto r = gram_rank(Family::TemperleyLieb, n, l, Delta::at(d));
                CHECK(tl_rank_closed_form(n, l, chebyshev_l(Rational(d)), 0) == Integer(static_cast<unsigned long>(r)));
            }
        }
    // delta = sqrt(2), sqrt(3) and the golden ratio
    for (auto modulus : {std::vector<long>{-2, 0, 1}, std::vector<long>{-3, 0, 1}, std::vector<long>{-1, -1, 1}}) {
        auto field = arith::make_field(arith::IntPoly(std::vector<Integer>(modulus.begin(), modulus.end())));
        auto t = arith::NumberFieldElem::generator(field);
        int l = chebyshev_l(t);
        CHECK(l != kInfinite);
        for (int n = 1; n <= 8; ++n)
            for (int lam = n % 2; lam <= n; lam += 2) {
                auto g = gram_matrix(Family::TemperleyLieb, n, lam);
                auto r = arith::matrix_rank(arith::evaluate(g.matrix, t));
                CHECK(tl_rank_closed_form(n, lam, l, 0) == Integer(static_cast<unsigned long>(r)));
            }
    }
    // positive characteristic, integer delta
    for (long p : {2L, 3L, 5L})
        for (long d = 0; d < p; ++d) {
            // l from the Chebyshev recursion modulo p
            long a = 1, b = d % p;
            int l = 0;
            while (b != 0) {
                long c = ((d * b - a) % p + p) % p;
                a = b;
                b = c;
                ++l;
            }
            for (int n = 1; n <= 8; ++n)
                for (int lam = n % 2; lam <= n; lam += 2) {
                    auto g = gram_matrix(Family::TemperleyLieb, n, lam);
                    auto m = arith::evaluate(g.matrix, Rational(d)).map([](const Rational& q) { return Integer(q.get_num()); });
                    auto r = arith::matrix_rank_mod_p(m, p);
                    INFO("p=", p, " d=", d, " n=", n, " lambda=", lam);
                    CHECK(tl_rank_closed_form(n, lam, l, static_cast<int>(p)) == Integer(static_cast<unsigned long>(r)));
                }
        }
    CHECK_THROWS_AS(tl_rank_closed_form(4, 1, kInfinite, 0), InvalidInput);
}
