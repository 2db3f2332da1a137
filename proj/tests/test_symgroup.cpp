#include "doctest.h"

#include "greenbox/error.hpp"
#include "greenbox/symgroup/characters.hpp"
#include "greenbox/symgroup/partitions.hpp"
#include "greenbox/symgroup/permutation.hpp"
#include "greenbox/symgroup/rsk.hpp"

#include <random>

using namespace greenbox::symgroup;
using greenbox::arith::Rational;

namespace {
YoungPartition Y(std::vector<int> p) { return YoungPartition(std::move(p)); }
}  // namespace

TEST_CASE("partitions and dominance") {
    CHECK(partitions(3) == std::vector<YoungPartition>{Y({3}), Y({2, 1}), Y({1, 1, 1})});
    CHECK(partitions(5).size() == 7);
    CHECK(p_restricted_partitions(3, 2) == std::vector<YoungPartition>{Y({3}), Y({2, 1})});
    CHECK(p_restricted_partitions(3, 3) == std::vector<YoungPartition>{Y({3}), Y({2, 1})});
    CHECK(p_restricted_partitions(3, 5) == partitions(3));
    CHECK(p_restricted_partitions(3, 0) == partitions(3));
    CHECK(p_restricted_partitions(1, 2) == std::vector<YoungPartition>{Y({1})});
    for (int m = 1; m <= 6; ++m)
        for (int p : {2, 3, 5, 7}) {
            auto r = p_restricted_partitions(m, p);
            CHECK(r.size() <= partitions(m).size());
            CHECK((r.size() == partitions(m).size()) == (p > m));
        }
    CHECK(dominance_leq(Y({3}), Y({2, 1})));
    CHECK(dominance_leq(Y({2, 1}), Y({1, 1, 1})));
    CHECK(dominance_leq(Y({2, 1}), Y({2, 1})));
    CHECK(!dominance_leq(Y({2, 1}), Y({3})));
    CHECK(!dominance_leq(Y({3, 1, 1, 1}), Y({2, 2, 2})));
    CHECK(!dominance_leq(Y({2, 2, 2}), Y({3, 1, 1, 1})));
    CHECK_THROWS(dominance_leq(Y({2}), Y({2, 1})));
    CHECK(parse_partition("(2,1)") == Y({2, 1}));
    CHECK(Y({3, 1}).conjugate() == Y({2, 1, 1}));
    CHECK(hook_length_dimension(Y({2, 1})) == 2);
    CHECK(hook_length_dimension(Y({3, 2})) == 5);
}

TEST_CASE("rsk") {
    auto r = rsk(Permutation::from_one_line({2, 3, 1}));
    CHECK(tableau_to_string(r.P) == "[[1,3],[2]]");
    CHECK(tableau_to_string(r.Q) == "[[1,2],[3]]");
    auto id = rsk(Permutation::identity(4));
    CHECK(id.P == Tableau{{1, 2, 3, 4}});
    CHECK(id.Q == Tableau{{1, 2, 3, 4}});
    for (int m = 1; m <= 5; ++m)
        for (const auto& w : all_permutations(m)) {
            auto pq = rsk(w);
            REQUIRE(inverse_rsk(pq.P, pq.Q) == w);
            CHECK(rsk(w.inverse()).P == pq.Q);
        }
}

TEST_CASE("type A cells") {
    auto c3 = typeA_cells(3);
    CHECK(c3.two_sided_sizes == std::vector<long>{1, 4, 1});
    auto sizes = c3.left_cell_sizes;
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<long>{1, 1, 2, 2});
    CHECK(typeA_cells(1).two_sided_sizes.size() == 1);
    for (int m = 1; m <= 6; ++m) {
        auto c = typeA_cells(m);
        long fsum = 0, fsq = 0;
        for (const auto& s : c.shapes) {
            long f = hook_length_dimension(s);
            fsum += f;
            fsq += f * f;
        }
        CHECK(fsq == static_cast<long>(c.elements.size()));
        long involutions = 0;
        for (const auto& w : c.elements)
            if (w * w == Permutation::identity(m)) ++involutions;
        CHECK(static_cast<long>(c.left_cell_sizes.size()) == fsum);
        CHECK(fsum == involutions);
    }
    CHECK_THROWS_AS(typeA_cells(8), greenbox::BoundExceeded);
}

TEST_CASE("characters") {
    CHECK(mn_character(Y({2, 1}), Y({1, 1, 1})) == 2);
    CHECK(mn_character(Y({2, 1}), Y({3})) == -1);
    CHECK(mn_character(Y({2, 1}), Y({2, 1})) == 0);
    for (int m = 1; m <= 6; ++m) {
        auto t = character_table(m);
        long total = 0;
        for (long s : t.class_sizes) total += s;
        long fact = 1;
        for (int k = 2; k <= m; ++k) fact *= k;
        CHECK(total == fact);
        for (size_t a = 0; a < t.shapes.size(); ++a) {
            CHECK(t.values[a][t.classes.size() - 1] == hook_length_dimension(t.shapes[a]));
            CHECK(mn_character(Y({m}), t.classes[a]) == 1);
            for (size_t b = 0; b < t.shapes.size(); ++b) {
                long s = 0;
                for (size_t c = 0; c < t.classes.size(); ++c) s += t.class_sizes[c] * t.values[a][c] * t.values[b][c];
                CHECK(s == (a == b ? fact : 0));
            }
        }
        std::vector<int> ones(static_cast<size_t>(m), 1);
        for (const auto& w : all_permutations(m))
            CHECK(mn_character(Y(ones), Y(w.cycle_type())) == w.sign());
    }
}

TEST_CASE("central idempotents") {
    auto s = Permutation::from_one_line({2, 1});
    auto half = Rational(1, 2);
    auto etriv = central_idempotent(Y({2}));
    auto esign = central_idempotent(Y({1, 1}));
    CHECK(etriv == (GroupAlgebraElement::one(2) + GroupAlgebraElement::basis(s)).scaled(half));
    CHECK(esign == (GroupAlgebraElement::one(2) - GroupAlgebraElement::basis(s)).scaled(half));
    for (int m = 1; m <= 4; ++m) {
        auto shapes = partitions(m);
        GroupAlgebraElement sum = GroupAlgebraElement::zero(m);
        for (size_t a = 0; a < shapes.size(); ++a) {
            auto ea = central_idempotent(shapes[a]);
            sum += ea;
            for (size_t b = 0; b < shapes.size(); ++b) {
                auto prod = ea * central_idempotent(shapes[b]);
                CHECK(prod == (a == b ? ea : GroupAlgebraElement::zero(m)));
            }
            for (const auto& g : all_permutations(m)) {
                auto x = GroupAlgebraElement::basis(g);
                CHECK(x * ea == ea * x);
            }
            long d = hook_length_dimension(shapes[a]);
            CHECK(greenbox::arith::matrix_rank(regular_representation(ea)) == static_cast<size_t>(d * d));
        }
        CHECK(sum == GroupAlgebraElement::one(m));
    }
}

TEST_CASE("regular representation") {
    CHECK(regular_representation(GroupAlgebraElement::one(3)) == greenbox::arith::identity_matrix(6));
    std::mt19937 rng(2);
    std::uniform_int_distribution<int> c(-3, 3);
    for (int k = 0; k < 10; ++k) {
        auto x = GroupAlgebraElement::zero(3), y = GroupAlgebraElement::zero(3);
        for (auto& q : x.coeffs) q = c(rng);
        for (auto& q : y.coeffs) q = c(rng);
        CHECK(regular_representation(x * y) == regular_representation(x) * regular_representation(y));
    }
    CHECK_THROWS_AS(GroupAlgebraElement::zero(7), greenbox::BoundExceeded);
}
