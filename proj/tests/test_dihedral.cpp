#include "doctest.h"

#include "greenbox/cells/cell_structure.hpp"
#include "greenbox/dihedral/dihedral_algebra.hpp"
#include "greenbox/error.hpp"

#include <cmath>
#include <map>
#include <random>

using namespace greenbox;
using namespace greenbox::dihedral;
using arith::LaurentInt;
using arith::Rational;

namespace {

// Standard basis of the Hecke algebra of I2(n) with H_s^2 = 1 + (v^-1 - v) H_s,
// and the KL basis b_w = sum over x <= w of v^(l(w)-l(x)) H_x.
struct StandardHecke {
    int n;
    using Elem = std::map<DihedralWord, LaurentInt>;

    static int last_of(int len, int first) { return len % 2 == 1 ? first : 3 - first; }

    DihedralWord word(int len, int first) const {
        if (len == 0) return {};
        if (len == n) return DihedralWord::longest(n);
        return {len, last_of(len, first)};
    }

    static void add(Elem& e, const DihedralWord& w, const LaurentInt& c) {
        e[w] += c;
        if (e[w].is_zero()) e.erase(w);
    }

    Elem times_letter(int s, const Elem& x) const {
        Elem r;
        const LaurentInt q = LaurentInt::monomial(1, -1) - LaurentInt::monomial(1, 1);
        for (const auto& [w, c] : x) {
            int f = w.first();
            if (w.length == n) {
                add(r, word(n - 1, 3 - s), c);
                add(r, w, c * q);
            } else if (w.length == 0 || f != s) {
                add(r, word(w.length + 1, s), c);
            } else {
                add(r, word(w.length - 1, 3 - s), c);
                add(r, w, c * q);
            }
        }
        return r;
    }

    std::vector<int> letters(const DihedralWord& w) const {
        std::vector<int> out;
        int f = w.first();
        for (int i = 0; i < w.length; ++i, f = 3 - f) out.push_back(f);
        return out;
    }

    Elem kl(const DihedralWord& w) const {
        Elem r;
        for (const auto& x : dihedral_elements(n))
            if (x == w || x.length < w.length) add(r, x, LaurentInt::monomial(1, w.length - x.length));
        return r;
    }

    Elem product(const Elem& a, const Elem& b) const {
        Elem r;
        for (const auto& [x, c] : a) {
            Elem t = b;
            auto ls = letters(x);
            for (auto it = ls.rbegin(); it != ls.rend(); ++it) t = times_letter(*it, t);
            for (const auto& [w, d] : t) add(r, w, c * d);
        }
        return r;
    }

    HeckeElement to_kl(Elem e) const {
        HeckeElement out;
        while (!e.empty()) {
            auto top = e.begin();
            for (auto it = e.begin(); it != e.end(); ++it)
                if (it->first.length > top->first.length) top = it;
            DihedralWord w = top->first;
            LaurentInt c = top->second;
            out.add(w, c);
            for (const auto& [x, d] : kl(w)) add(e, x, -(c * d));
        }
        return out;
    }

    HeckeElement kl_product(const DihedralWord& x, const DihedralWord& y) const {
        return to_kl(product(kl(x), kl(y)));
    }
};

LaurentInt two(int i = 1) { return arith::bracket2(i); }

std::vector<DihedralWord> infinite_words(int max_len) {
    std::vector<DihedralWord> out{DihedralWord::identity()};
    for (int k = 1; k <= max_len; ++k)
        for (int last : {1, 2}) out.push_back({k, last});
    return out;
}

}  // namespace

TEST_CASE("dihedral words parse and print") {
    CHECK(parse_word("1212").to_string() == "1212");
    CHECK(parse_word("1212") == DihedralWord{4, 2});
    CHECK(parse_word("21212").first() == 2);
    CHECK(parse_word("e").is_identity());
    CHECK(parse_word("12121", 5) == DihedralWord::longest(5));
    CHECK(parse_word("21212", 5) == DihedralWord::longest(5));
    CHECK(DihedralWord::longest(6).to_string() == "121212");
    CHECK_THROWS_AS(parse_word("1221"), InvalidInput);
    CHECK_THROWS_AS(parse_word("13"), InvalidInput);
    CHECK_THROWS_AS(parse_word("1212", 3), InvalidInput);
}

TEST_CASE("infinite Clebsch-Gordan products") {
    HeckeElement a = cg_multiply_infinite(parse_word("1212"), parse_word("21212"));
    HeckeElement expect;
    for (auto w : {"12", "1212", "121212", "12121212"}) expect.add(parse_word(w), two());
    CHECK(a == expect);
    CHECK(a.to_bracket_string() == "[2]b12 + [2]b1212 + [2]b121212 + [2]b12121212");

    HeckeElement b = cg_multiply_infinite(parse_word("1212"), parse_word("121212"));
    CHECK(b.to_bracket_string() == "b12 + 2b1212 + 2b121212 + 2b12121212 + b1212121212");

    HeckeElement x(parse_word("2121"));
    CHECK(cg_multiply_infinite(DihedralWord::identity(), parse_word("2121")) == x);
    CHECK(cg_multiply_infinite(parse_word("2121"), DihedralWord::identity()) == x);
}

TEST_CASE("infinite products agree with the standard basis") {
    // In I2(N) with N beyond every length the braid relation is invisible.
    StandardHecke h{15};
    for (const auto& x : infinite_words(7))
        for (const auto& y : infinite_words(7)) {
            INFO(x.to_string() << " * " << y.to_string());
            CHECK(cg_multiply_infinite(x, y) == h.kl_product(x, y));
        }
}

TEST_CASE("finite products agree with the standard basis") {
    for (int n = 2; n <= 9; ++n) {
        StandardHecke h{n};
        auto words = dihedral_elements(n);
        for (const auto& x : words)
            for (const auto& y : words) {
                INFO("n=" << n << " " << x.to_string() << " * " << y.to_string());
                CHECK(cg_multiply_finite(n, x, y) == h.kl_product(x, y));
            }
    }
}

TEST_CASE("truncated products for n = 6") {
    HeckeElement a = cg_multiply_finite(6, parse_word("1212"), parse_word("21212"));
    CHECK(a.to_bracket_string() == "[2]b12 + ([2]_3+2[2])b121212");
    CHECK(a.coeff(DihedralWord::longest(6)) == two(3) + two() * LaurentInt(2));

    // The middle term 2 b_{121212} contributes 2, i.e. one [2]_0.
    HeckeElement b = cg_multiply_finite(6, parse_word("1212"), parse_word("121212"));
    CHECK(b.to_bracket_string() == "([2]_4+2[2]_2+2)b121212");
    CHECK(b.coeff(DihedralWord::longest(6)) == two(4) + two(2) * LaurentInt(2) + LaurentInt(2));
    CHECK(b == StandardHecke{6}.kl_product(parse_word("1212"), parse_word("121212", 6)));

    CHECK(cg_multiply_finite(3, parse_word("1"), parse_word("1")).to_bracket_string() == "[2]b1");
    CHECK_THROWS_AS(cg_multiply_finite(3, parse_word("1212"), parse_word("1")), InvalidInput);
}

TEST_CASE("associativity and nonnegativity") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> len(0, 10), letter(1, 2);
    auto random_word = [&] {
        int k = len(rng);
        return k == 0 ? DihedralWord::identity() : DihedralWord{k, letter(rng)};
    };
    for (int t = 0; t < 300; ++t) {
        HeckeElement x(random_word()), y(random_word()), z(random_word());
        CHECK(multiply(kInfinite, multiply(kInfinite, x, y), z) == multiply(kInfinite, x, multiply(kInfinite, y, z)));
    }
    for (int n = 3; n <= 12; ++n) {
        auto words = dihedral_elements(n);
        for (const auto& x : words)
            for (const auto& y : words) {
                HeckeElement fin = cg_multiply_finite(n, x, y);
                HeckeElement inf = cg_multiply_infinite(x.length == n ? DihedralWord{n, 2} : x,
                                                        y.length == n ? DihedralWord{n, 2} : y);
                bool short_terms = true;
                for (const auto& [w, c] : inf.terms()) {
                    if (w.length >= n) short_terms = false;
                    for (const auto& a : c.coefficients()) CHECK(sgn(a) >= 0);
                }
                for (const auto& [w, c] : fin.terms())
                    for (const auto& a : c.coefficients()) CHECK(sgn(a) >= 0);
                if (short_terms) CHECK(fin == inf);
            }
        for (int i = 0; i < 3; ++i) {
            HeckeElement x(words[rng() % words.size()]), y(words[rng() % words.size()]), z(words[rng() % words.size()]);
            CHECK(multiply(n, multiply(n, x, y), z) == multiply(n, x, multiply(n, y, z)));
        }
    }
}

TEST_CASE("dihedral cells") {
    for (VMode mode : {VMode::Generic, VMode::One}) {
        auto alg = dihedral_based_algebra(5, mode);
        CHECK(alg.size == 10);
        auto cs = cells::compute_cells(alg);
        REQUIRE(cs.jcells.size() == 3);
        std::vector<std::vector<int>> jc;
        for (const auto& j : cs.jcells) jc.push_back(j.elements);
        auto keys = dihedral_cell_keys(5, jc);
        CHECK(keys == std::vector<std::string>{"b", "m", "t"});
        const auto& mid = cs.jcells[1];
        CHECK(mid.left_cells.size() == 2);
        CHECK(mid.right_cells.size() == 2);
        for (const auto& row : mid.grid)
            for (const auto& h : row) CHECK(h.elements.size() == 2);
        CHECK(mid.grid[0][0].strictly_idempotent());
        CHECK(mid.grid[1][1].strictly_idempotent());
        CHECK_FALSE(mid.grid[0][1].strictly_idempotent());
        CHECK(cs.jcells[0].order_rank == 0);
        CHECK(cs.jcells[1].order_rank == 1);
        CHECK(cs.jcells[2].order_rank == 2);
        CHECK(cells::verify_sandwich_pair(alg, cs).pass);
    }

    auto cs4 = cells::compute_cells(dihedral_based_algebra(4, VMode::Generic));
    REQUIRE(cs4.jcells.size() == 3);
    const auto& g = cs4.jcells[1].grid;
    CHECK(g[0][0].elements.size() + g[1][1].elements.size() == 4);
    CHECK(g[0][1].elements.size() == 1);
    CHECK(g[1][0].elements.size() == 1);
    CHECK_FALSE(cells::verify_sandwich_pair(dihedral_based_algebra(4, VMode::Generic), cs4).pass);

    auto cs3 = cells::compute_cells(dihedral_based_algebra(3, VMode::Generic));
    for (const auto& row : cs3.jcells[1].grid)
        for (const auto& h : row) CHECK(h.elements.size() == 1);

    for (int n = 3; n <= 13; ++n) {
        auto alg = dihedral_based_algebra(n, VMode::Generic);
        auto cs = cells::compute_cells(alg);
        INFO("n=" << n);
        CHECK(cs.jcells.size() == 3);
        CHECK(cells::verify_sandwich_pair(alg, cs).pass == (n % 2 == 1));
    }
    CHECK_THROWS_AS(dihedral_based_algebra(16, VMode::One), BoundExceeded);
    CHECK_THROWS_AS(dihedral_based_algebra(2, VMode::One), InvalidInput);
}

TEST_CASE("recursive polynomials") {
    CHECK(to_string(p_poly(2), "X") == "1/2*X^2-X-1");
    CHECK(to_string(p_prime_poly(2), "X") == "X^2-X-1");
    CHECK(p_poly(1) == RatPoly::x());
    CHECK(p_prime_poly(1) == IntPoly::x());
    CHECK(p_poly(0) == RatPoly(Rational(1)));
    CHECK(to_string(p_prime_poly(3), "X") == "X^3-2*X^2-X+1");
}

TEST_CASE("middle sandwiched algebra") {
    auto m5 = middle_algebra(5, VMode::One);
    CHECK(m5.basis.size() == 2);
    CHECK(to_string(m5.minimal_polynomial, "X") == "X^2-X-1");
    CHECK(m5.matches_p_prime);
    CHECK_FALSE(m5.matches_p);
    CHECK(m5.commutative);
    CHECK(m5.semisimple);
    CHECK(m5.simple_count == 2);
    // c121^2 = c1 + c121
    CHECK(m5.table[1][1] == std::vector<Rational>{1, 1});

    auto m3 = middle_algebra(3, VMode::Generic);
    CHECK(m3.basis.size() == 1);
    CHECK(m3.simple_count == 1);

    auto m7 = middle_algebra(7, VMode::One);
    CHECK(m7.minimal_polynomial.degree() == 3);
    CHECK(m7.simple_count == 3);

    for (int n = 3; n <= 13; n += 2) {
        INFO("n=" << n);
        for (VMode mode : {VMode::Generic, VMode::One}) {
            auto m = middle_algebra(n, mode);
            const int k = (n - 1) / 2;
            CHECK(m.matches_p_prime);
            CHECK(m.semisimple);
            CHECK(m.commutative);
            CHECK(m.simple_count == static_cast<size_t>(k));
            // P'_k annihilates the generator and no proper divisor does
            arith::RatMatrix acc(m.basis.size(), m.basis.size(), Rational(0));
            arith::RatMatrix pw = arith::identity_matrix(m.basis.size());
            auto p = arith::to_rat(p_prime_poly(k));
            for (int i = 0; i <= p.degree(); ++i) {
                for (size_t r = 0; r < acc.rows(); ++r)
                    for (size_t c = 0; c < acc.cols(); ++c) acc(r, c) += p.coeff(i) * pw(r, c);
                pw = pw * m.generator_matrix;
            }
            CHECK(acc == arith::RatMatrix(m.basis.size(), m.basis.size(), Rational(0)));
            CHECK(m.minimal_polynomial.degree() == k);
        }
    }
    CHECK_THROWS_AS(middle_algebra(4, VMode::One), InvalidInput);
    CHECK_THROWS_AS(middle_algebra(15, VMode::One), BoundExceeded);
}

TEST_CASE("dihedral sandwich ranks and simples") {
    auto r5 = dihedral_sandwich_ranks(5, VMode::One);
    REQUIRE(r5.size() == 4);
    CHECK(r5[3].matrix == "(10*b12121)");
    std::vector<size_t> ranks;
    for (const auto& r : r5) ranks.push_back(r.rank);
    CHECK(ranks == std::vector<size_t>{1, 2, 2, 1});

    auto r3 = dihedral_sandwich_ranks(3, VMode::Generic);
    REQUIRE(r3.size() == 3);
    CHECK(r3[1].rank == 2);

    auto s5 = dihedral_simples(5, VMode::One);
    std::vector<size_t> dims;
    for (const auto& s : s5.simples) dims.push_back(s.dim);
    CHECK(dims == std::vector<size_t>{1, 2, 2, 1});
    CHECK(s5.sum_of_squares == 10);

    for (int n = 3; n <= 13; n += 2)
        for (VMode mode : {VMode::Generic, VMode::One}) {
            auto s = dihedral_simples(n, mode);
            INFO("n=" << n);
            CHECK(s.simples.size() == static_cast<size_t>((n - 1) / 2 + 2));
            CHECK(s.sum_of_squares == static_cast<size_t>(2 * n));
            CHECK(s.semisimple);
        }
    auto s7 = dihedral_simples(7, VMode::One);
    dims.clear();
    for (const auto& s : s7.simples) dims.push_back(s.dim);
    CHECK(dims == std::vector<size_t>{1, 2, 2, 2, 1});
    CHECK_THROWS_AS(dihedral_sandwich_ranks(6, VMode::One), InvalidInput);
}

TEST_CASE("dihedral character data") {
    auto d5 = dihedral_character_data(5);
    REQUIRE(d5.size() == 1);
    CHECK(to_string(d5[0].factor, "X") == "X^2-X-1");
    REQUIRE(d5[0].roots.size() == 2);
    const auto& phi = d5[0].roots[0];
    CHECK(phi * phi == phi + Rational(1));
    CHECK(d5[0].roots[0] + d5[0].roots[1] == arith::NumberFieldElem(phi.field(), Rational(1)));
    REQUIRE(d5[0].approximations.size() == 2);
    const double golden = (1 + std::sqrt(5.0)) / 2;
    CHECK(d5[0].approximations[0] == doctest::Approx(golden));
    CHECK(d5[0].approximations[1] == doctest::Approx(1 - golden));

    auto d3 = dihedral_character_data(3);
    REQUIRE(d3.size() == 1);
    REQUIRE(d3[0].roots.size() == 1);
    CHECK(d3[0].roots[0].is_zero());

    for (int n = 3; n <= 13; n += 2) {
        size_t total = 0;
        for (const auto& c : dihedral_character_data(n)) {
            total += c.roots.size();
            for (size_t i = 0; i < c.roots.size(); ++i)
                for (size_t j = i + 1; j < c.roots.size(); ++j) CHECK(c.roots[i] != c.roots[j]);
        }
        CHECK(total == static_cast<size_t>((n - 1) / 2));
    }
}
