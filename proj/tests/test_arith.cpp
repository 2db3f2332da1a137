#include "doctest.h"

#include "greenbox/arith/factor.hpp"
#include "greenbox/arith/laurent.hpp"
#include "greenbox/arith/matrix.hpp"
#include "greenbox/arith/number_field.hpp"
#include "greenbox/arith/polynomial.hpp"

#include <random>

using namespace greenbox::arith;

namespace {

IntPoly P(const char* s) { return parse_int_poly(s); }

Rational q(long a, long b) { return make_rational(a, b); }

PolyMatrix tl5_g1() {
    IntPoly d = IntPoly::x(), d2 = d * d, one(1);
    PolyMatrix m(5, 5);
    const IntPoly rows[5][5] = {{d2, d, one, d, one},
                                {d, d2, d, one, d},
                                {one, d, d2, d, one},
                                {d, one, d, d2, d},
                                {one, d, one, d, d2}};
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) m(i, j) = rows[i][j];
    return m;
}

PolyMatrix tl5_g3() {
    PolyMatrix m(4, 4, IntPoly());
    for (int i = 0; i < 4; ++i) {
        m(i, i) = IntPoly::x();
        if (i + 1 < 4) m(i, i + 1) = m(i + 1, i) = IntPoly(1);
    }
    return m;
}

IntPoly random_poly(std::mt19937& rng, int max_deg, int span) {
    std::uniform_int_distribution<int> deg(0, max_deg), c(-span, span);
    std::vector<Integer> v(static_cast<size_t>(deg(rng)) + 1);
    for (auto& x : v) x = c(rng);
    return IntPoly(v);
}

}  // namespace

TEST_CASE("polynomial text round trip") {
    CHECK(to_string(P("d^2-2")) == "d^2-2");
    CHECK(to_string(P("-3*d^3+d-1")) == "-3*d^3+d-1");
    CHECK(to_string(IntPoly()) == "0");
    CHECK(P("2d+1") == IntPoly(std::vector<Integer>{1, 2}));
    CHECK_THROWS(parse_int_poly("d^"));
}

TEST_CASE("chebyshev polynomials") {
    CHECK(chebyshev_u(0) == IntPoly(1));
    CHECK(to_string(chebyshev_u(2), "X") == "X^2-1");
    CHECK(to_string(chebyshev_u(4), "X") == "X^4-3*X^2+1");
}

TEST_CASE("gcd") {
    CHECK(poly_gcd(P("d^2-1"), P("d-1")) == P("d-1"));
    CHECK(poly_gcd(P("6*d^2+4"), IntPoly()) == P("3*d^2+2"));
    CHECK(poly_gcd(chebyshev_u(3), chebyshev_u(1)) == P("d"));
    std::mt19937 rng(11);
    for (int k = 0; k < 100; ++k) {
        IntPoly c = random_poly(rng, 3, 4);
        IntPoly a = random_poly(rng, 4, 5) * c, b = random_poly(rng, 4, 5) * c;
        if (a.is_zero() || b.is_zero()) continue;
        IntPoly g = poly_gcd(a, b);
        CHECK(divides(g, a));
        CHECK(divides(g, b));
        if (!c.is_zero()) CHECK(divides(primitive_part(c), g));
    }
}

TEST_CASE("factorization") {
    auto f = factor_rational(P("d^2-d-1"));
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].first == P("d^2-d-1"));
    CHECK(factored_string(P("d^2-1")) == "(d-1)*(d+1)");
    CHECK(factored_string(P("d^4-2*d^2")) == "d^2*(d^2-2)");
    CHECK(factored_string(P("-6*d^2+6")) == "-6*(d-1)*(d+1)");
    CHECK(factored_string(P("d^4+4")) == "(d^2+2*d+2)*(d^2-2*d+2)");
    CHECK(factored_string(P("d^4+1")) == "(d^4+1)");
    // Swinnerton-Dyer type: irreducible, but splits modulo every prime
    CHECK(factor_rational(P("d^4-10*d^2+1")).factors.size() == 1);
    IntPoly big(1);
    for (long k = 1; k <= 6; ++k) big = big * (IntPoly::x().pow(2) - IntPoly(k * k + 1));
    auto bf = factor_rational(big);
    CHECK(bf.factors.size() == 6);
    CHECK(bf.expand() == big);
    IntPoly lin(1);
    for (long k = -6; k < 6; ++k) lin = lin * (IntPoly::x() - IntPoly(k));
    CHECK(factor_rational(lin).factors.size() == 12);
    CHECK(factored_string(IntPoly::x().pow(13)) == "d^13");
    CHECK_THROWS_AS(factor_rational(IntPoly::x().pow(13) + IntPoly(1)), greenbox::BoundExceeded);

    std::mt19937 rng(7);
    for (int k = 0; k < 60; ++k) {
        IntPoly p(1);
        int parts = 1 + k % 4;
        for (int i = 0; i < parts; ++i) {
            IntPoly q = random_poly(rng, 3, 6);
            if (q.degree() < 1) q = q + IntPoly::x();
            p = p * q;
        }
        if (p.degree() > 12 || p.is_zero()) continue;
        auto fac = factor_rational(p);
        CHECK(fac.expand() == p);
        for (const auto& [g, e] : fac.factors) {
            CHECK(g == primitive_part(g));
            CHECK(e >= 1);
        }
        CHECK(fac.factors.size() >= 1);
    }
}

TEST_CASE("determinants and ranks over Z[d]") {
    CHECK(factored_string(matrix_det(tl5_g1())) == "(d-1)^4*(d+1)^4*(d^2-2)");
    CHECK(factored_string(matrix_det(tl5_g3())) == "(d^2+d-1)*(d^2-d-1)");
    CHECK(matrix_rank(tl5_g3()) == 4);
    auto K = make_field(P("d^2-d-1"));
    CHECK(matrix_rank(evaluate(tl5_g3(), NumberFieldElem::generator(K))) == 3);
    CHECK(matrix_rank(identity_matrix(3)) == 3);
    PolyMatrix one(1, 1, P("d^3-d"));
    CHECK(matrix_det(one) == P("d^3-d"));
    CHECK_THROWS(matrix_det(PolyMatrix(2, 3, IntPoly(1))));
}

TEST_CASE("determinant is multiplicative") {
    std::mt19937 rng(3);
    for (int k = 0; k < 20; ++k) {
        size_t n = 1 + k % 4;
        PolyMatrix a(n, n), b(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                a(i, j) = random_poly(rng, 2, 3);
                b(i, j) = random_poly(rng, 2, 3);
            }
        CHECK(matrix_det(a * b) == matrix_det(a) * matrix_det(b));
        RatMatrix ra = evaluate(a, q(2, 3)), rb = evaluate(b, q(-5, 7));
        CHECK(matrix_det(ra * rb) == matrix_det(ra) * matrix_det(rb));
    }
}

TEST_CASE("generic rank agrees with evaluations off the root set") {
    std::mt19937 rng(5);
    for (int k = 0; k < 20; ++k) {
        size_t r = 2 + k % 3, c = 3 + k % 4, inner = 1 + k % 3;
        PolyMatrix u(r, inner), v(inner, c);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < inner; ++j) u(i, j) = random_poly(rng, 2, 3);
        for (size_t i = 0; i < inner; ++i)
            for (size_t j = 0; j < c; ++j) v(i, j) = random_poly(rng, 2, 3);
        PolyMatrix m = u * v;
        size_t generic = matrix_rank(m);
        CHECK(generic <= inner);
        size_t best = 0;
        for (int t = 0; t < 5; ++t) {
            size_t e = matrix_rank(evaluate(m, q(97 + 13 * t, 7 + t)));
            CHECK(e <= generic);
            best = std::max(best, e);
        }
        CHECK(best == generic);
    }
}

TEST_CASE("rank modulo p") {
    IntMatrix m(2, 2, Integer(0));
    m(0, 0) = 2;
    m(1, 1) = 3;
    CHECK(matrix_rank(m) == 2);
    CHECK(matrix_rank_mod_p(m, 2) == 1);
    CHECK(matrix_rank_mod_p(m, 5) == 2);
}

TEST_CASE("number field inversion") {
    auto K = make_field(P("d^3-2"));
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> c(-5, 5);
    for (int k = 0; k < 50; ++k) {
        RatPoly v(std::vector<Rational>{q(c(rng), 3), Rational(c(rng)), q(c(rng), 2)});
        NumberFieldElem x(K, v);
        if (x.is_zero()) continue;
        CHECK(x * x.inverse() == NumberFieldElem(K, Rational(1)));
    }
    CHECK_THROWS(make_field(P("d^2-1").pow(1) * P("d-1")));
}

TEST_CASE("quantum integers") {
    CHECK(quantum_int(0).is_zero());
    CHECK(quantum_int(1) == LaurentInt(1));
    CHECK(quantum_int(2).to_string() == "v+v^-1");
    CHECK(quantum_int(2) * quantum_int(2) == quantum_int(1) + quantum_int(3));
    CHECK((quantum_int(2) * quantum_int(2)).to_string() == "v^2+2+v^-2");
    CHECK(bracket2(0) == LaurentInt(2));
    CHECK(bracket2(3).bar() == bracket2(3));
    CHECK(quantum_int(3).evaluate(Rational(1)) == 3);
}
