#include "greenbox/sandwich/closed_forms.hpp"

#include "greenbox/error.hpp"

#include <set>
#include <vector>

namespace greenbox::sandwich {

using arith::binomial;
using arith::Rational;

Integer stirling2(int n, int k) {
    if (n < 0 || k < 0) return 0;
    std::vector<std::vector<Integer>> s(static_cast<size_t>(n) + 1, std::vector<Integer>(static_cast<size_t>(n) + 2, 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j)
            s[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                Integer(j) * s[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] + s[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
    return k > n ? Integer(0) : s[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

Integer double_factorial(int n) {
    Integer r = 1;
    for (int k = n; k > 1; k -= 2) r *= k;
    return r;
}

namespace {

Integer exact(const Rational& q) {
    if (q.get_den() != 1) throw VerificationFailure("closed formula is not integral");
    return q.get_num();
}

Integer catalan_like(int n, int lambda) {
    // (2l+2)/(n+l+2) * C(n, (n-l)/2)
    if ((n - lambda) % 2 != 0 || lambda > n || lambda < 0) return 0;
    return exact(arith::make_rational(Integer(2 * lambda + 2) * binomial(n, (n - lambda) / 2), Integer(n + lambda + 2)));
}

}  // namespace

Integer count_left_cells(Family f, int n, int lambda) {
    if (lambda < 0 || lambda > n) return 0;
    switch (f) {
        case Family::Transformation: return lambda == 0 ? Integer(n == 0) : stirling2(n, lambda);
        case Family::PlanarTransformation: return lambda == 0 ? Integer(n == 0) : binomial(n - 1, lambda - 1);
        case Family::Partition: {
            Integer s = 0;
            for (int t = 0; t <= n; ++t) s += stirling2(n, t) * binomial(t, lambda);
            return s;
        }
        case Family::PlanarPartition: return catalan_like(2 * n, 2 * lambda);
        case Family::RookBrauer: {
            Integer s = 0;
            for (int t = 0; 2 * t <= n - lambda; ++t)
                s += binomial(n, lambda) * binomial(n - lambda, 2 * t) * double_factorial(2 * t - 1);
            return s;
        }
        case Family::Motzkin: {
            Rational s = 0;
            for (int t = 0; lambda + 2 * t <= n; ++t)
                s += arith::make_rational(Integer(lambda + 1) * binomial(n, lambda + 2 * t) * binomial(lambda + 2 * t, t),
                                          Integer(lambda + t + 1));
            return exact(s);
        }
        case Family::Brauer:
            return (n - lambda) % 2 ? Integer(0) : binomial(n, lambda) * double_factorial(n - lambda - 1);
        case Family::TemperleyLieb: return catalan_like(n, lambda);
        case Family::Rook:
        case Family::PlanarRook: return binomial(n, lambda);
        case Family::Symmetric:
        case Family::PlanarSymmetric: return lambda == n ? 1 : 0;
    }
    return 0;
}

Integer count_right_cells(Family f, int n, int lambda) {
    if (diagrams::is_transformation_family(f)) return lambda == 0 ? Integer(n == 0) : binomial(n, lambda);
    return count_left_cells(f, n, lambda);
}

namespace {

IntPoly d_plus(long c) { return IntPoly::x() + IntPoly(c); }

}  // namespace

IntPoly reference_det_formula(Family f, int n) {
    if (n < 3) throw InvalidInput("reference determinants need n >= 3");
    const IntPoly d = IntPoly::x();
    switch (f) {
        case Family::Brauer:
            return d_plus(-2).pow(n * (n - 3) / 2) * d_plus(n - 4).pow(n - 1) * d_plus(2 * n - 4);
        case Family::Motzkin: return d.pow(n * (n - 1)) * arith::chebyshev_u(n - 1).compose(d_plus(-1));
        case Family::RookBrauer:
            return d.pow(n * (n - 1) / 2) * d_plus(-3).pow(n * (n - 3) / 2) * d_plus(n - 5).pow(n - 1) * d_plus(2 * n - 5);
        default: throw InvalidInput("no reference determinant for " + diagrams::tag(f));
    }
}

int chebyshev_l(const Rational& delta) {
    Rational a = 1, b = delta;  // U_0, U_1
    for (int l = 0; l < 64; ++l) {
        if (sgn(b) == 0) return l;
        Rational c = delta * b - a;
        a = b;
        b = c;
    }
    return kInfinite;
}

int chebyshev_l(const arith::NumberFieldElem& delta) {
    arith::NumberFieldElem a(delta.field(), Rational(1)), b = delta;
    for (int l = 0; l < 64; ++l) {
        if (b.is_zero()) return l;
        arith::NumberFieldElem c = delta * b - a;
        a = b;
        b = c;
    }
    return kInfinite;
}

namespace {

// Digits of v in the mixed base 1, ell, ell*p, ell*p^2, ... (p = 0: a single top digit).
std::vector<long> mixed_digits(long v, long ell, long p) {
    std::vector<long> d{v % ell};
    long q = v / ell;
    if (p == 0) {
        if (q) d.push_back(q);
        return d;
    }
    while (q) {
        d.push_back(q % p);
        q /= p;
    }
    return d;
}

std::set<long> support(long v, long ell, long p) {
    auto d = mixed_digits(v, ell, p);
    std::vector<long> weight{1};
    for (size_t i = 1; i < d.size(); ++i) weight.push_back(i == 1 ? ell : weight.back() * p);
    size_t top = d.size() - 1;
    while (top > 0 && d[top] == 0) --top;
    std::set<long> out{d[top] * weight[top]};
    for (size_t i = top; i-- > 0;) {
        std::set<long> next;
        for (long s : out) {
            next.insert(s + d[i] * weight[i]);
            next.insert(s - d[i] * weight[i]);
        }
        out = std::move(next);
    }
    return out;
}

}  // namespace

Integer tl_rank_closed_form(int n, int lambda, int l, int p) {
    if (lambda < 0 || lambda > n || (n - lambda) % 2 != 0) throw InvalidInput("n and lambda must have the same parity");
    if (p < 0 || p == 1) throw InvalidInput("characteristic must be 0 or a prime");
    long ell = l == kInfinite ? (p == 0 ? 0 : p) : l + 2;
    if (ell == 0) return catalan_like(n, lambda);
    std::vector<Integer> mult(static_cast<size_t>(n) + 1, 0);
    for (int mu = n; mu >= lambda; mu -= 2) {
        Integer m = catalan_like(n, mu);
        for (int top = n; top > mu; top -= 2)
            if (support(top + 1, ell, p).count(mu + 1)) m -= mult[static_cast<size_t>(top)];
        mult[static_cast<size_t>(mu)] = m;
    }
    return mult[static_cast<size_t>(lambda)];
}

}  // namespace greenbox::sandwich
