#include "greenbox/arith/matrix.hpp"

#include <sstream>

namespace greenbox::arith {

namespace {

// Fraction-free elimination over Z[d] or Z. Every stored entry after step k is
// a k+1 minor of the input, so the division by the previous pivot is exact.
template <class T, class DivExact>
size_t bareiss(Matrix<T>& m, bool* negated, DivExact divexact_fn) {
    size_t r = 0;
    T prev(1);
    bool neg = false;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t p = r;
        while (p < m.rows() && is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        if (p != r) {
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
            neg = !neg;
        }
        for (size_t i = r + 1; i < m.rows(); ++i) {
            for (size_t j = c + 1; j < m.cols(); ++j) {
                T v = m(r, c) * m(i, j) - m(i, c) * m(r, j);
                m(i, j) = divexact_fn(v, prev);
            }
            m(i, c) = T(0);
        }
        prev = m(r, c);
        ++r;
    }
    if (negated) *negated = neg;
    return r;
}

IntPoly poly_divexact(const IntPoly& a, const IntPoly& b) {
    if (b.degree() == 0) {
        const Integer& d = b.lead();
        if (d == 1) return a;
        std::vector<Integer> c = a.coefficients();
        for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
        return IntPoly(std::move(c));
    }
    return divexact(a, b);
}

Integer int_divexact(const Integer& a, const Integer& b) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

size_t matrix_rank(const RatMatrix& m) { return detail::field_eliminate<Rational>(m, nullptr); }
size_t matrix_rank(const FieldMatrix& m) { return detail::field_eliminate<NumberFieldElem>(m, nullptr); }

size_t matrix_rank(const PolyMatrix& m) {
    PolyMatrix w = m;
    return bareiss(w, nullptr, poly_divexact);
}

size_t matrix_rank(const IntMatrix& m) {
    IntMatrix w = m;
    return bareiss(w, nullptr, int_divexact);
}

size_t matrix_rank_mod_p(const IntMatrix& m, std::int64_t p) {
    std::vector<std::vector<std::int64_t>> a(m.rows(), std::vector<std::int64_t>(m.cols()));
    Integer pz(static_cast<long>(p));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            Integer x = m(i, j) % pz;
            if (sgn(x) < 0) x += pz;
            a[i][j] = x.get_si();
        }
    auto inv = [p](std::int64_t x) {
        std::int64_t r = 1, b = x, e = p - 2;
        while (e) {
            if (e & 1) r = static_cast<std::int64_t>((__int128)r * b % p);
            b = static_cast<std::int64_t>((__int128)b * b % p);
            e >>= 1;
        }
        return r;
    };
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t piv = r;
        while (piv < m.rows() && a[piv][c] == 0) ++piv;
        if (piv == m.rows()) continue;
        std::swap(a[piv], a[r]);
        std::int64_t iv = inv(a[r][c]);
        for (size_t i = r + 1; i < m.rows(); ++i) {
            if (a[i][c] == 0) continue;
            std::int64_t f = static_cast<std::int64_t>((__int128)a[i][c] * iv % p);
            for (size_t j = c; j < m.cols(); ++j) {
                a[i][j] = static_cast<std::int64_t>((a[i][j] - (__int128)f * a[r][j]) % p);
                if (a[i][j] < 0) a[i][j] += p;
            }
        }
        ++r;
    }
    return r;
}

Rational matrix_det(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
    if (m.rows() == 0) return 1;
    Rational d;
    detail::field_eliminate<Rational>(m, &d);
    return d;
}

NumberFieldElem matrix_det(const FieldMatrix& m) {
    if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
    if (m.rows() == 0) throw InvalidInput("determinant of an empty number field matrix");
    NumberFieldElem d;
    detail::field_eliminate<NumberFieldElem>(m, &d);
    if (!d.field()) d = NumberFieldElem(m(0, 0).field(), Rational(0));
    return d;
}

IntPoly matrix_det(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
    if (m.rows() == 0) return IntPoly(1);
    PolyMatrix w = m;
    bool neg = false;
    size_t r = bareiss(w, &neg, poly_divexact);
    if (r < m.rows()) return IntPoly();
    IntPoly d = w(m.rows() - 1, m.cols() - 1);
    return neg ? -d : d;
}

RatMatrix evaluate(const PolyMatrix& m, const Rational& d) {
    return m.map([&](const IntPoly& p) { return p.evaluate(d); });
}

FieldMatrix evaluate(const PolyMatrix& m, const NumberFieldElem& d) {
    return m.map([&](const IntPoly& p) { return p.evaluate(d); });
}

RatMatrix identity_matrix(size_t n) {
    RatMatrix r(n, n, Rational(0));
    for (size_t i = 0; i < n; ++i) r(i, i) = 1;
    return r;
}

std::string to_string(const PolyMatrix& m, const std::string& var) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ",[" : "[");
        for (size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << to_string(m(i, j), var);
        os << "]";
    }
    os << "]";
    return os.str();
}

std::string to_string(const RatMatrix& m) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ",[" : "[");
        for (size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace greenbox::arith
