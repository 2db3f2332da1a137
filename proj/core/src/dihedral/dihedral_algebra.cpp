#include "greenbox/dihedral/dihedral_algebra.hpp"

#include "greenbox/arith/factor.hpp"
#include "greenbox/error.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <numbers>
#include <optional>

namespace greenbox::dihedral {

using arith::FieldMatrix;
using arith::Integer;
using arith::LaurentInt;

namespace {

void check_order(int n, int lo, int hi) {
    if (n < lo) throw InvalidInput("dihedral order must be at least " + std::to_string(lo));
    if (n > hi) throw BoundExceeded("dihedral order above " + std::to_string(hi));
}

void check_middle(int n) {
    check_order(n, 3, kMaxMiddleOrder);
    if (n % 2 == 0)
        throw InvalidInput("n even: the middle J-cell has H-cells of sizes " + std::to_string(n / 2) + " and " +
                           std::to_string(n / 2 - 1) + ", so it has no sandwiched algebra");
}

// Solves A a = b over Q for A given by columns; empty when inconsistent.
std::optional<std::vector<Rational>> solve(const std::vector<std::vector<Rational>>& cols,
                                           const std::vector<Rational>& b) {
    const size_t rows = b.size(), k = cols.size();
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(k + 1));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < k; ++j) m[i][j] = cols[j][i];
        m[i][k] = b[i];
    }
    std::vector<int> pivot_row(k, -1);
    size_t r = 0;
    for (size_t c = 0; c < k && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rational inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (size_t j = c; j <= k; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_row[c] = static_cast<int>(r++);
    }
    for (size_t i = r; i < rows; ++i)
        if (m[i][k] != 0) return std::nullopt;
    std::vector<Rational> a(k, Rational(0));
    for (size_t c = 0; c < k; ++c)
        if (pivot_row[c] >= 0) a[c] = m[static_cast<size_t>(pivot_row[c])][k];
    return a;
}

std::vector<Rational> flatten(const RatMatrix& m) {
    std::vector<Rational> v;
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
}

RatPoly minimal_polynomial(const RatMatrix& m) {
    const size_t d = m.rows();
    RatMatrix power = arith::identity_matrix(d);
    std::vector<std::vector<Rational>> powers;
    for (size_t k = 0; k <= d; ++k) {
        auto v = flatten(power);
        if (auto a = solve(powers, v)) {
            std::vector<Rational> c(k + 1);
            for (size_t i = 0; i < k; ++i) c[i] = -(*a)[i];
            c[k] = 1;
            return RatPoly(std::move(c));
        }
        powers.push_back(std::move(v));
        power = power * m;
    }
    throw VerificationFailure("minimal polynomial not found");
}

IntPoly to_monic_int(const RatPoly& p) {
    IntPoly q = arith::to_primitive_int(p);
    if (sgn(q.lead()) < 0) q = -q;
    if (q.lead() != 1) throw VerificationFailure("minimal polynomial is not integral");
    return q;
}

std::vector<IntPoly> irreducible_factors(const IntPoly& p) {
    std::vector<IntPoly> out;
    for (auto f : arith::factor_rational(p).factors) {
        if (sgn(f.first.lead()) < 0) f.first = -f.first;
        out.push_back(f.first);
    }
    return out;
}

const LaurentInt& two() {
    static const LaurentInt t = arith::bracket2(1);
    return t;
}

// c coordinate of a b-coefficient when a product of two scaled elements is
// rescaled: coefficient / [2] at v.
Rational scaled_at(const LaurentInt& c, const Rational& v) {
    return c.evaluate(v) / two().evaluate(v);
}

std::string scaled_symbolic(const LaurentInt& c) {
    Integer a = c.coeff(1);
    if (c == two() * LaurentInt(a)) return a.get_str();
    return "(" + c.to_string() + ")/[2]";
}

struct MiddleBasis {
    std::vector<DihedralWord> words;
    std::map<DihedralWord, size_t> index;
};

MiddleBasis middle_basis(int n) {
    MiddleBasis b;
    for (int len = 1; len <= n - 2; len += 2) {
        b.index[DihedralWord{len, 1}] = b.words.size();
        b.words.push_back(DihedralWord{len, 1});
    }
    return b;
}

// Product of two b's projected to H(b1) modulo b_{w0}.
std::vector<std::pair<size_t, LaurentInt>> middle_product(int n, const MiddleBasis& mb, const DihedralWord& x,
                                                          const DihedralWord& y) {
    std::vector<std::pair<size_t, LaurentInt>> out;
    const HeckeElement p = cg_multiply_finite(n, x, y);
    for (const auto& [w, c] : p.terms()) {
        if (w.length == n) continue;
        auto it = mb.index.find(w);
        if (it == mb.index.end())
            throw VerificationFailure("product left the middle H-cell: b" + w.to_string());
        out.emplace_back(it->second, c);
    }
    return out;
}

}  // namespace

VMode parse_vmode(const std::string& text) {
    if (text == "generic" || text == "v") return VMode::Generic;
    if (text == "1") return VMode::One;
    throw InvalidInput("v must be 'generic' or '1': " + text);
}

std::string to_string(VMode m) { return m == VMode::Generic ? "generic" : "1"; }

std::vector<DihedralWord> dihedral_elements(int n) {
    check_order(n, 2, kMaxDihedralOrder);
    std::vector<DihedralWord> out{DihedralWord::identity()};
    for (int k = 1; k < n; ++k)
        for (int f : {1, 2}) out.push_back(DihedralWord{k, k % 2 == 1 ? f : 3 - f});
    out.push_back(DihedralWord::longest(n));
    return out;
}

cells::BasedAlgebra dihedral_based_algebra(int n, VMode mode) {
    check_order(n, 3, kMaxDihedralOrder);
    auto words = dihedral_elements(n);
    std::map<DihedralWord, int> index;
    for (size_t i = 0; i < words.size(); ++i) index[words[i]] = static_cast<int>(i);

    auto table = std::make_shared<std::vector<cells::SparseVec>>(words.size() * words.size());
    for (size_t i = 0; i < words.size(); ++i)
        for (size_t j = 0; j < words.size(); ++j) {
            auto& out = (*table)[i * words.size() + j];
            const HeckeElement p = cg_multiply_finite(n, words[i], words[j]);
            for (const auto& [w, c] : p.terms()) {
                cells::Scalar s = mode == VMode::Generic ? cells::Scalar(c) : cells::Scalar(c.evaluate(Rational(1)));
                out.push_back({s, index.at(w)});
            }
        }

    cells::BasedAlgebra alg;
    alg.size = words.size();
    alg.ring = mode == VMode::Generic ? cells::RingTag::Laurent : cells::RingTag::Rationals;
    const size_t size = words.size();
    alg.multiply = [table, size](int i, int j) { return (*table)[static_cast<size_t>(i) * size + static_cast<size_t>(j)]; };
    alg.generators = {index.at(DihedralWord{1, 1}), index.at(DihedralWord{1, 2})};
    alg.nonneg_structure_constants = true;
    std::vector<int> star(words.size());
    for (size_t i = 0; i < words.size(); ++i) {
        const auto& w = words[i];
        star[i] = (w.is_identity() || w.length == n) ? static_cast<int>(i) : index.at(DihedralWord{w.length, w.first()});
    }
    alg.star = std::move(star);
    for (const auto& w : words) alg.names.push_back(w.to_string());
    return alg;
}

std::vector<std::string> dihedral_cell_keys(int n, const std::vector<std::vector<int>>& jcells) {
    auto words = dihedral_elements(n);
    std::vector<std::string> keys;
    for (size_t c = 0; c < jcells.size(); ++c) {
        int shortest = n + 1;
        for (int e : jcells[c]) shortest = std::min(shortest, words[static_cast<size_t>(e)].length);
        if (shortest == 0)
            keys.push_back("b");
        else if (shortest == n)
            keys.push_back("t");
        else if (jcells[c].size() == 2 * static_cast<size_t>(n) - 2)
            keys.push_back("m");
        else
            keys.push_back(std::to_string(c));
    }
    return keys;
}

RatPoly p_poly(int k, const Rational& two_value) {
    if (k < 0) throw InvalidInput("P_k needs k >= 0");
    if (two_value == 0) throw InvalidInput("[2] must be nonzero");
    RatPoly prev(Rational(1)), cur = RatPoly::x();
    if (k == 0) return prev;
    const RatPoly step = (RatPoly::x() - RatPoly(two_value)).scaled(1 / two_value);
    for (int i = 1; i < k; ++i) {
        RatPoly next = step * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

IntPoly p_prime_poly(int k) {
    if (k < 0) throw InvalidInput("P'_k needs k >= 0");
    IntPoly prev(Integer(1)), cur = IntPoly::x();
    if (k == 0) return prev;
    const IntPoly step = IntPoly::x() - IntPoly(Integer(1));
    for (int i = 1; i < k; ++i) {
        IntPoly next = step * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

MiddleAlgebra middle_algebra(int n, VMode mode) {
    check_middle(n);
    MiddleAlgebra m;
    m.n = n;
    m.mode = mode;
    const MiddleBasis mb = middle_basis(n);
    m.basis = mb.words;
    const size_t d = mb.words.size();

    m.table.assign(d, std::vector<std::vector<Rational>>(d, std::vector<Rational>(d, Rational(0))));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j)
            for (const auto& [t, c] : middle_product(n, mb, mb.words[i], mb.words[j])) {
                // c_i c_j = b_i b_j / [2]^2 and b_t = [2] c_t
                Integer a = c.coeff(1);
                if (c != two() * LaurentInt(a)) throw VerificationFailure("middle constants are not [2]-divisible");
                m.table[i][j][t] = Rational(a);
            }

    m.commutative = true;
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j)
            if (m.table[i][j] != m.table[j][i]) m.commutative = false;

    m.generator_matrix = RatMatrix(d, d, Rational(0));
    if (d > 1)
        for (size_t j = 0; j < d; ++j)
            for (size_t t = 0; t < d; ++t) m.generator_matrix(t, j) = m.table[1][j][t];
    m.minimal_polynomial = minimal_polynomial(m.generator_matrix);

    const int k = (n - 1) / 2;
    m.matches_p_prime = m.minimal_polynomial == arith::to_rat(p_prime_poly(k));
    // P_k over Q(v): monic(P_k) has coefficients polynomial in [2] of degree < k,
    // so agreement at k distinct values of [2] is equality.
    m.matches_p = true;
    const int samples = mode == VMode::One ? 1 : k;
    for (int s = 0; s < samples; ++s)
        if (arith::monic(p_poly(k, Rational(2 + s))) != m.minimal_polynomial) m.matches_p = false;

    RatPoly g = arith::gcd(m.minimal_polynomial, m.minimal_polynomial.derivative());
    m.semisimple = g.degree() == 0;
    m.simple_count = static_cast<size_t>(m.minimal_polynomial.degree() - g.degree());
    return m;
}

std::vector<SandwichRank> dihedral_sandwich_ranks(int n, VMode mode) {
    check_middle(n);
    std::vector<SandwichRank> out;
    out.push_back({"b", "", 0, "(be)", 1});

    const DihedralWord w0 = DihedralWord::longest(n);
    LaurentInt top = cg_multiply_finite(n, w0, w0).coeff(w0);
    std::string top_coeff = mode == VMode::One ? top.evaluate(Rational(1)).get_str() : "(" + top.to_string() + ")";
    SandwichRank top_rank{"t", "", 0, "(" + top_coeff + "*b" + w0.to_string() + ")", top.is_zero() ? 0u : 1u};

    const MiddleAlgebra alg = middle_algebra(n, mode);
    const MiddleBasis mb = middle_basis(n);
    const size_t d = mb.words.size();
    const std::vector<DihedralWord> rows{{1, 1}, {2, 2}}, cols{{1, 1}, {2, 1}};

    // Coordinates of each c_t in powers of the generator x = c121.
    std::vector<std::vector<Rational>> powers;
    {
        std::vector<Rational> v(d, Rational(0));
        v[0] = 1;
        for (size_t i = 0; i < d; ++i) {
            powers.push_back(v);
            std::vector<Rational> next(d, Rational(0));
            for (size_t a = 0; a < d; ++a)
                for (size_t b = 0; b < d; ++b) next[b] += alg.generator_matrix(b, a) * v[a];
            v = std::move(next);
        }
    }
    std::vector<std::vector<Rational>> in_powers(d);
    for (size_t t = 0; t < d; ++t) {
        std::vector<Rational> e(d, Rational(0));
        e[t] = 1;
        auto a = solve(powers, e);
        if (!a) throw VerificationFailure("middle algebra is not generated by c121");
        in_powers[t] = *a;
    }

    std::vector<std::vector<std::vector<std::pair<size_t, LaurentInt>>>> entries(2, std::vector<std::vector<std::pair<size_t, LaurentInt>>>(2));
    std::string rendering = "[";
    for (size_t r = 0; r < 2; ++r) {
        rendering += r ? ", [" : "[";
        for (size_t c = 0; c < 2; ++c) {
            entries[r][c] = middle_product(n, mb, rows[r], cols[c]);
            std::string cell;
            for (const auto& [t, coef] : entries[r][c]) {
                std::string s = mode == VMode::One ? scaled_at(coef, Rational(1)).get_str() : scaled_symbolic(coef);
                if (!cell.empty()) cell += "+";
                cell += (s == "1" ? "" : s + "*") + "c" + mb.words[t].to_string();
            }
            rendering += (c ? ", " : "") + (cell.empty() ? std::string("0") : cell);
        }
        rendering += "]";
    }
    rendering += "]";

    // A rank of 2 at any specialization of v is also the generic rank.
    const std::vector<Rational> vs = mode == VMode::One ? std::vector<Rational>{1}
                                                        : std::vector<Rational>{2, 3, 5};
    for (const IntPoly& f : irreducible_factors(to_monic_int(alg.minimal_polynomial))) {
        auto field = arith::make_field(f);
        const NumberFieldElem theta = NumberFieldElem::generator(field);
        std::vector<NumberFieldElem> image(d);
        for (size_t t = 0; t < d; ++t) {
            NumberFieldElem acc(field, Rational(0)), pw(field, Rational(1));
            for (size_t i = 0; i < d; ++i) {
                acc = acc + pw * in_powers[t][i];
                pw = pw * theta;
            }
            image[t] = acc;
        }
        std::size_t best = 0;
        for (const Rational& v : vs) {
            FieldMatrix phi(2, 2, NumberFieldElem(field, Rational(0)));
            for (size_t r = 0; r < 2; ++r)
                for (size_t c = 0; c < 2; ++c)
                    for (const auto& [t, coef] : entries[r][c]) phi(r, c) = phi(r, c) + image[t] * scaled_at(coef, v);
            best = std::max(best, arith::matrix_rank(phi));
        }
        for (int root = 0; root < f.degree(); ++root)
            out.push_back({"m", arith::to_string(f, "X"), root, rendering, best});
    }
    out.push_back(top_rank);
    return out;
}

DihedralSimples dihedral_simples(int n, VMode mode) {
    DihedralSimples s;
    s.n = n;
    s.mode = mode;
    s.apexes = {"b", "m", "t"};
    auto ranks = dihedral_sandwich_ranks(n, mode);
    s.simples.push_back({"b", "unit", ranks[0].rank});
    for (const auto& r : ranks)
        if (r.jcell == "m") s.simples.push_back({"m", r.factor, r.rank});
    s.simples.push_back({"t", "unit", ranks.back().rank});
    for (const auto& x : s.simples) s.sum_of_squares += x.dim * x.dim;
    s.semisimple = s.sum_of_squares == 2 * static_cast<size_t>(n);
    return s;
}

std::vector<EigenvalueClass> dihedral_character_data(int n) {
    check_middle(n);
    const int k = (n - 1) / 2;
    const IntPoly p = p_prime_poly(k);
    std::vector<double> numeric;
    for (int j = 1; j <= k; ++j) numeric.push_back(1 + 2 * std::cos(2 * std::numbers::pi * j / n));

    std::vector<EigenvalueClass> out;
    for (const IntPoly& f : irreducible_factors(p)) {
        EigenvalueClass cls;
        cls.factor = f;
        auto field = arith::make_field(f);
        const NumberFieldElem y = NumberFieldElem::generator(field) + Rational(-1);
        // Conjugates of 1 + 2cos(a) are 1 + 2cos(ma), and 2cos(ma) = C_m(2cos(a)).
        NumberFieldElem prev(field, Rational(2)), cur = y;
        for (int m = 1; m <= n; ++m) {
            NumberFieldElem root = cur + Rational(1);
            bool is_root = f.evaluate(root).is_zero();
            bool fresh = true;
            for (const auto& r : cls.roots)
                if (r == root) fresh = false;
            if (is_root && fresh) cls.roots.push_back(root);
            NumberFieldElem next = y * cur - prev;
            prev = cur;
            cur = next;
        }
        if (static_cast<int>(cls.roots.size()) != f.degree())
            throw VerificationFailure("could not split " + arith::to_string(f, "X") + " in its own field");
        for (double x : numeric) {
            double val = 0;
            for (int i = f.degree(); i >= 0; --i) val = val * x + f.coeff(i).get_d();
            if (std::abs(val) < 1e-9) cls.approximations.push_back(x);
        }
        out.push_back(std::move(cls));
    }
    return out;
}

}  // namespace greenbox::dihedral
