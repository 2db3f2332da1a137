#include "greenbox/sandwich/simples.hpp"

#include "greenbox/diagrams/factorize.hpp"
#include "greenbox/error.hpp"
#include "greenbox/symgroup/characters.hpp"
#include "greenbox/util/parallel.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>

namespace greenbox::sandwich {

using symgroup::GroupAlgebraElement;

Rational generic_surrogate(int n) { return Rational(2 * n + 7); }

namespace {

struct PairingTable {
    std::size_t rows = 0, cols = 0;
    std::vector<std::optional<Pairing>> entries;  // row-major
    const std::optional<Pairing>& at(size_t i, size_t j) const { return entries[i * cols + j]; }
};

PairingTable pairing_table(Family f, int n, int lambda) {
    auto keys = cell_keys(f, n, lambda);
    PairingTable t;
    t.rows = keys.right.size();
    t.cols = keys.left.size();
    t.entries.resize(t.rows * t.cols);
    util::parallel_for(t.rows, [&](size_t i) {
        for (size_t j = 0; j < t.cols; ++j) t.entries[i * t.cols + j] = pairing_element(keys.right[i], keys.left[j]);
    });
    return t;
}

Rational power(const Rational& x, int k) {
    Rational r = 1;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

void check_degree(int lambda) {
    if (lambda > kMaxSandwichDegree) throw BoundExceeded("sandwich dimensions need lambda <= 6");
}

// Character values indexed by permutation_index.
std::vector<long> character_values(const YoungPartition& chi) {
    std::vector<long> out;
    for (const auto& g : symgroup::all_permutations(chi.size()))
        out.push_back(symgroup::mn_character(chi, YoungPartition(g.cycle_type())));
    return out;
}

// chi(1)^2 elements p with [chi(q^-1 p)] invertible; found greedily modulo a prime.
std::vector<int> pivot_elements(const YoungPartition& chi, const std::vector<long>& values) {
    static std::mutex mu;
    static std::map<std::vector<int>, std::vector<int>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(chi.parts); it != cache.end()) return it->second;
    }
    const std::int64_t P = 2147483647;
    const int m = chi.size();
    auto perms = symgroup::all_permutations(m);
    const auto& table = symgroup::multiplication_table(m);
    std::vector<int> inv(perms.size());
    for (size_t g = 0; g < perms.size(); ++g) inv[g] = static_cast<int>(symgroup::permutation_index(perms[g].inverse()));
    long d = values[0];
    size_t want = static_cast<size_t>(d * d);
    auto modp = [&](long v) { return ((v % P) + P) % P; };
    auto inverse_mod = [&](std::int64_t a) {
        std::int64_t r = 1, e = P - 2;
        a %= P;
        while (e) {
            if (e & 1) r = r * a % P;
            a = a * a % P;
            e >>= 1;
        }
        return r;
    };
    std::vector<std::vector<std::int64_t>> basis;
    std::vector<size_t> lead;
    std::vector<int> chosen;
    for (size_t g = 0; g < perms.size() && chosen.size() < want; ++g) {
        // row g of rho(e_chi) up to scale: h -> chi(h^-1 g)
        std::vector<std::int64_t> v(perms.size());
        for (size_t h = 0; h < perms.size(); ++h)
            v[h] = modp(values[static_cast<size_t>(table[static_cast<size_t>(inv[h])][g])]);
        for (size_t b = 0; b < basis.size(); ++b) {
            std::int64_t c = v[lead[b]];
            if (!c) continue;
            for (size_t h = 0; h < v.size(); ++h) v[h] = ((v[h] - c * basis[b][h]) % P + P) % P;
        }
        size_t piv = 0;
        while (piv < v.size() && v[piv] == 0) ++piv;
        if (piv == v.size()) continue;
        std::int64_t s = inverse_mod(v[piv]);
        for (auto& x : v) x = x * s % P;
        basis.push_back(std::move(v));
        lead.push_back(piv);
        chosen.push_back(static_cast<int>(g));
    }
    if (chosen.size() != want) throw VerificationFailure("central idempotent has unexpected rank");
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(chi.parts, chosen);
    return chosen;
}

}  // namespace

// rank rho(B e) = rank [ E[P,:] rho(pi_ij) E[:,P] ] for a pivot set P of E = rho(e_chi);
// since E is central, symmetric and idempotent each block entry is E[p_a pi, p_b],
// proportional to chi(p_b^-1 p_a pi).
std::size_t sandwich_rank(Family f, int n, int lambda, const YoungPartition& chi, const Rational& delta) {
    check_degree(lambda);
    if (chi.size() != lambda) throw InvalidInput("label " + chi.to_string() + " is not a partition of " + std::to_string(lambda));
    auto pt = pairing_table(f, n, lambda);
    auto values = character_values(chi);
    auto piv = pivot_elements(chi, values);
    auto perms = symgroup::all_permutations(lambda);
    const size_t k = piv.size();
    arith::RatMatrix m(pt.rows * k, pt.cols * k, Rational(0));
    for (size_t i = 0; i < pt.rows; ++i)
        for (size_t j = 0; j < pt.cols; ++j) {
            const auto& pe = pt.at(i, j);
            if (!pe) continue;
            Rational s = power(delta, pe->closed);
            if (sgn(s) == 0) continue;
            for (size_t a = 0; a < k; ++a)
                for (size_t b = 0; b < k; ++b) {
                    auto g = perms[static_cast<size_t>(piv[b])].inverse() * perms[static_cast<size_t>(piv[a])] * pe->perm;
                    long v = values[static_cast<size_t>(symgroup::permutation_index(g))];
                    if (v) m(i * k + a, j * k + b) = s * Rational(v);
                }
        }
    return arith::matrix_rank(m);
}

std::size_t sandwich_rank_regular(Family f, int n, int lambda, const YoungPartition& chi, const Rational& delta) {
    if (lambda > 4) throw BoundExceeded("literal regular representation limited to lambda <= 4");
    if (chi.size() != lambda) throw InvalidInput("label does not match lambda");
    auto pt = pairing_table(f, n, lambda);
    auto e = symgroup::central_idempotent(chi);
    const size_t g = symgroup::all_permutations(lambda).size();
    arith::RatMatrix m(pt.rows * g, pt.cols * g, Rational(0));
    for (size_t i = 0; i < pt.rows; ++i)
        for (size_t j = 0; j < pt.cols; ++j) {
            const auto& pe = pt.at(i, j);
            if (!pe) continue;
            auto x = GroupAlgebraElement::basis(pe->perm).scaled(power(delta, pe->closed)) * e;
            auto block = symgroup::regular_representation(x);
            for (size_t a = 0; a < g; ++a)
                for (size_t b = 0; b < g; ++b) m(i * g + a, j * g + b) = block(a, b);
        }
    return arith::matrix_rank(m);
}

std::size_t simple_dimension(Family f, int n, int lambda, const YoungPartition& chi, const Delta& delta) {
    auto ap = apexes(f, n, delta);
    if (std::find(ap.begin(), ap.end(), lambda) == ap.end())
        throw InvalidInput(std::to_string(lambda) + " is not an apex at delta = " + delta.to_string());
    if (!has_symmetric_sandwich(f, lambda)) return gram_rank(f, n, lambda, delta);
    Rational d = delta.is_generic() ? generic_surrogate(n) : *delta.value;
    std::size_t r = sandwich_rank(f, n, lambda, chi, d);
    long dim = symgroup::hook_length_dimension(chi);
    if (r % static_cast<size_t>(dim) != 0) throw VerificationFailure("sandwich rank not divisible by chi(1)");
    return r / static_cast<size_t>(dim);
}

namespace {

GroupAlgebraElement young_symmetrizer(const YoungPartition& chi) {
    const int m = chi.size();
    // row-reading tableau: row r holds consecutive entries
    std::vector<int> row_of(static_cast<size_t>(m)), col_of(static_cast<size_t>(m));
    int next = 0;
    for (size_t r = 0; r < chi.parts.size(); ++r)
        for (int c = 0; c < chi.parts[r]; ++c) {
            row_of[static_cast<size_t>(next)] = static_cast<int>(r);
            col_of[static_cast<size_t>(next)] = c;
            ++next;
        }
    auto a = GroupAlgebraElement::zero(m), b = GroupAlgebraElement::zero(m);
    for (const auto& p : symgroup::all_permutations(m)) {
        bool in_row = true, in_col = true;
        for (int i = 0; i < m; ++i) {
            in_row = in_row && row_of[static_cast<size_t>(p(i))] == row_of[static_cast<size_t>(i)];
            in_col = in_col && col_of[static_cast<size_t>(p(i))] == col_of[static_cast<size_t>(i)];
        }
        if (in_row) a += GroupAlgebraElement::basis(p);
        if (in_col) b += GroupAlgebraElement::basis(p).scaled(Rational(p.sign()));
    }
    return a * b;
}

// Basis of a subspace spanned by group algebra elements.
std::vector<GroupAlgebraElement> span_basis(const std::vector<GroupAlgebraElement>& gens) {
    std::vector<GroupAlgebraElement> basis;
    std::vector<GroupAlgebraElement> reduced;
    std::vector<size_t> lead;
    for (const auto& g : gens) {
        auto v = g;
        for (size_t k = 0; k < reduced.size(); ++k) {
            const Rational c = v.coeffs[lead[k]];
            if (sgn(c) != 0) v = v - reduced[k].scaled(c);
        }
        size_t piv = 0;
        while (piv < v.coeffs.size() && sgn(v.coeffs[piv]) == 0) ++piv;
        if (piv == v.coeffs.size()) continue;
        Rational s = 1 / v.coeffs[piv];
        v = v.scaled(s);
        for (size_t k = 0; k < reduced.size(); ++k) {
            const Rational c = reduced[k].coeffs[piv];
            if (sgn(c) != 0) reduced[k] = reduced[k] - v.scaled(c);
        }
        reduced.push_back(v);
        lead.push_back(piv);
        basis.push_back(g);
    }
    return basis;
}

}  // namespace

std::size_t oracle_simple_dimension(Family f, int n, int lambda, const YoungPartition& chi, const Delta& delta) {
    if (lambda > 4 || n > 5) throw BoundExceeded("oracle limited to tiny instances");
    Rational d = delta.is_generic() ? generic_surrogate(n) : *delta.value;
    YoungPartition shape = has_symmetric_sandwich(f, lambda) ? chi : YoungPartition(std::vector<int>(lambda ? 1 : 0, lambda));
    if (shape.size() != lambda) throw InvalidInput("label does not match lambda");
    auto keys = cell_keys(f, n, lambda);
    auto y = young_symmetrizer(shape);
    auto perms = symgroup::all_permutations(lambda);
    std::vector<GroupAlgebraElement> left_gens, right_gens;
    for (const auto& p : perms) {
        left_gens.push_back(GroupAlgebraElement::basis(p) * y);
        right_gens.push_back(y * GroupAlgebraElement::basis(p));
    }
    auto w = span_basis(left_gens);
    auto u = span_basis(right_gens);
    Rational y1 = y.coeffs[0];
    if (sgn(y1) == 0) throw VerificationFailure("Young symmetrizer without identity term");

    const size_t R = keys.right.size(), L = keys.left.size(), du = u.size(), dw = w.size();
    arith::RatMatrix form(R * du, L * dw, Rational(0));
    for (size_t i = 0; i < R; ++i)
        for (size_t j = 0; j < L; ++j) {
            // raw product: bottom half j stacked above top half i
            auto prod = diagrams::multiply(keys.left[j], keys.right[i]);
            const auto& dg = prod.diagram;
            if (dg.through_strands() < lambda) continue;
            std::vector<int> img(static_cast<size_t>(lambda));
            for (int s = 0; s < lambda; ++s)
                for (int t = 0; t < lambda; ++t)
                    if (dg.block_of(diagrams::Label{false, s}) == dg.block_of(diagrams::Label{true, t}))
                        img[static_cast<size_t>(s)] = t;
            auto pij = GroupAlgebraElement::basis(Permutation(img)).scaled(power(d, prod.closed));
            for (size_t a = 0; a < du; ++a) {
                auto left = u[a] * pij;
                for (size_t b = 0; b < dw; ++b) {
                    auto z = left * w[b];
                    form(i * du + a, j * dw + b) = z.coeffs[0] / y1;
                }
            }
        }
    return arith::matrix_rank(form);
}

SimpleTable simple_table(Family f, int n, const Delta& delta) {
    SimpleTable t;
    t.family = f;
    t.n = n;
    t.delta = delta;
    t.apexes = apexes(f, n, delta);
    for (int lambda : t.apexes) {
        if (!has_symmetric_sandwich(f, lambda)) {
            t.simples.push_back({lambda, "unit", gram_rank(f, n, lambda, delta)});
            continue;
        }
        for (const auto& chi : symgroup::partitions(lambda)) {
            SimpleModule s{lambda, chi.to_string(), std::nullopt};
            if (lambda <= kMaxSandwichDegree) s.dim = simple_dimension(f, n, lambda, chi, delta);
            t.simples.push_back(s);
        }
    }
    return t;
}

std::vector<std::pair<int, std::size_t>> simple_count(Family f, int n, const Delta& delta, int p) {
    std::vector<std::pair<int, std::size_t>> out;
    for (int lambda : apexes(f, n, delta)) {
        std::size_t c = 1;
        if (!diagrams::is_planar_family(f) && lambda >= 1) c = symgroup::p_restricted_partitions(lambda, p).size();
        out.emplace_back(lambda, c);
    }
    return out;
}

Semisimplicity semisimplicity_check(Family f, int n, const Rational& delta) {
    Semisimplicity s;
    Delta d = Delta::at(delta);
    auto ap = apexes(f, n, d);
    s.all_idempotent = ap.size() == diagrams::through_counts(f, n).size();
    s.algebra_dimension = diagrams::enumerate(f, n).size();
    s.sum_of_squares = 0;
    for (const auto& m : simple_table(f, n, d).simples) {
        if (!m.dim) throw BoundExceeded("semisimplicity needs all dimensions");
        s.sum_of_squares += arith::Integer(static_cast<unsigned long>(*m.dim * *m.dim));
    }
    s.semisimple = s.all_idempotent && s.sum_of_squares == arith::Integer(static_cast<unsigned long>(s.algebra_dimension));
    return s;
}

}  // namespace greenbox::sandwich
