#include "greenbox/symgroup/characters.hpp"

#include "greenbox/error.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace greenbox::symgroup {

namespace {

// Murnaghan-Nakayama on beta-numbers: removing a rim hook of length r moves
// one bead from b to b - r; the sign counts the beads jumped over.
long mn_beta(std::vector<int> beta, const std::vector<int>& mu, size_t k,
             std::map<std::pair<std::vector<int>, size_t>, long>& memo) {
    if (k == mu.size()) return 1;
    auto key = std::make_pair(beta, k);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int r = mu[k];
    long total = 0;
    std::set<int> beads(beta.begin(), beta.end());
    for (size_t i = 0; i < beta.size(); ++i) {
        int b = beta[i];
        int to = b - r;
        if (to < 0 || beads.count(to)) continue;
        int jumped = 0;
        for (int x : beta)
            if (x > to && x < b) ++jumped;
        std::vector<int> next = beta;
        next[i] = to;
        std::sort(next.begin(), next.end());
        long v = mn_beta(next, mu, k + 1, memo);
        total += (jumped % 2 ? -v : v);
    }
    memo.emplace(key, total);
    return total;
}

std::mutex& cache_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

long mn_character(const YoungPartition& shape, const YoungPartition& cycle_type) {
    if (shape.size() != cycle_type.size()) throw InvalidInput("character: sizes differ");
    static std::map<std::pair<std::vector<int>, std::vector<int>>, long> cache;
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto key = std::make_pair(shape.parts, cycle_type.parts);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    std::vector<int> beta;
    int l = shape.length();
    for (int i = 0; i < l; ++i) beta.push_back(shape.parts[static_cast<size_t>(i)] + (l - 1 - i));
    std::sort(beta.begin(), beta.end());
    std::map<std::pair<std::vector<int>, size_t>, long> memo;
    long v = mn_beta(beta, cycle_type.parts, 0, memo);
    cache.emplace(key, v);
    return v;
}

CharacterTable character_table(int m) {
    CharacterTable t;
    t.m = m;
    t.shapes = partitions(m);
    t.classes = partitions(m);
    arith::Integer mfact = arith::factorial(m);
    for (const auto& mu : t.classes) {
        // |class| = m! / z_mu
        arith::Integer z = 1;
        std::map<int, int> mult;
        for (int part : mu.parts) {
            z *= part;
            ++mult[part];
        }
        for (auto [part, c] : mult) z *= arith::factorial(c);
        t.class_sizes.push_back(arith::Integer(mfact / z).get_si());
    }
    for (const auto& lam : t.shapes) {
        std::vector<long> row;
        for (const auto& mu : t.classes) row.push_back(mn_character(lam, mu));
        t.values.push_back(row);
    }
    return t;
}

const std::vector<std::vector<int>>& multiplication_table(int m) {
    if (m < 0 || m > 6) throw BoundExceeded("group algebra limited to m <= 6");
    static std::map<int, std::vector<std::vector<int>>> tables;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = tables.find(m);
    if (it != tables.end()) return it->second;
    auto perms = all_permutations(m);
    std::vector<std::vector<int>> tab(perms.size(), std::vector<int>(perms.size()));
    for (size_t i = 0; i < perms.size(); ++i)
        for (size_t j = 0; j < perms.size(); ++j)
            tab[i][j] = static_cast<int>(permutation_index(perms[i] * perms[j]));
    return tables.emplace(m, std::move(tab)).first->second;
}

GroupAlgebraElement GroupAlgebraElement::zero(int m) {
    if (m < 0 || m > 6) throw BoundExceeded("group algebra limited to m <= 6");
    GroupAlgebraElement e;
    e.m = m;
    e.coeffs.assign(static_cast<size_t>(arith::factorial(m).get_si()), Rational(0));
    return e;
}

GroupAlgebraElement GroupAlgebraElement::basis(const Permutation& p) {
    GroupAlgebraElement e = zero(p.size());
    e.coeffs[static_cast<size_t>(permutation_index(p))] = 1;
    return e;
}

bool GroupAlgebraElement::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& q) { return sgn(q) == 0; });
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o) {
    if (m != o.m) throw InvalidInput("group algebra elements of different degree");
    for (size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
    return *this;
}

GroupAlgebraElement GroupAlgebraElement::scaled(const Rational& s) const {
    GroupAlgebraElement r = *this;
    for (auto& c : r.coeffs) c *= s;
    return r;
}

GroupAlgebraElement operator-(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return a + b.scaled(Rational(-1));
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    if (a.m != b.m) throw InvalidInput("group algebra elements of different degree");
    const auto& tab = multiplication_table(a.m);
    GroupAlgebraElement r = GroupAlgebraElement::zero(a.m);
    for (size_t i = 0; i < a.coeffs.size(); ++i) {
        if (sgn(a.coeffs[i]) == 0) continue;
        for (size_t j = 0; j < b.coeffs.size(); ++j) {
            if (sgn(b.coeffs[j]) == 0) continue;
            r.coeffs[static_cast<size_t>(tab[i][j])] += a.coeffs[i] * b.coeffs[j];
        }
    }
    return r;
}

GroupAlgebraElement central_idempotent(const YoungPartition& shape) {
    int m = shape.size();
    GroupAlgebraElement e = GroupAlgebraElement::zero(m);
    auto perms = all_permutations(m);
    Rational scale = Rational(hook_length_dimension(shape)) / Rational(arith::factorial(m));
    for (size_t i = 0; i < perms.size(); ++i) {
        // chi(g^-1) = chi(g) for symmetric groups
        long chi = mn_character(shape, YoungPartition(perms[i].cycle_type()));
        e.coeffs[i] = scale * Rational(chi);
    }
    return e;
}

arith::RatMatrix regular_representation(const GroupAlgebraElement& x) {
    const auto& tab = multiplication_table(x.m);
    size_t N = x.coeffs.size();
    arith::RatMatrix r(N, N, Rational(0));
    for (size_t g = 0; g < N; ++g)
        for (size_t k = 0; k < N; ++k) {
            if (sgn(x.coeffs[k]) == 0) continue;
            r(g, static_cast<size_t>(tab[g][k])) += x.coeffs[k];
        }
    return r;
}

}  // namespace greenbox::symgroup
