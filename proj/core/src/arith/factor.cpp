#include "greenbox/arith/factor.hpp"

#include "greenbox/error.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

namespace greenbox::arith {

namespace {

// ---- polynomials over F_p, p small ----
using ModPoly = std::vector<std::int64_t>;

void trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    std::int64_t r = 1, e = p - 2;
    a %= p;
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

ModPoly reduce(const IntPoly& f, std::int64_t p) {
    ModPoly r;
    Integer pz(static_cast<long>(p));
    for (const auto& c : f.coefficients()) {
        Integer x = c % pz;
        if (sgn(x) < 0) x += pz;
        r.push_back(x.get_si());
    }
    trim(r);
    return r;
}

ModPoly sub(ModPoly a, const ModPoly& b, std::int64_t p) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % p + p) % p;
    trim(a);
    return a;
}

ModPoly add(ModPoly a, const ModPoly& b, std::int64_t p) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + b[i]) % p;
    trim(a);
    return a;
}

ModPoly mul(const ModPoly& a, const ModPoly& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    return r;
}

void divmod(const ModPoly& a, const ModPoly& b, std::int64_t p, ModPoly* q, ModPoly* r) {
    ModPoly rem = a;
    size_t db = b.size() - 1;
    std::int64_t il = inv_mod(b.back(), p);
    ModPoly quot(rem.size() >= b.size() ? rem.size() - db : 0, 0);
    while (rem.size() >= b.size()) {
        std::int64_t f = rem.back() * il % p;
        size_t k = rem.size() - b.size();
        quot[k] = f;
        for (size_t j = 0; j <= db; ++j) rem[k + j] = ((rem[k + j] - f * b[j]) % p + p) % p;
        trim(rem);
    }
    if (q) {
        trim(quot);
        *q = quot;
    }
    if (r) *r = rem;
}

ModPoly mod(const ModPoly& a, const ModPoly& b, std::int64_t p) {
    ModPoly r;
    divmod(a, b, p, nullptr, &r);
    return r;
}

ModPoly make_monic(ModPoly a, std::int64_t p) {
    if (a.empty()) return a;
    std::int64_t il = inv_mod(a.back(), p);
    for (auto& c : a) c = c * il % p;
    return a;
}

ModPoly gcd(ModPoly a, ModPoly b, std::int64_t p) {
    while (!b.empty()) {
        ModPoly r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a, p);
}

// s*a + t*b = 1 for coprime a, b.
void xgcd(const ModPoly& a, const ModPoly& b, std::int64_t p, ModPoly& s, ModPoly& t) {
    ModPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
    while (!r1.empty()) {
        ModPoly q, r;
        divmod(r0, r1, p, &q, &r);
        ModPoly s2 = sub(s0, mul(q, s1, p), p), t2 = sub(t0, mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    std::int64_t il = inv_mod(r0.back(), p);
    for (auto& c : s0) c = c * il % p;
    for (auto& c : t0) c = c * il % p;
    s = s0;
    t = t0;
}

ModPoly powmod(ModPoly base, const Integer& e, const ModPoly& m, std::int64_t p) {
    ModPoly r{1};
    base = mod(base, m, p);
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        r = mod(mul(r, r, p), m, p);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = mod(mul(r, base, p), m, p);
    }
    return r;
}

ModPoly derivative(const ModPoly& a, std::int64_t p) {
    ModPoly r;
    for (size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * static_cast<std::int64_t>(i % p) % p);
    trim(r);
    return r;
}

void equal_degree_split(const ModPoly& g, int d, std::int64_t p, std::mt19937_64& rng, std::vector<ModPoly>& out) {
    int n = static_cast<int>(g.size()) - 1;
    if (n == d) {
        out.push_back(g);
        return;
    }
    Integer e;
    mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    std::uniform_int_distribution<std::int64_t> dist(0, p - 1);
    for (;;) {
        ModPoly a(static_cast<size_t>(n));
        for (auto& c : a) c = dist(rng);
        trim(a);
        if (a.size() < 2) continue;
        ModPoly b = sub(powmod(a, e, g, p), ModPoly{1}, p);
        ModPoly c = gcd(g, b, p);
        if (c.size() > 1 && c.size() < g.size()) {
            ModPoly q;
            divmod(g, c, p, &q, nullptr);
            equal_degree_split(c, d, p, rng, out);
            equal_degree_split(make_monic(q, p), d, p, rng, out);
            return;
        }
    }
}

// Monic irreducible factors of a monic square-free f over F_p (p odd).
std::vector<ModPoly> factor_mod_p(ModPoly f, std::int64_t p) {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(p));
    std::vector<ModPoly> out;
    ModPoly x{0, 1};
    ModPoly h = x;
    for (int d = 1; 2 * d <= static_cast<int>(f.size()) - 1; ++d) {
        h = powmod(h, Integer(static_cast<long>(p)), f, p);
        ModPoly g = gcd(f, sub(h, x, p), p);
        if (g.size() > 1) {
            equal_degree_split(g, d, p, rng, out);
            ModPoly q;
            divmod(f, g, p, &q, nullptr);
            f = make_monic(q, p);
            h = mod(h, f, p);
        }
    }
    if (f.size() > 1) out.push_back(f);
    return out;
}

// ---- Hensel lifting ----
IntPoly to_int(const ModPoly& a) {
    std::vector<Integer> c;
    for (auto x : a) c.emplace_back(static_cast<long>(x));
    return IntPoly(std::move(c));
}

IntPoly reduce_sym(const IntPoly& f, const Integer& m) {
    std::vector<Integer> c;
    Integer half = m / 2;
    for (const auto& x : f.coefficients()) {
        Integer r = x % m;
        if (sgn(r) < 0) r += m;
        if (r > half) r -= m;
        c.push_back(r);
    }
    return IntPoly(std::move(c));
}

// Lifts f = G*H (mod p) to modulus target; g monic.
void hensel_pair(const IntPoly& f, ModPoly g, ModPoly h, std::int64_t p, const Integer& target, IntPoly& G_out,
                 IntPoly& H_out) {
    ModPoly s, t;
    xgcd(g, h, p, s, t);
    IntPoly G = to_int(g);
    std::vector<Integer> hc = to_int(h).coefficients();
    hc.back() = f.lead();
    IntPoly H(std::move(hc));
    Integer m(static_cast<long>(p));
    Integer pz(static_cast<long>(p));
    while (m < target) {
        IntPoly err = f - G * H;
        std::vector<Integer> ec = err.coefficients();
        for (auto& c : ec) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        ModPoly e = reduce(IntPoly(std::move(ec)), p);
        ModPoly gm = reduce(G, p), hm = reduce(H, p);
        ModPoly q, tau;
        divmod(mul(t, e, p), gm, p, &q, &tau);
        ModPoly sigma = add(mul(s, e, p), mul(q, hm, p), p);
        G += to_int(tau).scaled(m);
        H += to_int(sigma).scaled(m);
        m *= pz;
    }
    G_out = G;
    H_out = H;
}

// Lifts f = lc * prod(us) mod p to monic factors mod target.
void hensel_multi(const IntPoly& f, const std::vector<ModPoly>& us, std::int64_t p, const Integer& target,
                  std::vector<IntPoly>& out) {
    if (us.size() == 1) {
        Integer lc = f.lead();
        Integer inv;
        mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), target.get_mpz_t());
        std::vector<Integer> c = f.coefficients();
        for (auto& x : c) {
            x = (x * inv) % target;
            if (sgn(x) < 0) x += target;
        }
        out.emplace_back(std::move(c));
        return;
    }
    size_t half = us.size() / 2;
    ModPoly g{1}, h{1};
    for (size_t i = 0; i < half; ++i) g = mul(g, us[i], p);
    for (size_t i = half; i < us.size(); ++i) h = mul(h, us[i], p);
    ModPoly lcp = reduce(IntPoly(f.lead()), p);
    h = mul(h, lcp, p);
    IntPoly G, H;
    hensel_pair(f, g, h, p, target, G, H);
    G = reduce_sym(G, target);
    H = reduce_sym(H, target);
    hensel_multi(G, std::vector<ModPoly>(us.begin(), us.begin() + static_cast<long>(half)), p, target, out);
    hensel_multi(H, std::vector<ModPoly>(us.begin() + static_cast<long>(half), us.end()), p, target, out);
}

Integer coefficient_bound(const IntPoly& f) {
    Integer sq = 0;
    for (const auto& c : f.coefficients()) sq += c * c;
    Integer norm = sqrt(sq) + 1;
    Integer two_n;
    mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(f.degree()));
    return two_n * norm;
}

const std::int64_t kPrimes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

// Irreducible factors of a primitive square-free polynomial.
std::vector<IntPoly> factor_squarefree(const IntPoly& f) {
    if (f.degree() <= 1) return {f};
    std::int64_t best_p = 0;
    std::vector<ModPoly> best;
    int good = 0;
    for (std::int64_t p : kPrimes) {
        ModPoly fp = reduce(f, p);
        if (fp.size() != f.coefficients().size()) continue;
        if (gcd(fp, derivative(fp, p), p).size() != 1) continue;
        auto fac = factor_mod_p(make_monic(fp, p), p);
        if (best_p == 0 || fac.size() < best.size()) {
            best_p = p;
            best = fac;
        }
        if (best.size() == 1 || ++good >= 3) break;
    }
    if (best_p == 0) throw VerificationFailure("no suitable prime for factorization");
    if (best.size() == 1) return {f};

    Integer target = 2 * coefficient_bound(f) * abs(f.lead()) + 1;
    Integer M(static_cast<long>(best_p));
    while (M < target) M *= best_p;
    std::vector<IntPoly> lifted;
    hensel_multi(f, best, best_p, M, lifted);

    std::vector<IntPoly> found;
    IntPoly rest = f;
    std::vector<IntPoly> pool = lifted;
    size_t s = 1;
    while (2 * s <= pool.size()) {
        bool hit = false;
        std::vector<size_t> idx(s);
        for (size_t i = 0; i < s; ++i) idx[i] = i;
        while (true) {
            IntPoly g(rest.lead());
            for (size_t i : idx) g = reduce_sym(g * pool[i], M);
            g = primitive_part(g);
            IntPoly q;
            if (g.degree() > 0 && divides(g, rest, &q)) {
                found.push_back(g);
                rest = q;
                std::vector<IntPoly> next;
                for (size_t i = 0; i < pool.size(); ++i)
                    if (std::find(idx.begin(), idx.end(), i) == idx.end()) next.push_back(pool[i]);
                pool = std::move(next);
                hit = true;
                break;
            }
            // next combination
            long k = static_cast<long>(s) - 1;
            while (k >= 0 && idx[static_cast<size_t>(k)] == pool.size() - s + static_cast<size_t>(k)) --k;
            if (k < 0) break;
            ++idx[static_cast<size_t>(k)];
            for (size_t j = static_cast<size_t>(k) + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!hit) ++s;
    }
    if (rest.degree() > 0) found.push_back(primitive_part(rest));
    return found;
}

}  // namespace

IntPoly Factorization::expand() const {
    IntPoly r(unit);
    for (const auto& [f, e] : factors) r = r * f.pow(static_cast<unsigned>(e));
    return r;
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p) {
    std::vector<std::pair<IntPoly, int>> out;
    IntPoly a = primitive_part(p);
    if (a.degree() <= 0) return out;
    IntPoly c = poly_gcd(a, a.derivative());
    IntPoly w = divexact(a, c);
    int i = 1;
    while (c.degree() > 0) {
        IntPoly y = poly_gcd(w, c);
        IntPoly z = divexact(w, y);
        if (z.degree() > 0) out.emplace_back(z, i);
        ++i;
        w = y;
        c = divexact(c, y);
    }
    if (w.degree() > 0) out.emplace_back(w, i);
    return out;
}

Factorization factor_rational(const IntPoly& p) {
    if (p.is_zero()) throw InvalidInput("factor_rational: zero polynomial");
    Factorization out;
    out.unit = content(p);
    if (sgn(p.lead()) < 0) out.unit = -out.unit;
    // powers of the variable are split off first; the bound applies to what remains
    int low = 0;
    while (sgn(p.coeff(low)) == 0) ++low;
    IntPoly rest = p;
    if (low > 0) {
        rest = divexact(p, IntPoly::monomial(Integer(1), low));
        out.factors.emplace_back(IntPoly::x(), low);
    }
    for (const auto& [g, mult] : squarefree_decomposition(rest)) {
        if (g.degree() > 12) throw BoundExceeded("factor_rational: square-free part of degree above 12");
        for (auto& f : factor_squarefree(g)) out.factors.emplace_back(primitive_part(f), mult);
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        Rational va = a.first.evaluate(Rational(-1)), vb = b.first.evaluate(Rational(-1));
        if (va != vb) return va < vb;
        return a.first.coefficients() < b.first.coefficients();
    });
    return out;
}

std::string to_factored_string(const Factorization& f, const std::string& var) {
    std::string out;
    if (f.factors.empty()) return f.unit.get_str();
    if (f.unit == -1) out = "-";
    else if (f.unit != 1) out = f.unit.get_str() + "*";
    bool first = true;
    for (const auto& [g, e] : f.factors) {
        if (!first) out += "*";
        first = false;
        size_t terms = 0;
        for (const auto& c : g.coefficients())
            if (sgn(c) != 0) ++terms;
        std::string body = to_string(g, var);
        out += terms > 1 ? "(" + body + ")" : body;
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::string factored_string(const IntPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    return to_factored_string(factor_rational(p), var);
}

}  // namespace greenbox::arith
