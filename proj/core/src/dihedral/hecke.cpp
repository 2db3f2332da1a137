#include "greenbox/dihedral/hecke.hpp"

#include "greenbox/error.hpp"

#include <cstdlib>

namespace greenbox::dihedral {

namespace {

int other(int letter) { return 3 - letter; }

bool is_constant(const LaurentInt& c) { return c.low() == 0 && c.high() == 0; }

std::string term_string(const std::string& coeff, bool compound, const DihedralWord& w) {
    std::string b = "b" + w.to_string();
    if (coeff == "1") return b;
    return compound ? "(" + coeff + ")" + b : coeff + b;
}

}  // namespace

DihedralWord DihedralWord::make(int k, int last, int n) {
    if (k < 0 || (n != kInfinite && k > n)) throw InvalidInput("word length out of range");
    if (k == 0) return identity();
    if (n != kInfinite && k == n) return longest(n);
    if (last != 1 && last != 2) throw InvalidInput("letters must be 1 or 2");
    return {k, last};
}

int DihedralWord::first() const {
    if (length == 0) return 0;
    if (last == 0) return 1;
    return length % 2 == 1 ? last : other(last);
}

std::string DihedralWord::to_string() const {
    if (length == 0) return "e";
    std::string s;
    int letter = first();
    for (int i = 0; i < length; ++i, letter = other(letter)) s += static_cast<char>('0' + letter);
    return s;
}

DihedralWord parse_word(const std::string& text, int n) {
    if (text.empty() || text == "e") return DihedralWord::identity();
    for (size_t i = 0; i < text.size(); ++i) {
        if (text[i] != '1' && text[i] != '2') throw InvalidInput("word letters must be 1 or 2: " + text);
        if (i > 0 && text[i] == text[i - 1]) throw InvalidInput("word is not reduced: " + text);
    }
    return DihedralWord::make(static_cast<int>(text.size()), text.back() - '0', n);
}

void HeckeElement::add(const DihedralWord& w, const LaurentInt& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentInt HeckeElement::coeff(const DihedralWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? LaurentInt() : it->second;
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

std::string HeckeElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += term_string(c.to_string(), !is_constant(c), w);
    }
    return out;
}

std::string HeckeElement::to_bracket_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
        if (!out.empty()) out += " + ";
        std::string s = bracket_form(c);
        bool compound = s.find_first_of("+-", 1) != std::string::npos;
        out += term_string(s, compound, w);
    }
    return out;
}

std::string bracket_form(const LaurentInt& c) {
    if (c.is_zero()) return "0";
    if (c.low() != -c.high()) return c.to_string();
    for (int i = 1; i <= c.high(); ++i)
        if (c.coeff(i) != c.coeff(-i)) return c.to_string();
    std::string out;
    for (int i = c.high(); i >= 0; --i) {
        arith::Integer a = c.coeff(i);
        if (sgn(a) == 0) continue;
        arith::Integer mag = abs(a);
        if (out.empty()) {
            if (sgn(a) < 0) out += "-";
        } else {
            out += sgn(a) < 0 ? "-" : "+";
        }
        if (i == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) out += mag.get_str();
        out += i == 1 ? "[2]" : "[2]_" + std::to_string(i);
    }
    return out;
}

HeckeElement cg_multiply_infinite(const DihedralWord& x, const DihedralWord& y) {
    if (x.is_identity()) return HeckeElement(y);
    if (y.is_identity()) return HeckeElement(x);
    HeckeElement r;
    const int k = x.length, j = y.length, end = y.last;
    const int lo = std::abs(k - j), hi = k + j;
    if (x.last == y.first()) {
        const LaurentInt two = arith::bracket2(1);
        for (int len = lo + 1; len <= hi - 1; len += 2) r.add(DihedralWord{len, end}, two);
    } else {
        for (int len = lo; len <= hi; len += 2) {
            if (len == 0) continue;
            r.add(DihedralWord{len, end}, LaurentInt((len == lo || len == hi) ? 1 : 2));
        }
    }
    return r;
}

HeckeElement cg_multiply_finite(int n, const DihedralWord& x, const DihedralWord& y) {
    if (n < 1) throw InvalidInput("dihedral order must be positive");
    if (x.length > n || y.length > n) throw InvalidInput("word longer than the longest element");
    // Any reduced lift of w0 works; use the one ending in 2.
    auto lift = [n](const DihedralWord& w) { return w.length == n ? DihedralWord{n, 2} : w; };
    HeckeElement inf = cg_multiply_infinite(lift(x), lift(y));
    HeckeElement r;
    const DihedralWord w0 = DihedralWord::longest(n);
    for (const auto& [w, c] : inf.terms()) {
        if (w.length < n) {
            r.add(w, c);
        } else if (w.length == n) {
            r.add(w0, c);
        } else {
            const int d = w.length - n;
            r.add(w0, c * arith::bracket2(d));
            if (n - d > 0) r.add(DihedralWord{n - d, w.last}, -c);
        }
    }
    return r;
}

HeckeElement multiply(int n, const HeckeElement& a, const HeckeElement& b) {
    HeckeElement r;
    for (const auto& [x, cx] : a.terms())
        for (const auto& [y, cy] : b.terms()) {
            HeckeElement p = n == kInfinite ? cg_multiply_infinite(x, y) : cg_multiply_finite(n, x, y);
            for (const auto& [w, c] : p.terms()) r.add(w, cx * cy * c);
        }
    return r;
}

}  // namespace greenbox::dihedral
