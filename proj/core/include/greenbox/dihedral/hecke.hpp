#pragma once

#include "greenbox/arith/laurent.hpp"

#include <map>
#include <string>

namespace greenbox::dihedral {

using arith::LaurentInt;

// Marks the infinite dihedral group in place of a finite n.
inline constexpr int kInfinite = 0;

// Reduced word in the dihedral group: empty, or the unique alternating word of
// the given length ending in `last`. In I2(n) the length-n word is w0 and
// carries last = 0.
struct DihedralWord {
    int length = 0;
    int last = 0;

    static DihedralWord identity() { return {}; }
    static DihedralWord longest(int n) { return {n, 0}; }
    // Alternating word of length k ending in `last`, collapsed to w0 when k == n.
    static DihedralWord make(int k, int last, int n = kInfinite);

    bool is_identity() const { return length == 0; }
    int first() const;
    std::string to_string() const;  // "e" for the identity, letters otherwise

    friend bool operator==(const DihedralWord&, const DihedralWord&) = default;
    friend auto operator<=>(const DihedralWord&, const DihedralWord&) = default;
};

// Accepts "e", "" or an alternating string over {1,2}.
DihedralWord parse_word(const std::string& text, int n = kInfinite);

// Element of the Hecke algebra in the KL basis.
class HeckeElement {
public:
    HeckeElement() = default;
    HeckeElement(const DihedralWord& w) { add(w, LaurentInt(1)); }

    void add(const DihedralWord& w, const LaurentInt& c);
    const std::map<DihedralWord, LaurentInt>& terms() const { return terms_; }
    LaurentInt coeff(const DihedralWord& w) const;
    bool is_zero() const { return terms_.empty(); }

    HeckeElement& operator+=(const HeckeElement& o);
    friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

    // Coefficients as Laurent polynomials, longest words last.
    std::string to_string() const;
    // Bar-invariant coefficients written through [2]_i = v^i + v^-i.
    std::string to_bracket_string() const;

private:
    std::map<DihedralWord, LaurentInt> terms_;
};

// Sum of c_i [2]_i for a bar-invariant Laurent polynomial, e.g. "[2]_3+2[2]";
// falls back to the plain form otherwise.
std::string bracket_form(const LaurentInt& c);

// Product in the infinite dihedral Hecke algebra (scaled Clebsch-Gordan rule).
HeckeElement cg_multiply_infinite(const DihedralWord& x, const DihedralWord& y);

// Product in the Hecke algebra of I2(n): the infinite product with every term
// of length n + d folded onto its mirror n - d as [2]_d b_{w0}.
HeckeElement cg_multiply_finite(int n, const DihedralWord& x, const DihedralWord& y);

HeckeElement multiply(int n, const HeckeElement& a, const HeckeElement& b);

}  // namespace greenbox::dihedral
