#pragma once

#include "greenbox/arith/matrix.hpp"
#include "greenbox/arith/number_field.hpp"
#include "greenbox/cells/based_algebra.hpp"
#include "greenbox/dihedral/hecke.hpp"

#include <string>
#include <vector>

namespace greenbox::dihedral {

using arith::IntPoly;
using arith::NumberFieldElem;
using arith::RatMatrix;
using arith::RatPoly;
using arith::Rational;

enum class VMode { Generic, One };

VMode parse_vmode(const std::string& text);  // "generic" | "v" | "1"
std::string to_string(VMode m);

inline constexpr int kMaxDihedralOrder = 15;
inline constexpr int kMaxMiddleOrder = 13;

// All 2n elements of I2(n): identity, then by length with words starting in 1
// first, then w0.
std::vector<DihedralWord> dihedral_elements(int n);

// KL basis of the Hecke algebra of I2(n) (over Z[v,v^-1], or Q at v = 1)
// with generators b1, b2 and the antiinvolution b_w -> b_{w^-1}.
cells::BasedAlgebra dihedral_based_algebra(int n, VMode mode);

// Cell labels "b", "m", "t" by length of the J-cell's shortest element; other
// cells fall back to their index.
std::vector<std::string> dihedral_cell_keys(int n, const std::vector<std::vector<int>>& jcells);

// P_{k+1} = ((X - [2]) / [2]) P_k - P_{k-1} with [2] specialized to `two`.
RatPoly p_poly(int k, const Rational& two = Rational(2));
// P'_{k+1} = (X - 1) P'_k - P'_{k-1}.
IntPoly p_prime_poly(int k);

// The H-cell of b1 in the middle J-cell modulo b_{w0}, on the scaled basis
// c_w = b_w / [2]. Its structure constants do not depend on v.
struct MiddleAlgebra {
    int n = 0;
    VMode mode = VMode::Generic;
    std::vector<DihedralWord> basis;              // odd lengths 1, 3, ..., n-2
    std::vector<std::vector<std::vector<Rational>>> table;  // table[i][j] = c_i c_j in coordinates
    RatMatrix generator_matrix;                   // c121 acting on the left; columns are images
    RatPoly minimal_polynomial;                   // monic
    bool matches_p = false;                       // equals P_{(n-1)/2} up to a scalar
    bool matches_p_prime = false;                 // equals P'_{(n-1)/2}
    bool commutative = false;
    bool semisimple = false;                      // gcd(m, m') = 1
    std::size_t simple_count = 0;
};

MiddleAlgebra middle_algebra(int n, VMode mode);

struct SandwichRank {
    std::string jcell;   // "b", "m" or "t"
    std::string factor;  // irreducible factor of the minimal polynomial, middle cell only
    int root = 0;        // which root of the factor, one entry per simple
    std::string matrix;  // rendering of the sandwich matrix
    std::size_t rank = 0;
};

// Bottom, one middle entry per root of the minimal polynomial; the
// rank is computed once per irreducible factor over Q[t]/(factor), then top.
std::vector<SandwichRank> dihedral_sandwich_ranks(int n, VMode mode);

struct DihedralSimple {
    std::string apex;    // "b", "m" or "t"
    std::string label;   // "unit" or the irreducible factor it belongs to
    std::size_t dim = 0;
};

struct DihedralSimples {
    int n = 0;
    VMode mode = VMode::Generic;
    std::vector<std::string> apexes;
    std::vector<DihedralSimple> simples;  // bottom first, over a splitting field
    std::size_t sum_of_squares = 0;
    bool semisimple = false;              // sum of squares equals 2n
};

DihedralSimples dihedral_simples(int n, VMode mode);

struct EigenvalueClass {
    IntPoly factor;                    // irreducible factor of P'_{(n-1)/2}
    std::vector<NumberFieldElem> roots;  // all its roots inside Q[t]/(factor)
    std::vector<double> approximations;
};

// Eigenvalues of c121 on the two-dimensional simples at v = 1.
std::vector<EigenvalueClass> dihedral_character_data(int n);

}  // namespace greenbox::dihedral
