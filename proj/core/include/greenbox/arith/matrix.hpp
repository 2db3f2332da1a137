#pragma once

#include "greenbox/arith/number_field.hpp"
#include "greenbox/arith/polynomial.hpp"
#include "greenbox/error.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace greenbox::arith {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols, const T& fill = T()) : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    T& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    template <class F>
    auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
        Matrix<decltype(f(std::declval<const T&>()))> r(rows_, cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

using RatMatrix = Matrix<Rational>;
using PolyMatrix = Matrix<IntPoly>;
using FieldMatrix = Matrix<NumberFieldElem>;
using IntMatrix = Matrix<Integer>;

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) throw InvalidInput("matrix product: shape mismatch");
    Matrix<T> r(a.rows(), b.cols(), T(0));
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            if (is_zero(a(i, k))) continue;
            for (size_t j = 0; j < b.cols(); ++j) r(i, j) = r(i, j) + a(i, k) * b(k, j);
        }
    return r;
}

namespace detail {

// Gaussian elimination over a field; returns rank and, if requested, the
// product of pivots with sign (the determinant when square and full rank).
template <class T>
size_t field_eliminate(Matrix<T> m, T* det_out) {
    size_t r = 0;
    bool negate = false;
    T det;
    bool have_det = false;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t p = r;
        while (p < m.rows() && is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        if (p != r) {
            for (size_t j = c; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
            negate = !negate;
        }
        T inv = T(m(r, c));
        if (det_out) {
            det = have_det ? T(det * inv) : inv;
            have_det = true;
        }
        for (size_t i = r + 1; i < m.rows(); ++i) {
            if (is_zero(m(i, c))) continue;
            T f = m(i, c) / inv;
            for (size_t j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
        }
        ++r;
    }
    if (det_out) {
        if (r < m.rows() || m.rows() != m.cols()) {
            *det_out = have_det ? T(det * Rational(0)) : T();
        } else {
            *det_out = negate ? T(-det) : det;
        }
    }
    return r;
}

}  // namespace detail

size_t matrix_rank(const RatMatrix& m);
size_t matrix_rank(const FieldMatrix& m);
// Rank over the fraction field Q(d), by fraction-free elimination.
size_t matrix_rank(const PolyMatrix& m);
size_t matrix_rank(const IntMatrix& m);
// Rank of an integer matrix reduced modulo a prime p < 2^31.
size_t matrix_rank_mod_p(const IntMatrix& m, std::int64_t p);

Rational matrix_det(const RatMatrix& m);
NumberFieldElem matrix_det(const FieldMatrix& m);
IntPoly matrix_det(const PolyMatrix& m);

RatMatrix evaluate(const PolyMatrix& m, const Rational& d);
FieldMatrix evaluate(const PolyMatrix& m, const NumberFieldElem& d);

RatMatrix identity_matrix(size_t n);

std::string to_string(const PolyMatrix& m, const std::string& var = "d");
std::string to_string(const RatMatrix& m);

}  // namespace greenbox::arith
