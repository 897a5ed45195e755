#pragma once

#include <vector>

#include "dynzeta/polynomial.hpp"
#include "dynzeta/rational.hpp"

namespace dynzeta {

/// Dense matrix of exact rationals. Rectangular shapes are allowed; the
/// spectral operations require square inputs and say so.
class RationalMatrix {
  public:
    RationalMatrix(int rows, int cols);
    RationalMatrix(int rows, int cols, std::vector<Rational> entries);

    static RationalMatrix identity(int d);
    /// Square matrix from a row-major list of rows.
    static RationalMatrix square(const std::vector<std::vector<Rational>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    int dimension() const;

    const Rational& at(int i, int j) const { return entries_[index(i, j)]; }
    Rational& at(int i, int j) { return entries_[index(i, j)]; }

    bool operator==(const RationalMatrix&) const = default;

  private:
    size_t index(int i, int j) const;
    int rows_, cols_;
    std::vector<Rational> entries_;
};

RationalMatrix add(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix sub(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix mul(const RationalMatrix& a, const RationalMatrix& b);
inline RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) { return add(a, b); }
inline RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) { return sub(a, b); }
inline RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) { return mul(a, b); }

/// A^k for square A, k >= 0 (A^0 = I).
RationalMatrix matrix_power(const RationalMatrix& a, int k);

/// Exact determinant by fraction-free (Bareiss) elimination on the
/// denominator-cleared integer matrix.
Rational determinant(const RationalMatrix& a);

/// Monic characteristic polynomial det(xI - A) by Faddeev-LeVerrier.
Polynomial char_poly(const RationalMatrix& a);

Rational trace(const RationalMatrix& a);

}  // namespace dynzeta
