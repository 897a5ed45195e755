#include "dynzeta/matrix.hpp"

#include <stdexcept>

namespace dynzeta {

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("matrix dimensions must be >= 1");
}

RationalMatrix::RationalMatrix(int rows, int cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("matrix dimensions must be >= 1");
    if (entries_.size() != static_cast<size_t>(rows) * static_cast<size_t>(cols))
        throw std::invalid_argument("matrix entry count does not match its shape");
}

size_t RationalMatrix::index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw std::out_of_range("matrix index out of range");
    return static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j);
}

RationalMatrix RationalMatrix::identity(int d) {
    RationalMatrix m(d, d);
    for (int i = 0; i < d; ++i) m.at(i, i) = Rational(1);
    return m;
}

RationalMatrix RationalMatrix::square(const std::vector<std::vector<Rational>>& rows) {
    int d = static_cast<int>(rows.size());
    RationalMatrix m(d, d);
    for (int i = 0; i < d; ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != d)
            throw std::invalid_argument("matrix rows must all have length equal to the dimension");
        for (int j = 0; j < d; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    return m;
}

int RationalMatrix::dimension() const {
    if (!is_square()) throw std::invalid_argument("operation requires a square matrix");
    return rows_;
}

RationalMatrix add(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix shapes do not match");
    RationalMatrix r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
    return r;
}

RationalMatrix sub(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix shapes do not match");
    RationalMatrix r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j) - b.at(i, j);
    return r;
}

RationalMatrix mul(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shapes not composable");
    RationalMatrix r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j)
                r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

RationalMatrix matrix_power(const RationalMatrix& a, int k) {
    int d = a.dimension();
    if (k < 0) throw std::invalid_argument("matrix power must be >= 0");
    RationalMatrix result = RationalMatrix::identity(d);
    RationalMatrix base = a;
    while (k > 0) {
        if (k & 1) result = mul(result, base);
        k >>= 1;
        if (k > 0) base = mul(base, base);
    }
    return result;
}

Rational determinant(const RationalMatrix& a) {
    int d = a.dimension();

    // Clear denominators row by row; det(A) = det(B) / prod(scales).
    std::vector<std::vector<Int>> m(static_cast<size_t>(d), std::vector<Int>(static_cast<size_t>(d)));
    Int scale_product = 1;
    for (int i = 0; i < d; ++i) {
        Int row_scale = 1;
        for (int j = 0; j < d; ++j)
            mpz_lcm(row_scale.get_mpz_t(), row_scale.get_mpz_t(),
                    a.at(i, j).denominator().get_mpz_t());
        for (int j = 0; j < d; ++j)
            m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                a.at(i, j).numerator() * (row_scale / a.at(i, j).denominator());
        scale_product *= row_scale;
    }

    // Bareiss fraction-free elimination over the integers.
    int sign = 1;
    Int prev_pivot = 1;
    for (int k = 0; k < d - 1; ++k) {
        if (m[static_cast<size_t>(k)][static_cast<size_t>(k)] == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < d; ++i) {
                if (m[static_cast<size_t>(i)][static_cast<size_t>(k)] != 0) { swap_row = i; break; }
            }
            if (swap_row < 0) return Rational();  // zero column, singular
            std::swap(m[static_cast<size_t>(k)], m[static_cast<size_t>(swap_row)]);
            sign = -sign;
        }
        for (int i = k + 1; i < d; ++i) {
            for (int j = k + 1; j < d; ++j) {
                Int num = m[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                              m[static_cast<size_t>(k)][static_cast<size_t>(k)] -
                          m[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                              m[static_cast<size_t>(k)][static_cast<size_t>(j)];
                mpz_divexact(m[static_cast<size_t>(i)][static_cast<size_t>(j)].get_mpz_t(),
                             num.get_mpz_t(), prev_pivot.get_mpz_t());
            }
            m[static_cast<size_t>(i)][static_cast<size_t>(k)] = 0;
        }
        prev_pivot = m[static_cast<size_t>(k)][static_cast<size_t>(k)];
    }
    Int det = m[static_cast<size_t>(d) - 1][static_cast<size_t>(d) - 1];
    if (sign < 0) det = -det;
    return Rational(det, scale_product);
}

Rational trace(const RationalMatrix& a) {
    int d = a.dimension();
    Rational t;
    for (int i = 0; i < d; ++i) t += a.at(i, i);
    return t;
}

Polynomial char_poly(const RationalMatrix& a) {
    int d = a.dimension();
    // Faddeev-LeVerrier: M_1 = A, c_{d-k} = -tr(M_k)/k, M_{k+1} = A (M_k + c_{d-k} I).
    std::vector<Rational> c(static_cast<size_t>(d) + 1);
    c[static_cast<size_t>(d)] = Rational(1);
    RationalMatrix m = a;
    for (int k = 1; k <= d; ++k) {
        c[static_cast<size_t>(d - k)] = -(trace(m) / Rational(k));
        if (k < d) {
            RationalMatrix shifted = m;
            for (int i = 0; i < d; ++i) shifted.at(i, i) += c[static_cast<size_t>(d - k)];
            m = mul(a, shifted);
        }
    }
    return Polynomial(std::move(c));
}

}  // namespace dynzeta
