#pragma once

// Dense matrices over unbounded integers, plus the exact linear algebra the
// monodromy computations need: Kronecker products, fraction-free
// determinants and division-free characteristic polynomials.

#include <cstdint>
#include <vector>

#include "singlab/numeric.hpp"

namespace singlab {

class IntegerMatrix {
public:
    IntegerMatrix() : rows_(0), cols_(0) {}
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigInt& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigInt& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const IntegerMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    IntegerMatrix operator*(const IntegerMatrix& o) const;
    IntegerMatrix operator-(const IntegerMatrix& o) const;

private:
    std::size_t rows_, cols_;
    std::vector<BigInt> data_;
};

IntegerMatrix kronecker(const IntegerMatrix& a, const IntegerMatrix& b);

// Exact determinant by Bareiss fraction-free elimination.
BigInt determinant(const IntegerMatrix& m);

// Coefficients of det(t*I - M), ascending: c[0] + c[1] t + ... + c[n] t^n
// with c[n] = 1. Faddeev-LeVerrier with an overflow-checked int64/int128
// fast path and an unbounded-integer fallback.
std::vector<BigInt> characteristic_polynomial(const IntegerMatrix& m);

}  // namespace singlab
