#ifndef PUREFIELD_MATRIX_HPP
#define PUREFIELD_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "purefield/arith.hpp"

namespace purefield {

class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const IntMatrix&) const = default;

    static IntMatrix identity(std::size_t n);

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

class RatMatrix {
  public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const RatMatrix&) const = default;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

// Exact determinant by Bareiss fraction-free elimination.
Int det_bareiss(const IntMatrix& m);

// Coefficients of det(xI - A), ascending degree, c[n] = 1.  Berkowitz's
// division-free scheme, so it is usable over Z and over Z/m alike.
std::vector<Int> charpoly(const IntMatrix& a);

// Same coefficients reduced mod `modulus` (> 1).  All intermediate values
// stay reduced, which keeps large matrices tractable when only divisibility
// by a prime power is wanted.
std::vector<Int> charpoly_mod(const IntMatrix& a, const Int& modulus);

// Row-style Hermite normal form of the span of `rows`: pivots positive,
// entries above each pivot reduced into [0, pivot), zero rows dropped.
// Unique for a given row span.
IntMatrix hnf(const std::vector<std::vector<Int>>& rows);

} // namespace purefield

#endif
