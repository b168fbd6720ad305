#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "ginvlab/scalar.hpp"

namespace ginvlab {

/// Raised on non-conforming shapes; the message names both shapes.
class shape_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Dense matrix over GQ, row-major, immutable in normal use (operations
/// return fresh values). Zero-dimension matrices are legal; they arise as
/// empty blocks of the core-nilpotent form.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    Mat(std::initializer_list<std::initializer_list<GQ>> rows);

    static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
    static Mat identity(std::size_t n);
    /// Parses every entry with GQ::parse; convenient for exact literals in tests.
    static Mat from_strings(const std::vector<std::vector<std::string>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_empty() const { return rows_ == 0 || cols_ == 0; }

    const GQ& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    GQ& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

    bool is_zero() const;
    bool is_hermitian() const { return *this == conj_transpose(); }

    Mat conj_transpose() const;

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat operator-() const;
    friend Mat operator*(const GQ& s, const Mat& m);

    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat submatrix(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
    void swap_rows(std::size_t a, std::size_t b);

    std::string shape_str() const {
        return std::to_string(rows_) + "x" + std::to_string(cols_);
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<GQ> e_;
};

/// [A | B] side by side.
Mat hstack(const Mat& a, const Mat& b);
/// A on top of B.
Mat vstack(const Mat& a, const Mat& b);
/// diag(A, B) with zero off-diagonal blocks; tolerates empty blocks.
Mat block_diag(const Mat& a, const Mat& b);

}  // namespace ginvlab
