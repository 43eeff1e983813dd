#ifndef SUPERDER_MATRIX_HPP
#define SUPERDER_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "superder/rational.hpp"

namespace superder {

/// Dense rational matrix, row-major.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    std::vector<Rational> row(std::size_t r) const;

    bool operator==(const Matrix&) const = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& c, const Matrix& m);

struct RrefResult {
    Matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

/// Unique reduced row-echelon form over the rationals.
RrefResult rref(Matrix m);

/// One particular solution of m*v = rhs, or nullopt when inconsistent.
/// Free variables are set to zero, so the result is canonical.
std::optional<std::vector<Rational>> solve(const Matrix& m,
                                           const std::vector<Rational>& rhs);

}  // namespace superder

#endif
