#include "superder/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace superder {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

std::vector<Rational> Matrix::row(std::size_t r) const {
    std::vector<Rational> out(cols_);
    for (std::size_t c = 0; c < cols_; ++c)
        out[c] = at(r, c);
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix product: dimension mismatch");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a.at(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix sum: dimension mismatch");
    Matrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out.at(i, j) = a.at(i, j) + b.at(i, j);
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix difference: dimension mismatch");
    Matrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out.at(i, j) = a.at(i, j) - b.at(i, j);
    return out;
}

Matrix operator*(const Rational& c, const Matrix& m) {
    Matrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out.at(i, j) = c * m.at(i, j);
    return out;
}

RrefResult rref(Matrix m) {
    RrefResult res;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (m.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv == rows)
            continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(m.at(piv, j), m.at(r, j));
        const Rational inv = m.at(r, c);
        for (std::size_t j = c; j < cols; ++j)
            m.at(r, j) /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m.at(i, c) == 0)
                continue;
            const Rational f = m.at(i, c);
            for (std::size_t j = c; j < cols; ++j)
                m.at(i, j) -= f * m.at(r, j);
        }
        res.pivot_cols.push_back(c);
        ++r;
    }
    res.rank = r;
    res.reduced = std::move(m);
    return res;
}

std::optional<std::vector<Rational>> solve(const Matrix& m,
                                           const std::vector<Rational>& rhs) {
    if (rhs.size() != m.rows())
        throw std::invalid_argument("solve: rhs length != row count");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = rhs[i];
    }
    const RrefResult red = rref(std::move(aug));
    for (std::size_t pc : red.pivot_cols)
        if (pc == m.cols())
            return std::nullopt;  // pivot in the augmented column
    std::vector<Rational> v(m.cols());
    for (std::size_t r = 0; r < red.pivot_cols.size(); ++r)
        v[red.pivot_cols[r]] = red.reduced.at(r, m.cols());
    return v;
}

}  // namespace superder
