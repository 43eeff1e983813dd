#include "superder/subspace.hpp"

#include <stdexcept>
#include <utility>

namespace superder {

namespace {

Matrix rows_to_matrix(std::size_t ambient,
                      const std::vector<std::vector<Rational>>& vectors) {
    Matrix m(vectors.size(), ambient);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != ambient)
            throw std::invalid_argument("subspace: vector length != ambient dim");
        for (std::size_t j = 0; j < ambient; ++j)
            m.at(i, j) = vectors[i][j];
    }
    return m;
}

Matrix drop_zero_rows(const Matrix& reduced, std::size_t rank) {
    Matrix out(rank, reduced.cols());
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < reduced.cols(); ++j)
            out.at(i, j) = reduced.at(i, j);
    return out;
}

}  // namespace

Subspace::Subspace(std::size_t ambient_dim)
    : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::span(std::size_t ambient_dim,
                        const std::vector<std::vector<Rational>>& vectors) {
    Subspace s(ambient_dim);
    if (vectors.empty())
        return s;
    const RrefResult red = rref(rows_to_matrix(ambient_dim, vectors));
    s.basis_ = drop_zero_rows(red.reduced, red.rank);
    return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
    Subspace s(ambient_dim);
    s.basis_ = Matrix::identity(ambient_dim);
    return s;
}

bool Subspace::contains(const std::vector<Rational>& v) const {
    if (v.size() != ambient_)
        throw std::invalid_argument("contains: vector length != ambient dim");
    // reduce v against the RREF basis; membership iff the residue vanishes
    std::vector<Rational> residue = v;
    for (std::size_t r = 0; r < basis_.rows(); ++r) {
        std::size_t pivot = ambient_;
        for (std::size_t c = 0; c < ambient_; ++c)
            if (basis_.at(r, c) != 0) {
                pivot = c;
                break;
            }
        const Rational f = residue[pivot];
        if (f != 0)
            for (std::size_t j = pivot; j < ambient_; ++j)
                residue[j] -= f * basis_.at(r, j);
    }
    for (const Rational& x : residue)
        if (x != 0)
            return false;
    return true;
}

Subspace nullspace(const Matrix& m) {
    const std::size_t cols = m.cols();
    const RrefResult red = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t pc : red.pivot_cols)
        is_pivot[pc] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc])
            continue;
        std::vector<Rational> v(cols);
        v[fc] = 1;
        for (std::size_t r = 0; r < red.pivot_cols.size(); ++r)
            v[red.pivot_cols[r]] = -red.reduced.at(r, fc);
        basis.push_back(std::move(v));
    }
    return Subspace::span(cols, basis);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("intersect: ambient dimension mismatch");
    const std::size_t n = a.ambient_dim();
    if (a.dim() == 0 || b.dim() == 0)
        return Subspace(n);
    // kernel of [A^T | -B^T]: coefficient pairs with equal combinations
    const std::size_t ka = a.dim();
    const std::size_t kb = b.dim();
    Matrix sys(n, ka + kb);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t i = 0; i < ka; ++i)
            sys.at(r, i) = a.basis().at(i, r);
        for (std::size_t i = 0; i < kb; ++i)
            sys.at(r, ka + i) = -b.basis().at(i, r);
    }
    const Subspace ker = nullspace(sys);
    std::vector<std::vector<Rational>> vecs;
    for (std::size_t k = 0; k < ker.dim(); ++k) {
        std::vector<Rational> v(n);
        for (std::size_t i = 0; i < ka; ++i) {
            const Rational& ci = ker.basis().at(k, i);
            if (ci == 0)
                continue;
            for (std::size_t r = 0; r < n; ++r)
                v[r] += ci * a.basis().at(i, r);
        }
        vecs.push_back(std::move(v));
    }
    return Subspace::span(n, vecs);
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("sum: ambient dimension mismatch");
    std::vector<std::vector<Rational>> vecs;
    for (std::size_t i = 0; i < a.dim(); ++i)
        vecs.push_back(a.basis().row(i));
    for (std::size_t i = 0; i < b.dim(); ++i)
        vecs.push_back(b.basis().row(i));
    return Subspace::span(a.ambient_dim(), vecs);
}

Subspace annihilator(const Subspace& s) {
    if (s.dim() == 0)
        return Subspace::full(s.ambient_dim());
    return nullspace(s.basis());
}

}  // namespace superder
