#include "superder/derivations.hpp"

#include <stdexcept>
#include <utility>

namespace superder {

namespace {

void require_super_schrodinger(const SuperAlgebra& alg, const char* op) {
    if (!structurally_equal(alg, catalog("super-schrodinger")))
        throw std::invalid_argument(std::string(op) +
                                    ": requires the super-schrodinger algebra");
}

}  // namespace

LinearMap::LinearMap(Matrix m, std::optional<int> degree,
                     const std::vector<int>* parities)
    : matrix_(std::move(m)), degree_(degree) {
    if (matrix_.rows() != matrix_.cols())
        throw std::invalid_argument("LinearMap: matrix must be square");
    if (degree_ && parities) {
        if (parities->size() != matrix_.rows())
            throw std::invalid_argument("LinearMap: parity list length mismatch");
        for (std::size_t i = 0; i < matrix_.cols(); ++i)
            for (std::size_t k = 0; k < matrix_.rows(); ++k)
                if (matrix_.at(k, i) != 0 &&
                    (*parities)[k] != ((*parities)[i] + *degree_) % 2)
                    throw std::invalid_argument(
                        "LinearMap: entry violates the declared degree");
    }
}

LinearMap LinearMap::identity_map(std::size_t n) {
    return LinearMap(Matrix::identity(n));
}

Element LinearMap::apply(const Element& x) const {
    const std::size_t n = dim();
    if (x.dim() != n)
        throw std::invalid_argument("LinearMap::apply: dimension mismatch");
    Element out(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (x.coords[j] == 0)
            continue;
        for (std::size_t k = 0; k < n; ++k)
            if (matrix_.at(k, j) != 0)
                out.coords[k] += matrix_.at(k, j) * x.coords[j];
    }
    return out;
}

std::vector<Rational> LinearMap::flatten() const {
    const std::size_t n = dim();
    std::vector<Rational> flat(n * n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            flat[j * n + k] = matrix_.at(k, j);
    return flat;
}

LinearMap LinearMap::from_flat(const std::vector<Rational>& flat) {
    std::size_t n = 0;
    while (n * n < flat.size())
        ++n;
    if (n * n != flat.size())
        throw std::invalid_argument("from_flat: length is not a perfect square");
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            m.at(k, j) = flat[j * n + k];
    return LinearMap(std::move(m));
}

LinearMap ad(const SuperAlgebra& alg, const Element& x) {
    const std::size_t n = alg.dim();
    if (x.dim() != n)
        throw std::invalid_argument("ad: dimension mismatch");
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Element bj(n);
        bj.coords[j] = 1;
        const Element img = alg.bracket(x, bj);
        for (std::size_t k = 0; k < n; ++k)
            m.at(k, j) = img.coords[k];
    }
    return LinearMap(std::move(m));
}

DerivationSpace derivation_space(const SuperAlgebra& alg) {
    if (!alg.is_valid())
        throw std::invalid_argument(
            "derivation_space: algebra has axiom violations");
    const std::size_t n = alg.dim();
    DerivationSpace out{Subspace(n * n), Subspace(n * n), Subspace(n * n)};
    for (int deg = 0; deg <= 1; ++deg) {
        std::vector<std::vector<Rational>> rows;
        // grading rows: inadmissible entries vanish
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                if (alg.parity(k) != (alg.parity(i) + deg) % 2) {
                    std::vector<Rational> row(n * n);
                    row[i * n + k] = 1;
                    rows.push_back(std::move(row));
                }
        // super-Leibniz rows per ordered pair and output coordinate
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Element& cij = alg.structure(i, j);
                const int sign = (deg * alg.parity(i)) % 2 ? -1 : 1;
                for (std::size_t k = 0; k < n; ++k) {
                    std::vector<Rational> row(n * n);
                    bool nonzero = false;
                    // D([x_i, x_j])_k = sum_l c_ij^l M(k, l)
                    for (std::size_t l = 0; l < n; ++l)
                        if (cij.coords[l] != 0) {
                            row[l * n + k] += cij.coords[l];
                            nonzero = true;
                        }
                    // -[D x_i, x_j]_k = -sum_l M(l, i) c_lj^k
                    for (std::size_t l = 0; l < n; ++l) {
                        const Rational& c = alg.structure(l, j).coords[k];
                        if (c != 0) {
                            row[i * n + l] -= c;
                            nonzero = true;
                        }
                    }
                    // -(-1)^{deg |x_i|} [x_i, D x_j]_k
                    for (std::size_t l = 0; l < n; ++l) {
                        const Rational& c = alg.structure(i, l).coords[k];
                        if (c != 0) {
                            row[j * n + l] -= Rational(sign) * c;
                            nonzero = true;
                        }
                    }
                    if (nonzero)
                        rows.push_back(std::move(row));
                }
            }
        Matrix sys(rows.size(), n * n);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < n * n; ++c)
                sys.at(r, c) = rows[r][c];
        (deg == 0 ? out.even : out.odd) = nullspace(sys);
    }
    out.total = sum(out.even, out.odd);
    return out;
}

Subspace inner_space(const SuperAlgebra& alg) {
    const std::size_t n = alg.dim();
    std::vector<std::vector<Rational>> vecs;
    for (std::size_t i = 0; i < n; ++i) {
        Element xi(n);
        xi.coords[i] = 1;
        vecs.push_back(ad(alg, xi).flatten());
    }
    return Subspace::span(n * n, vecs);
}

LinearMap delta_map() {
    const SuperAlgebra alg = catalog("super-schrodinger");
    const std::size_t n = alg.dim();
    Matrix m(n, n);
    m.at(*alg.index_of("p"), *alg.index_of("p")) = 1;
    m.at(*alg.index_of("q"), *alg.index_of("q")) = 1;
    m.at(*alg.index_of("z"), *alg.index_of("z")) = 2;
    m.at(*alg.index_of("G"), *alg.index_of("G")) = 1;
    return LinearMap(std::move(m), 0);
}

DerivationCheck is_derivation(const SuperAlgebra& alg, const LinearMap& d) {
    const std::size_t n = alg.dim();
    if (d.dim() != n)
        throw std::invalid_argument("is_derivation: dimension mismatch");
    for (int deg = 0; deg <= 1; ++deg) {
        // homogeneous component of degree deg
        Matrix comp(n, n);
        bool any = false;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                if (alg.parity(k) == (alg.parity(i) + deg) % 2) {
                    comp.at(k, i) = d.matrix().at(k, i);
                    if (comp.at(k, i) != 0)
                        any = true;
                }
        if (!any)
            continue;
        const LinearMap dc{comp};
        const int base_sign = deg;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Element ei(n), ej(n);
                ei.coords[i] = 1;
                ej.coords[j] = 1;
                const Element lhs = dc.apply(alg.structure(i, j));
                const int sign = (base_sign * alg.parity(i)) % 2 ? -1 : 1;
                Element rhs = alg.bracket(dc.apply(ei), ej) +
                              Rational(sign) * alg.bracket(ei, dc.apply(ej));
                if (!(lhs == rhs))
                    return {false, DerivationCheck::Counterexample{i, j, deg}};
            }
    }
    return {true, std::nullopt};
}

DerDecompositionReport verify_der_decomposition(const SuperAlgebra& alg) {
    require_super_schrodinger(alg, "verify_der_decomposition");
    DerDecompositionReport rep;
    const DerivationSpace der = derivation_space(alg);
    const Subspace inner = inner_space(alg);
    const LinearMap delta = delta_map();
    rep.dim_der = der.total.dim();
    rep.dim_inner = inner.dim();
    rep.delta_is_derivation = is_derivation(alg, delta).ok;
    rep.delta_not_inner = !inner.contains(delta.flatten());
    const Subspace delta_span =
        Subspace::span(alg.dim() * alg.dim(), {delta.flatten()});
    rep.inner_plus_delta_is_der = (sum(inner, delta_span) == der.total);
    rep.dim_der_is_inner_plus_one = (rep.dim_der == rep.dim_inner + 1);
    return rep;
}

std::optional<DerivationCoordinates> decompose(const SuperAlgebra& alg,
                                               const LinearMap& d) {
    require_super_schrodinger(alg, "decompose");
    const std::size_t n = alg.dim();
    // columns: vec(ad x_0), ..., vec(ad x_{n-1}), vec(delta)
    Matrix sys(n * n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        Element xi(n);
        xi.coords[i] = 1;
        const std::vector<Rational> flat = ad(alg, xi).flatten();
        for (std::size_t r = 0; r < n * n; ++r)
            sys.at(r, i) = flat[r];
    }
    const std::vector<Rational> dflat = delta_map().flatten();
    for (std::size_t r = 0; r < n * n; ++r)
        sys.at(r, n) = dflat[r];
    const auto sol = solve(sys, d.flatten());
    if (!sol)
        return std::nullopt;
    DerivationCoordinates out;
    out.inner = Element(std::vector<Rational>(sol->begin(), sol->begin() + n));
    out.outer = (*sol)[n];
    // ad(z) = 0, so the z column is free and the solver already reports it
    // as 0; pin it anyway so the normalization is explicit
    out.inner.coords[*alg.index_of("z")] = 0;
    return out;
}

}  // namespace superder
