#include "superder/superalgebra.hpp"

#include <set>
#include <sstream>
#include <utility>

namespace superder {

bool Element::is_zero() const {
    for (const Rational& c : coords)
        if (c != 0)
            return false;
    return true;
}

Element& Element::operator+=(const Element& other) {
    for (std::size_t i = 0; i < coords.size(); ++i)
        coords[i] += other.coords[i];
    return *this;
}

Element& Element::operator*=(const Rational& c) {
    for (Rational& x : coords)
        x *= c;
    return *this;
}

Element operator+(Element a, const Element& b) {
    a += b;
    return a;
}

Element operator*(const Rational& c, Element a) {
    a *= c;
    return a;
}

Element operator-(Element a) {
    for (Rational& x : a.coords)
        x = -x;
    return a;
}

std::optional<std::size_t> SuperAlgebra::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].name == name)
            return i;
    return std::nullopt;
}

SuperAlgebra SuperAlgebra::from_table(std::string name,
                                      std::vector<BasisVector> basis,
                                      const std::vector<BracketSpec>& brackets) {
    SuperAlgebra alg;
    alg.name_ = std::move(name);
    alg.basis_ = std::move(basis);
    const std::size_t n = alg.basis_.size();
    if (n == 0)
        throw AlgebraFormatError("algebra has an empty basis");

    std::set<std::string> seen;
    for (const BasisVector& b : alg.basis_) {
        if (b.parity != 0 && b.parity != 1)
            throw AlgebraFormatError("basis vector '" + b.name +
                                     "': parity must be 0 or 1");
        if (!seen.insert(b.name).second)
            throw AlgebraFormatError("duplicate basis name '" + b.name + "'");
    }

    alg.table_.assign(n * n, Element(n));
    std::vector<bool> given(n * n, false);
    for (const BracketSpec& sp : brackets) {
        const auto li = alg.index_of(sp.left);
        const auto ri = alg.index_of(sp.right);
        if (!li)
            throw AlgebraFormatError("bracket references unknown basis name '" +
                                     sp.left + "'");
        if (!ri)
            throw AlgebraFormatError("bracket references unknown basis name '" +
                                     sp.right + "'");
        if (given[*li * n + *ri])
            throw AlgebraFormatError("bracket [" + sp.left + ", " + sp.right +
                                     "] specified twice");
        given[*li * n + *ri] = true;
        Element value(n);
        for (const auto& [coeff, target] : sp.result) {
            const auto ti = alg.index_of(target);
            if (!ti)
                throw AlgebraFormatError("bracket [" + sp.left + ", " + sp.right +
                                         "] references unknown basis name '" +
                                         target + "'");
            Rational c;
            try {
                c = parse_rational(coeff);
            } catch (const std::invalid_argument& e) {
                throw AlgebraFormatError("bracket [" + sp.left + ", " + sp.right +
                                         "]: " + e.what());
            }
            value.coords[*ti] += c;
        }
        alg.table_[*li * n + *ri] = std::move(value);
    }

    // fill missing orientations by graded skew-symmetry:
    // [x_j, x_i] = -(-1)^{|i||j|} [x_i, x_j]
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || !given[i * n + j] || given[j * n + i])
                continue;
            const int sign = (alg.parity(i) * alg.parity(j)) % 2 ? 1 : -1;
            alg.table_[j * n + i] = Rational(sign) * alg.table_[i * n + j];
        }

    alg.check_axioms();
    return alg;
}

Element SuperAlgebra::bracket(const Element& x, const Element& y) const {
    const std::size_t n = dim();
    if (x.dim() != n || y.dim() != n)
        throw std::invalid_argument("bracket: element dimension mismatch");
    Element out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x.coords[i] == 0)
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y.coords[j] == 0)
                continue;
            const Rational c = x.coords[i] * y.coords[j];
            const Element& s = structure(i, j);
            for (std::size_t k = 0; k < n; ++k)
                if (s.coords[k] != 0)
                    out.coords[k] += c * s.coords[k];
        }
    }
    return out;
}

void SuperAlgebra::check_axioms() {
    const std::size_t n = dim();
    // grading: c_ij^k != 0 requires |k| = |i| + |j| mod 2
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Element& s = structure(i, j);
            for (std::size_t k = 0; k < n; ++k)
                if (s.coords[k] != 0 &&
                    parity(k) != (parity(i) + parity(j)) % 2) {
                    Element residual(n);
                    residual.coords[k] = s.coords[k];
                    violations_.push_back(
                        {Violation::Kind::Grading, {i, j, k}, residual});
                }
        }
    // graded skew-symmetry: [x_j, x_i] + (-1)^{|i||j|} [x_i, x_j] = 0
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const int sign = (parity(i) * parity(j)) % 2 ? -1 : 1;
            Element residual = structure(j, i) + Rational(sign) * structure(i, j);
            if (!residual.is_zero())
                violations_.push_back({Violation::Kind::Skew, {i, j, 0}, residual});
        }
    // graded Jacobi: [x,[y,z]] - [[x,y],z] - (-1)^{|z|(|x|+|y|)} [[z,x],y] = 0
    std::vector<Element> basis_el;
    for (std::size_t i = 0; i < n; ++i) {
        Element e(n);
        e.coords[i] = 1;
        basis_el.push_back(std::move(e));
    }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                Element lhs = bracket(basis_el[x], structure(y, z));
                Element t1 = bracket(structure(x, y), basis_el[z]);
                Element t2 = bracket(structure(z, x), basis_el[y]);
                const int sign =
                    (parity(z) * ((parity(x) + parity(y)) % 2)) % 2 ? -1 : 1;
                Element residual = lhs + (-t1) + Rational(-sign) * t2;
                if (!residual.is_zero())
                    violations_.push_back(
                        {Violation::Kind::Jacobi, {x, y, z}, residual});
            }
}

bool SuperAlgebra::is_ideal(const std::vector<std::size_t>& subset) const {
    const std::size_t n = dim();
    std::vector<std::vector<Rational>> span_vecs;
    for (std::size_t s : subset) {
        if (s >= n)
            throw std::invalid_argument("is_ideal: basis index out of range");
        std::vector<Rational> v(n);
        v[s] = 1;
        span_vecs.push_back(std::move(v));
    }
    const Subspace sub = Subspace::span(n, span_vecs);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t s : subset)
            if (!sub.contains(structure(i, s).coords))
                return false;
    return true;
}

Subspace SuperAlgebra::center() const {
    const std::size_t n = dim();
    // rows: for each (y, k), sum_i x_i c_iy^k = 0; unknowns are x coords
    Matrix sys(n * n, n);
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                sys.at(y * n + k, i) = structure(i, y).coords[k];
    return nullspace(sys);
}

bool structurally_equal(const SuperAlgebra& a, const SuperAlgebra& b) {
    if (a.dim() != b.dim())
        return false;
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (a.basis_name(i) != b.basis_name(i) || a.parity(i) != b.parity(i))
            return false;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (!(a.structure(i, j) == b.structure(i, j)))
                return false;
    return true;
}

std::string SuperAlgebra::describe_violation(const Violation& v) const {
    std::ostringstream os;
    switch (v.kind) {
        case Violation::Kind::Grading:
            os << "grading violated at [" << basis_name(v.at[0]) << ", "
               << basis_name(v.at[1]) << "] -> " << basis_name(v.at[2]);
            break;
        case Violation::Kind::Skew:
            os << "graded skew-symmetry violated at (" << basis_name(v.at[0])
               << ", " << basis_name(v.at[1]) << ")";
            break;
        case Violation::Kind::Jacobi:
            os << "graded Jacobi identity violated at (" << basis_name(v.at[0])
               << ", " << basis_name(v.at[1]) << ", " << basis_name(v.at[2])
               << ")";
            break;
    }
    return os.str();
}

}  // namespace superder
