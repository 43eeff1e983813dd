#include "superder/localder.hpp"

#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

namespace superder {

namespace {

struct ProbeTerm {
    const char* basis;
    const char* coeff;
};

struct ProbeDef {
    std::vector<ProbeTerm> terms;
};

// 27 mixed sums plus the gap-closing probe h+q+E+G; basis probes follow.
const std::vector<ProbeDef>& probe_defs() {
    static const std::vector<ProbeDef> defs = {
        {{{"h", "1"}, {"z", "1"}}},
        {{{"h", "1"}, {"e", "1"}}},
        {{{"h", "1"}, {"f", "1"}}},
        {{{"h", "1"}, {"p", "1"}}},
        {{{"h", "1"}, {"q", "1"}}},
        {{{"e", "1"}, {"p", "1"}}},
        {{{"f", "1"}, {"q", "1"}}},
        {{{"h", "1"}, {"E", "1"}}},
        {{{"h", "1"}, {"F", "1"}}},
        {{{"e", "1"}, {"f", "-1"}, {"h", "1"}}},
        {{{"E", "1"}, {"F", "1"}}},
        {{{"E", "1"}, {"G", "1"}}},
        {{{"F", "1"}, {"G", "1"}}},
        {{{"e", "1"}, {"f", "1"}, {"E", "1"}, {"F", "1"}}},
        {{{"e", "1"}, {"f", "1"}}},
        {{{"e", "1"}, {"G", "1"}}},
        {{{"f", "1"}, {"G", "1"}}},
        {{{"E", "1"}, {"F", "1"}, {"G", "1"}}},
        {{{"e", "1"}, {"p", "1"}, {"E", "1"}}},
        {{{"q", "1"}, {"F", "1"}}},
        {{{"f", "1"}, {"p", "1"}, {"E", "1"}}},
        {{{"e", "1"}, {"F", "1"}}},
        {{{"f", "1"}, {"E", "1"}}},
        {{{"E", "1"}, {"F", "-1"}, {"G", "1"}}},
        {{{"f", "1"}, {"q", "1"}, {"z", "-1/2"}}},
        {{{"e", "1"}, {"p", "1"}, {"z", "1/2"}}},
        {{{"p", "1"}, {"q", "1"}, {"E", "1"}, {"F", "-1"}, {"G", "1"}}},
        {{{"h", "1"}, {"q", "1"}, {"E", "1"}, {"G", "1"}}},
    };
    return defs;
}

std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t bound) {
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t v;
    do {
        v = gen();
    } while (v >= limit);
    return v % bound;
}

}  // namespace

namespace detail {

Matrix constraint_rows(const SuperAlgebra& alg, const DerivationSpace& der,
                       const Element& x) {
    const std::size_t n = alg.dim();
    if (x.is_zero())
        throw std::invalid_argument("probe_constraint: probe must be nonzero");
    const Subspace ann = annihilator(orbit(alg, der, x));
    // row per annihilator functional w: sum_k w_k M(k, x) = 0, linear in the
    // column-major flattened entries of M
    Matrix rows(ann.dim(), n * n);
    for (std::size_t r = 0; r < ann.dim(); ++r)
        for (std::size_t k = 0; k < n; ++k) {
            const Rational& wk = ann.basis().at(r, k);
            if (wk == 0)
                continue;
            for (std::size_t j = 0; j < n; ++j)
                if (x.coords[j] != 0)
                    rows.at(r, j * n + k) += wk * x.coords[j];
        }
    return rows;
}

Subspace impose(const Subspace& space, const Matrix& rows) {
    if (rows.rows() == 0 || space.dim() == 0)
        return space;
    const std::size_t d = space.dim();
    const std::size_t ambient = space.ambient_dim();
    // restrict the functionals to the space's own coordinates
    Matrix m(rows.rows(), d);
    for (std::size_t i = 0; i < rows.rows(); ++i)
        for (std::size_t t = 0; t < ambient; ++t) {
            const Rational& rit = rows.at(i, t);
            if (rit == 0)
                continue;
            for (std::size_t j = 0; j < d; ++j)
                if (space.basis().at(j, t) != 0)
                    m.at(i, j) += rit * space.basis().at(j, t);
        }
    const Subspace ker = nullspace(m);
    std::vector<std::vector<Rational>> vecs;
    for (std::size_t k = 0; k < ker.dim(); ++k) {
        std::vector<Rational> v(ambient);
        for (std::size_t j = 0; j < d; ++j) {
            const Rational& kj = ker.basis().at(k, j);
            if (kj == 0)
                continue;
            for (std::size_t t = 0; t < ambient; ++t)
                if (space.basis().at(j, t) != 0)
                    v[t] += kj * space.basis().at(j, t);
        }
        vecs.push_back(std::move(v));
    }
    return Subspace::span(ambient, vecs);
}

}  // namespace detail

std::string format_element(const SuperAlgebra& alg, const Element& x) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < x.dim(); ++i) {
        const Rational& c = x.coords[i];
        if (c == 0)
            continue;
        if (c == 1)
            os << (first ? "" : "+");
        else if (c == -1)
            os << "-";
        else {
            if (!first && c > 0)
                os << "+";
            os << rational_str(c) << "*";
        }
        os << alg.basis_name(i);
        first = false;
    }
    return first ? "0" : os.str();
}

ProbeSet builtin_probes(const SuperAlgebra& alg) {
    ProbeSet out;
    const std::size_t n = alg.dim();
    for (const ProbeDef& def : probe_defs()) {
        Element x(n);
        for (const ProbeTerm& t : def.terms) {
            const auto idx = alg.index_of(t.basis);
            if (!idx)
                throw std::invalid_argument(
                    "builtin probes reference basis name '" +
                    std::string(t.basis) + "' which '" + alg.name() +
                    "' does not have");
            x.coords[*idx] += parse_rational(t.coeff);
        }
        out.probes.push_back({format_element(alg, x), std::move(x)});
    }
    for (std::size_t i = 0; i < n; ++i) {
        Element x(n);
        x.coords[i] = 1;
        out.probes.push_back({alg.basis_name(i), std::move(x)});
    }
    return out;
}

Subspace orbit(const SuperAlgebra& alg, const DerivationSpace& der,
               const Element& x) {
    const std::size_t n = alg.dim();
    if (x.dim() != n)
        throw std::invalid_argument("orbit: dimension mismatch");
    std::vector<std::vector<Rational>> vecs;
    for (std::size_t r = 0; r < der.total.dim(); ++r) {
        const LinearMap d = LinearMap::from_flat(der.total.basis().row(r));
        vecs.push_back(d.apply(x).coords);
    }
    return Subspace::span(n, vecs);
}

bool is_local_value(const SuperAlgebra& alg, const DerivationSpace& der,
                    const Element& x, const Element& v) {
    return orbit(alg, der, x).contains(v.coords);
}

Subspace probe_constraint(const SuperAlgebra& alg, const DerivationSpace& der,
                          const Element& x) {
    const std::size_t n = alg.dim();
    const Matrix rows = detail::constraint_rows(alg, der, x);
    if (rows.rows() == 0)
        return Subspace::full(n * n);
    return nullspace(rows);
}

Subspace probe_closure(const SuperAlgebra& alg, const DerivationSpace& der,
                       const ProbeSet& probes) {
    const std::size_t n = alg.dim();
    if (probes.probes.empty())
        throw std::invalid_argument("probe_closure: probe set is empty");
    Subspace closure = Subspace::full(n * n);
    for (const NamedElement& p : probes.probes)
        closure = detail::impose(closure,
                                 detail::constraint_rows(alg, der, p.value));
    return closure;
}

CertificationReport certify(const SuperAlgebra& alg, const ProbeSet& probes) {
    if (!alg.is_valid())
        throw std::invalid_argument("certify: algebra has axiom violations");
    const DerivationSpace der = derivation_space(alg);
    CertificationReport rep;
    rep.algebra = alg.name();
    for (const NamedElement& p : probes.probes)
        rep.probe_names.push_back(p.name);
    const Subspace closure = probe_closure(alg, der, probes);
    rep.dim_der = der.total.dim();
    rep.dim_closure = closure.dim();
    rep.verdict =
        rep.dim_closure == rep.dim_der ? Verdict::Certified : Verdict::Inconclusive;
    if (rep.verdict == Verdict::Inconclusive) {
        // quotient representatives: closure basis rows independent of Der
        Subspace grown = der.total;
        for (std::size_t r = 0; r < closure.dim(); ++r) {
            const std::vector<Rational> v = closure.basis().row(r);
            if (grown.contains(v))
                continue;
            grown = sum(grown, Subspace::span(closure.ambient_dim(), {v}));
            rep.gap.push_back(LinearMap::from_flat(v));
        }
    }
    return rep;
}

std::optional<Element> refute(const SuperAlgebra& alg,
                              const DerivationSpace& der,
                              const LinearMap& candidate, std::size_t trials,
                              std::uint64_t seed) {
    const std::size_t n = alg.dim();
    if (candidate.dim() != n)
        throw std::invalid_argument("refute: dimension mismatch");
    std::mt19937_64 gen(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        Element x(n);
        for (std::size_t i = 0; i < n; ++i) {
            const std::int64_t num =
                static_cast<std::int64_t>(uniform_below(gen, 21)) - 10;
            const std::uint64_t den = uniform_below(gen, 3) + 1;
            x.coords[i] = Rational(num, den);
        }
        if (x.is_zero())
            continue;
        if (!is_local_value(alg, der, x, candidate.apply(x)))
            return x;
    }
    return std::nullopt;
}

}  // namespace superder
