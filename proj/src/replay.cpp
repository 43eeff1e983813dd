#include "superder/replay.hpp"

#include <sstream>
#include <stdexcept>

namespace superder {

namespace {

Element parse_combo(const SuperAlgebra& alg,
                    std::initializer_list<std::pair<const char*, const char*>>
                        terms) {
    Element x(alg.dim());
    for (const auto& [name, coeff] : terms) {
        const auto idx = alg.index_of(name);
        if (!idx)
            throw ReplayFormatError("fact references unknown basis name '" +
                                    std::string(name) + "'");
        x.coords[*idx] += parse_rational(coeff);
    }
    return x;
}

NamedElement named(const SuperAlgebra& alg,
                   std::initializer_list<std::pair<const char*, const char*>>
                       terms) {
    Element x = parse_combo(alg, terms);
    return {format_element(alg, x), std::move(x)};
}

SymbolTerm inner_sym(const char* name, Rational coeff = 1) {
    return {SymbolTerm::Kind::Inner, name, std::move(coeff)};
}

SymbolTerm lambda_sym(Rational coeff = 1) {
    return {SymbolTerm::Kind::Lambda, "", std::move(coeff)};
}

/// b_{v,x}: witness coordinate v read at basis column x.
CoeffTerm bsym(const char* v, const char* x, Rational weight = 1) {
    return {std::move(weight), x, {inner_sym(v)}};
}

LemmaAssertion vanish(std::string name, CoeffTerm term) {
    return {std::move(name), std::nullopt, {std::move(term)}};
}

LemmaAssertion equal(std::string name, CoeffTerm lhs, CoeffTerm rhs) {
    rhs.weight = -rhs.weight;
    return {std::move(name), std::nullopt, {std::move(lhs), std::move(rhs)}};
}

/// Rows forcing M(x) = 0.
Matrix pin_rows(const SuperAlgebra& alg, const Element& x) {
    const std::size_t n = alg.dim();
    Matrix sys(n, n * n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j)
            if (x.coords[j] != 0)
                sys.at(k, j * n + k) = x.coords[j];
    return sys;
}

/// Resolves one CoeffTerm to a functional row over the n^2 map entries.
std::vector<Rational> resolve_term(const SuperAlgebra& alg,
                                   const LinearMap& delta,
                                   const CoeffTerm& term) {
    const std::size_t n = alg.dim();
    const auto col = alg.index_of(term.column);
    if (!col)
        throw ReplayFormatError("assertion references unknown basis name '" +
                                term.column + "'");
    // P: (b, lam) -> [b, x_col] + lam * delta(x_col), an n x (n+1) matrix
    Matrix pt(n + 1, n);  // transpose, for the solve below
    for (std::size_t i = 0; i < n; ++i) {
        const Element& img = alg.structure(i, *col);
        for (std::size_t k = 0; k < n; ++k)
            pt.at(i, k) = img.coords[k];
    }
    Element dcol(n);
    dcol.coords[*col] = 1;
    const Element dimg = delta.apply(dcol);
    for (std::size_t k = 0; k < n; ++k)
        pt.at(n, k) = dimg.coords[k];

    std::vector<Rational> phi(n + 1);
    for (const SymbolTerm& s : term.symbol) {
        if (s.kind == SymbolTerm::Kind::Lambda) {
            phi[n] += s.coeff;
        } else {
            const auto idx = alg.index_of(s.inner_name);
            if (!idx)
                throw ReplayFormatError(
                    "assertion references unknown basis name '" + s.inner_name +
                    "'");
            phi[*idx] += s.coeff;
        }
    }
    const auto psi = solve(pt, phi);
    if (!psi)
        throw ReplayFormatError(
            "coefficient expression at column '" + term.column +
            "' does not factor through the evaluation map");
    std::vector<Rational> row(n * n);
    for (std::size_t k = 0; k < n; ++k)
        row[*col * n + k] = term.weight * (*psi)[k];
    return row;
}

std::vector<Rational> assertion_functional(const SuperAlgebra& alg,
                                           const LinearMap& delta,
                                           const LemmaAssertion& a) {
    std::vector<Rational> row(alg.dim() * alg.dim());
    for (const CoeffTerm& t : a.terms) {
        const std::vector<Rational> part = resolve_term(alg, delta, t);
        for (std::size_t i = 0; i < row.size(); ++i)
            row[i] += part[i];
    }
    return row;
}

AssertionResult check_assertion(const SuperAlgebra& alg,
                                const LinearMap& delta, const Subspace& space,
                                const LemmaAssertion& a) {
    AssertionResult res;
    res.name = a.name;
    const std::size_t n = alg.dim();
    if (a.column_zero) {
        const auto col = alg.index_of(*a.column_zero);
        if (!col)
            throw ReplayFormatError("assertion references unknown basis name '" +
                                    *a.column_zero + "'");
        for (std::size_t r = 0; r < space.dim(); ++r)
            for (std::size_t k = 0; k < n; ++k) {
                const Rational& v = space.basis().at(r, *col * n + k);
                if (v != 0) {
                    std::ostringstream os;
                    os << "column " << *a.column_zero << " entry at "
                       << alg.basis_name(k) << " is " << rational_str(v)
                       << " on basis vector " << r;
                    res.failure = os.str();
                    return res;
                }
            }
        res.passed = true;
        return res;
    }
    const std::vector<Rational> row = assertion_functional(alg, delta, a);
    for (std::size_t r = 0; r < space.dim(); ++r) {
        Rational v = 0;
        for (std::size_t i = 0; i < row.size(); ++i)
            if (row[i] != 0)
                v += row[i] * space.basis().at(r, i);
        if (v != 0) {
            std::ostringstream os;
            os << "functional evaluates to " << rational_str(v)
               << " on basis vector " << r;
            res.failure = os.str();
            return res;
        }
    }
    res.passed = true;
    return res;
}

}  // namespace

ReplayConfig builtin_lemma_facts(const SuperAlgebra& alg) {
    ReplayConfig cfg;
    auto ne = [&](std::initializer_list<std::pair<const char*, const char*>> t) {
        return named(alg, t);
    };

    LemmaFact l2;
    l2.label = "1";
    l2.probes = {ne({{"h", "1"}}), ne({{"z", "1"}})};
    l2.pins = {ne({{"h", "1"}, {"z", "1"}})};
    l2.assertions = {{"Delta(h)=0", "h", {}}, {"Delta(z)=0", "z", {}}};

    LemmaFact l3;
    l3.label = "2";
    l3.probes = {ne({{"e", "1"}}), ne({{"f", "1"}}),
                 ne({{"h", "1"}, {"e", "1"}}), ne({{"h", "1"}, {"f", "1"}})};
    l3.assertions = {vanish("b_{f,e}=0", bsym("f", "e")),
                     vanish("b_{e,f}=0", bsym("e", "f"))};

    LemmaFact l4;
    l4.label = "3";
    l4.probes = {ne({{"p", "1"}}),
                 ne({{"q", "1"}}),
                 ne({{"h", "1"}, {"p", "1"}}),
                 ne({{"h", "1"}, {"q", "1"}}),
                 ne({{"e", "1"}, {"p", "1"}}),
                 ne({{"f", "1"}, {"q", "1"}})};
    l4.assertions = {vanish("b_{F,p}=0", bsym("F", "p")),
                     vanish("b_{E,q}=0", bsym("E", "q")),
                     vanish("b_{F,e}=0", bsym("F", "e")),
                     vanish("b_{f,p}=0", bsym("f", "p")),
                     vanish("b_{E,f}=0", bsym("E", "f")),
                     vanish("b_{e,q}=0", bsym("e", "q"))};

    LemmaFact l5;
    l5.label = "4";
    l5.probes = {ne({{"E", "1"}}),
                 ne({{"F", "1"}}),
                 ne({{"G", "1"}}),
                 ne({{"h", "1"}, {"E", "1"}}),
                 ne({{"h", "1"}, {"F", "1"}}),
                 ne({{"e", "1"}, {"f", "-1"}, {"h", "1"}}),
                 ne({{"E", "1"}, {"F", "1"}}),
                 ne({{"E", "1"}, {"G", "1"}}),
                 ne({{"F", "1"}, {"G", "1"}})};
    l5.assertions = {vanish("b_{q,E}=0", bsym("q", "E")),
                     vanish("b_{p,F}=0", bsym("p", "F")),
                     equal("b_{p,f}=b_{q,e}", bsym("p", "f"), bsym("q", "e")),
                     equal("b_{G,E}=b_{G,F}", bsym("G", "E"), bsym("G", "F")),
                     equal("b_{F,E}=b_{F,G}", bsym("F", "E"), bsym("F", "G")),
                     equal("b_{E,F}=b_{E,G}", bsym("E", "F"), bsym("E", "G"))};

    LemmaFact l6;
    l6.label = "5";
    l6.probes = {ne({{"e", "1"}, {"f", "1"}, {"E", "1"}, {"F", "1"}}),
                 ne({{"e", "1"}, {"f", "1"}})};
    l6.assertions = {vanish("b_{q,e}=0", bsym("q", "e")),
                     equal("b_{h,e}=b_{h,f}", bsym("h", "e"), bsym("h", "f"))};

    LemmaFact l7;
    l7.label = "6";
    l7.probes = {ne({{"e", "1"}, {"G", "1"}}),
                 ne({{"f", "1"}, {"G", "1"}}),
                 ne({{"E", "1"}, {"F", "1"}, {"G", "1"}}),
                 ne({{"e", "1"}, {"p", "1"}, {"E", "1"}}),
                 ne({{"q", "1"}, {"F", "1"}}),
                 ne({{"f", "1"}, {"p", "1"}, {"E", "1"}}),
                 ne({{"e", "1"}, {"F", "1"}}),
                 ne({{"f", "1"}, {"E", "1"}})};
    l7.assertions = {vanish("b_{F,E}=0", bsym("F", "E")),
                     vanish("b_{E,F}=0", bsym("E", "F")),
                     equal("b_{E,E}=b_{F,F}", bsym("E", "E"), bsym("F", "F")),
                     vanish("b_{f,E}=0", bsym("f", "E")),
                     vanish("b_{q,p}=0", bsym("q", "p")),
                     vanish("b_{e,F}=0", bsym("e", "F")),
                     vanish("b_{p,q}=0", bsym("p", "q")),
                     vanish("b_{E,E}=0", bsym("E", "E")),
                     vanish("b_{F,F}=0", bsym("F", "F")),
                     equal("b_{h,F}=b_{h,e}", bsym("h", "F"), bsym("h", "e")),
                     equal("b_{h,E}=b_{h,e}", bsym("h", "E"), bsym("h", "e"))};

    LemmaFact l8;
    l8.label = "7";
    l8.probes = {ne({{"E", "1"}, {"F", "-1"}, {"G", "1"}}),
                 ne({{"f", "1"}, {"q", "1"}, {"z", "-1/2"}}),
                 ne({{"e", "1"}, {"p", "1"}, {"z", "1/2"}}),
                 ne({{"p", "1"}, {"q", "1"}, {"E", "1"}, {"F", "-1"}, {"G", "1"}}),
                 ne({{"h", "1"}, {"q", "1"}, {"E", "1"}, {"G", "1"}})};
    l8.assertions = {
        equal("b_{G,G}=b_{G,E}", bsym("G", "G"), bsym("G", "E")),
        equal("-b_{h,q}+lam_q=-b_{h,e}",
              {1, "q", {inner_sym("h", -1), lambda_sym()}},
              {-1, "e", {inner_sym("h")}}),
        equal("b_{h,p}+lam_p=b_{h,e}",
              {1, "p", {inner_sym("h"), lambda_sym()}}, bsym("h", "e")),
        vanish("lam_G=0", {1, "G", {lambda_sym()}})};

    cfg.lemmas = {l2, l3, l4, l5, l6, l7, l8};
    cfg.final_ad_span = {"h", "G"};
    cfg.reconstruction = {{"h", bsym("h", "e")}, {"G", bsym("G", "E")}};
    cfg.reconstruction_display =
        "nabla = D_{h+z} + ad(b_{h,e}*h + b_{G,E}*G)";
    return cfg;
}

ReplayTranscript replay(const SuperAlgebra& alg, const ReplayConfig& config) {
    if (!alg.is_valid())
        throw std::invalid_argument("replay: algebra has axiom violations");
    const std::size_t n = alg.dim();
    const DerivationSpace der = derivation_space(alg);
    const LinearMap delta = delta_map();
    if (delta.dim() != n)
        throw ReplayFormatError("replay facts require a 9-dimensional algebra");

    ReplayTranscript out;
    Subspace space = Subspace::full(n * n);
    bool all = true;
    for (const LemmaFact& fact : config.lemmas) {
        for (const NamedElement& p : fact.probes)
            space = detail::impose(space,
                                   detail::constraint_rows(alg, der, p.value));
        for (const NamedElement& pin : fact.pins)
            space = detail::impose(space, pin_rows(alg, pin.value));
        LemmaResult lr;
        lr.label = fact.label;
        lr.dim_after = space.dim();
        for (const LemmaAssertion& a : fact.assertions) {
            AssertionResult ar = check_assertion(alg, delta, space, a);
            all = all && ar.passed;
            lr.assertions.push_back(std::move(ar));
        }
        out.lemmas.push_back(std::move(lr));
    }
    out.final_dim = space.dim();

    if (!config.final_ad_span.empty()) {
        std::vector<std::vector<Rational>> gens;
        for (const std::string& name : config.final_ad_span) {
            const auto idx = alg.index_of(name);
            if (!idx)
                throw ReplayFormatError("final span references unknown basis "
                                        "name '" + name + "'");
            Element x(n);
            x.coords[*idx] = 1;
            gens.push_back(ad(alg, x).flatten());
        }
        out.final_matches_ad_span =
            (space == Subspace::span(n * n, gens));
        all = all && out.final_matches_ad_span;
    }

    if (!config.reconstruction.empty() && out.final_matches_ad_span) {
        bool ok = true;
        for (std::size_t r = 0; r < space.dim() && ok; ++r) {
            const std::vector<Rational> v = space.basis().row(r);
            Element combo(n);
            for (const ReconstructionPart& part : config.reconstruction) {
                const auto idx = alg.index_of(part.inner_name);
                if (!idx)
                    throw ReplayFormatError("reconstruction references unknown "
                                            "basis name '" + part.inner_name +
                                            "'");
                const std::vector<Rational> row =
                    resolve_term(alg, delta, part.coefficient);
                Rational value = 0;
                for (std::size_t i = 0; i < row.size(); ++i)
                    if (row[i] != 0)
                        value += row[i] * v[i];
                combo.coords[*idx] += value;
            }
            ok = (ad(alg, combo).flatten() == v);
        }
        out.reconstruction_verified = ok;
        if (ok)
            out.reconstruction = config.reconstruction_display;
        all = all && ok;
    }

    out.all_passed = all;
    return out;
}

}  // namespace superder
