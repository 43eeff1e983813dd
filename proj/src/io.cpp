#include "superder/io.hpp"

#include <fstream>
#include <sstream>

namespace superder::io {

namespace {

json element_map(const SuperAlgebra& alg, const Element& x) {
    json out = json::object();
    for (std::size_t i = 0; i < x.dim(); ++i)
        if (x.coords[i] != 0)
            out[alg.basis_name(i)] = rational_str(x.coords[i]);
    return out;
}

std::string require_string(const json& doc, const char* key,
                           const char* context) {
    if (!doc.contains(key) || !doc[key].is_string())
        throw AlgebraFormatError(std::string(context) + ": missing string field '" +
                                 key + "'");
    return doc[key].get<std::string>();
}

json load_json_file(const std::string& path, const char* what) {
    std::ifstream in(path);
    if (!in)
        throw AlgebraFormatError(std::string("cannot open ") + what + " file '" +
                                 path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw AlgebraFormatError(std::string("cannot parse ") + what + " file '" +
                                 path + "': " + e.what());
    }
    return doc;
}

std::string violation_kind(Violation::Kind k) {
    switch (k) {
        case Violation::Kind::Grading:
            return "grading";
        case Violation::Kind::Skew:
            return "skew";
        case Violation::Kind::Jacobi:
            return "jacobi";
    }
    return "?";
}

CoeffTerm coeff_term_from_json(const json& doc) {
    CoeffTerm term;
    if (doc.contains("weight"))
        term.weight = parse_rational(doc["weight"].get<std::string>());
    term.column = require_string(doc, "column", "assertion term");
    if (!doc.contains("symbol") || !doc["symbol"].is_array())
        throw ReplayFormatError("assertion term: missing 'symbol' array");
    for (const json& s : doc["symbol"]) {
        SymbolTerm st;
        if (s.contains("coeff"))
            st.coeff = parse_rational(s["coeff"].get<std::string>());
        if (s.contains("lambda") && s["lambda"].get<bool>()) {
            st.kind = SymbolTerm::Kind::Lambda;
        } else {
            st.kind = SymbolTerm::Kind::Inner;
            st.inner_name = require_string(s, "inner", "symbol term");
        }
        term.symbol.push_back(std::move(st));
    }
    return term;
}

json coeff_term_to_json(const CoeffTerm& term) {
    json out = json::object();
    out["weight"] = rational_str(term.weight);
    out["column"] = term.column;
    json syms = json::array();
    for (const SymbolTerm& s : term.symbol) {
        json sj = json::object();
        sj["coeff"] = rational_str(s.coeff);
        if (s.kind == SymbolTerm::Kind::Lambda)
            sj["lambda"] = true;
        else
            sj["inner"] = s.inner_name;
        syms.push_back(std::move(sj));
    }
    out["symbol"] = std::move(syms);
    return out;
}

}  // namespace

SuperAlgebra algebra_from_json(const json& doc) {
    if (!doc.is_object())
        throw AlgebraFormatError("algebra document must be a JSON object");
    const std::string name = require_string(doc, "name", "algebra");
    if (!doc.contains("basis") || !doc["basis"].is_array())
        throw AlgebraFormatError("algebra: missing 'basis' array");
    std::vector<BasisVector> basis;
    for (const json& b : doc["basis"]) {
        BasisVector v;
        v.name = require_string(b, "name", "basis entry");
        if (!b.contains("parity") || !b["parity"].is_number_integer())
            throw AlgebraFormatError("basis entry '" + v.name +
                                     "': missing integer field 'parity'");
        v.parity = b["parity"].get<int>();
        basis.push_back(std::move(v));
    }
    std::vector<BracketSpec> brackets;
    if (doc.contains("brackets")) {
        if (!doc["brackets"].is_array())
            throw AlgebraFormatError("algebra: 'brackets' must be an array");
        for (const json& e : doc["brackets"]) {
            BracketSpec sp;
            sp.left = require_string(e, "left", "bracket entry");
            sp.right = require_string(e, "right", "bracket entry");
            if (!e.contains("result") || !e["result"].is_array())
                throw AlgebraFormatError("bracket [" + sp.left + ", " + sp.right +
                                         "]: missing 'result' array");
            for (const json& t : e["result"]) {
                if (!t.is_array() || t.size() != 2 || !t[0].is_string() ||
                    !t[1].is_string())
                    throw AlgebraFormatError(
                        "bracket [" + sp.left + ", " + sp.right +
                        "]: result terms must be [coeff, basis] string pairs");
                sp.result.emplace_back(t[0].get<std::string>(),
                                       t[1].get<std::string>());
            }
            brackets.push_back(std::move(sp));
        }
    }
    return SuperAlgebra::from_table(name, std::move(basis), brackets);
}

SuperAlgebra load_algebra(const std::string& path) {
    return algebra_from_json(load_json_file(path, "algebra"));
}

json algebra_to_json(const SuperAlgebra& alg) {
    json doc = json::object();
    doc["name"] = alg.name();
    json basis = json::array();
    for (const BasisVector& b : alg.basis())
        basis.push_back({{"name", b.name}, {"parity", b.parity}});
    doc["basis"] = std::move(basis);
    json brackets = json::array();
    // one orientation per pair: (i, j) with i <= j, plus (j, i) entries whose
    // skew image is not already implied -- for a valid table i <= j suffices
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t j = i; j < alg.dim(); ++j) {
            const Element& s = alg.structure(i, j);
            if (s.is_zero())
                continue;
            json entry = json::object();
            entry["left"] = alg.basis_name(i);
            entry["right"] = alg.basis_name(j);
            json result = json::array();
            for (std::size_t k = 0; k < alg.dim(); ++k)
                if (s.coords[k] != 0)
                    result.push_back(json::array(
                        {rational_str(s.coords[k]), alg.basis_name(k)}));
            entry["result"] = std::move(result);
            brackets.push_back(std::move(entry));
        }
    doc["brackets"] = std::move(brackets);
    return doc;
}

Element element_from_json(const SuperAlgebra& alg, const json& doc) {
    if (!doc.is_object())
        throw AlgebraFormatError("element must be a coefficient map object");
    Element x(alg.dim());
    for (const auto& [key, val] : doc.items()) {
        const auto idx = alg.index_of(key);
        if (!idx)
            throw AlgebraFormatError("element references unknown basis name '" +
                                     key + "'");
        if (!val.is_string())
            throw AlgebraFormatError("element coefficient for '" + key +
                                     "' must be a rational string");
        x.coords[*idx] = parse_rational(val.get<std::string>());
    }
    return x;
}

json element_to_json(const SuperAlgebra& alg, const Element& x) {
    return element_map(alg, x);
}

ProbeSet probes_from_json(const SuperAlgebra& alg, const json& doc) {
    if (!doc.is_array())
        throw AlgebraFormatError("probe document must be a JSON array");
    ProbeSet out;
    for (const json& e : doc) {
        Element x = element_from_json(alg, e);
        if (x.is_zero())
            throw AlgebraFormatError("probe elements must be nonzero");
        out.probes.push_back({format_element(alg, x), std::move(x)});
    }
    if (out.probes.empty())
        throw AlgebraFormatError("probe document lists no probes");
    return out;
}

ProbeSet load_probes(const SuperAlgebra& alg, const std::string& path) {
    return probes_from_json(alg, load_json_file(path, "probe"));
}

json probes_to_json(const SuperAlgebra& alg, const ProbeSet& probes) {
    json out = json::array();
    for (const NamedElement& p : probes.probes)
        out.push_back(element_map(alg, p.value));
    return out;
}

ReplayConfig facts_from_json(const SuperAlgebra& alg, const json& doc) {
    if (!doc.is_object() || !doc.contains("lemmas") || !doc["lemmas"].is_array())
        throw ReplayFormatError("fact document must contain a 'lemmas' array");
    ReplayConfig cfg;
    for (const json& l : doc["lemmas"]) {
        LemmaFact fact;
        fact.label = require_string(l, "label", "lemma fact");
        for (const char* key : {"probes", "pins"}) {
            if (!l.contains(key))
                continue;
            for (const json& e : l[key]) {
                Element x = element_from_json(alg, e);
                NamedElement ne{format_element(alg, x), std::move(x)};
                (std::string(key) == "probes" ? fact.probes : fact.pins)
                    .push_back(std::move(ne));
            }
        }
        if (l.contains("assertions"))
            for (const json& a : l["assertions"]) {
                LemmaAssertion as;
                as.name = require_string(a, "name", "assertion");
                if (a.contains("column_zero"))
                    as.column_zero = a["column_zero"].get<std::string>();
                else if (a.contains("terms"))
                    for (const json& t : a["terms"])
                        as.terms.push_back(coeff_term_from_json(t));
                else
                    throw ReplayFormatError("assertion '" + as.name +
                                            "' has neither 'column_zero' nor "
                                            "'terms'");
                fact.assertions.push_back(std::move(as));
            }
        cfg.lemmas.push_back(std::move(fact));
    }
    if (doc.contains("final_ad_span"))
        for (const json& s : doc["final_ad_span"])
            cfg.final_ad_span.push_back(s.get<std::string>());
    if (doc.contains("reconstruction"))
        for (const json& r : doc["reconstruction"]) {
            ReconstructionPart part;
            part.inner_name = require_string(r, "inner", "reconstruction part");
            if (!r.contains("coeff_of"))
                throw ReplayFormatError("reconstruction part: missing 'coeff_of'");
            part.coefficient = coeff_term_from_json(r["coeff_of"]);
            cfg.reconstruction.push_back(std::move(part));
        }
    if (doc.contains("reconstruction_display"))
        cfg.reconstruction_display =
            doc["reconstruction_display"].get<std::string>();
    return cfg;
}

ReplayConfig load_facts(const SuperAlgebra& alg, const std::string& path) {
    return facts_from_json(alg, load_json_file(path, "fact"));
}

json facts_to_json(const SuperAlgebra& alg, const ReplayConfig& cfg) {
    json out = json::object();
    json lemmas = json::array();
    for (const LemmaFact& fact : cfg.lemmas) {
        json l = json::object();
        l["label"] = fact.label;
        json probes = json::array();
        for (const NamedElement& p : fact.probes)
            probes.push_back(element_map(alg, p.value));
        l["probes"] = std::move(probes);
        if (!fact.pins.empty()) {
            json pins = json::array();
            for (const NamedElement& p : fact.pins)
                pins.push_back(element_map(alg, p.value));
            l["pins"] = std::move(pins);
        }
        json asserts = json::array();
        for (const LemmaAssertion& a : fact.assertions) {
            json aj = json::object();
            aj["name"] = a.name;
            if (a.column_zero) {
                aj["column_zero"] = *a.column_zero;
            } else {
                json terms = json::array();
                for (const CoeffTerm& t : a.terms)
                    terms.push_back(coeff_term_to_json(t));
                aj["terms"] = std::move(terms);
            }
            asserts.push_back(std::move(aj));
        }
        l["assertions"] = std::move(asserts);
        lemmas.push_back(std::move(l));
    }
    out["lemmas"] = std::move(lemmas);
    out["final_ad_span"] = cfg.final_ad_span;
    json recon = json::array();
    for (const ReconstructionPart& part : cfg.reconstruction) {
        json r = json::object();
        r["inner"] = part.inner_name;
        r["coeff_of"] = coeff_term_to_json(part.coefficient);
        recon.push_back(std::move(r));
    }
    out["reconstruction"] = std::move(recon);
    out["reconstruction_display"] = cfg.reconstruction_display;
    return out;
}

json map_to_json(const LinearMap& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.dim(); ++c)
            row.push_back(rational_str(m.matrix().at(r, c)));
        rows.push_back(std::move(row));
    }
    return json{{"matrix", std::move(rows)}};
}

namespace {

json algebra_summary(const SuperAlgebra& alg) {
    json out = json::object();
    out["name"] = alg.name();
    out["dimension"] = alg.dim();
    json basis = json::array();
    for (const BasisVector& b : alg.basis())
        basis.push_back({{"name", b.name}, {"parity", b.parity}});
    out["basis"] = std::move(basis);
    return out;
}

json subspace_maps(const Subspace& s) {
    json out = json::array();
    for (std::size_t r = 0; r < s.dim(); ++r)
        out.push_back(map_to_json(LinearMap::from_flat(s.basis().row(r))));
    return out;
}

}  // namespace

json report_validate(const SuperAlgebra& alg, const std::string& input) {
    json out = json::object();
    out["command"] = "validate";
    out["input"] = input;
    out["algebra"] = algebra_summary(alg);
    out["valid"] = alg.is_valid();
    json viols = json::array();
    for (const Violation& v : alg.violations()) {
        json vj = json::object();
        vj["kind"] = violation_kind(v.kind);
        json at = json::array();
        const std::size_t arity = v.kind == Violation::Kind::Skew ? 2 : 3;
        for (std::size_t t = 0; t < arity; ++t)
            at.push_back(alg.basis_name(v.at[t]));
        vj["at"] = std::move(at);
        vj["residual"] = element_map(alg, v.residual);
        vj["detail"] = alg.describe_violation(v);
        viols.push_back(std::move(vj));
    }
    out["violations"] = std::move(viols);
    return out;
}

json report_derivations(const SuperAlgebra& alg, const std::string& input,
                        const std::string& degree) {
    const DerivationSpace der = derivation_space(alg);
    const Subspace inner = inner_space(alg);
    json out = json::object();
    out["command"] = "derivations";
    out["input"] = input;
    out["algebra"] = algebra_summary(alg);
    out["degree"] = degree;
    json dims = json::object();
    dims["even"] = der.even.dim();
    dims["odd"] = der.odd.dim();
    dims["total"] = der.total.dim();
    dims["inner"] = inner.dim();
    dims["outer_quotient"] = der.total.dim() - inner.dim();
    out["dims"] = std::move(dims);
    json bases = json::object();
    if (degree == "0" || degree == "all")
        bases["even"] = subspace_maps(der.even);
    if (degree == "1" || degree == "all")
        bases["odd"] = subspace_maps(der.odd);
    out["bases"] = std::move(bases);
    out["inner_basis"] = subspace_maps(inner);
    if (structurally_equal(alg, catalog("super-schrodinger"))) {
        const DerDecompositionReport rep = verify_der_decomposition(alg);
        json tj = json::object();
        tj["delta_is_derivation"] = rep.delta_is_derivation;
        tj["delta_not_inner"] = rep.delta_not_inner;
        tj["inner_plus_delta_is_der"] = rep.inner_plus_delta_is_der;
        tj["dim_der_is_inner_plus_one"] = rep.dim_der_is_inner_plus_one;
        tj["dim_der"] = rep.dim_der;
        tj["dim_inner"] = rep.dim_inner;
        tj["all"] = rep.all();
        out["der_decomposition"] = std::move(tj);
    }
    return out;
}

json report_local_check(const SuperAlgebra& alg, const std::string& input,
                        const CertificationReport& rep,
                        const std::string& probe_source, std::size_t trials,
                        std::uint64_t seed) {
    json out = json::object();
    out["command"] = "local-check";
    out["input"] = input;
    out["algebra"] = algebra_summary(alg);
    json dims = json::object();
    dims["der"] = rep.dim_der;
    dims["closure"] = rep.dim_closure;
    out["dims"] = std::move(dims);
    json probes = json::object();
    probes["source"] = probe_source;
    probes["count"] = rep.probe_names.size();
    probes["names"] = rep.probe_names;
    out["probes"] = std::move(probes);
    out["verdict"] =
        rep.verdict == Verdict::Certified ? "certified" : "inconclusive";
    out["soundness"] =
        "Der is contained in LocDer is contained in the probe closure, so "
        "dim closure = dim Der proves LocDer = Der; an inconclusive verdict "
        "proves nothing about the existence of strictly local maps.";
    json gap = json::array();
    for (const LinearMap& g : rep.gap)
        gap.push_back(map_to_json(g));
    out["gap_basis"] = std::move(gap);
    json refs = json::array();
    for (const RefutationWitness& w : rep.refutations) {
        json rj = json::object();
        rj["gap_index"] = w.gap_index;
        rj["witness"] = element_map(alg, w.witness);
        refs.push_back(std::move(rj));
    }
    out["refutations"] = std::move(refs);
    out["refute_trials"] = trials;
    out["seed"] = seed;
    return out;
}

json report_replay(const SuperAlgebra& alg, const std::string& input,
                   const ReplayTranscript& transcript) {
    json out = json::object();
    out["command"] = "replay";
    out["input"] = input;
    out["algebra"] = algebra_summary(alg);
    json lemmas = json::array();
    for (const LemmaResult& lr : transcript.lemmas) {
        json lj = json::object();
        lj["label"] = lr.label;
        lj["dim_after"] = lr.dim_after;
        json asserts = json::array();
        for (const AssertionResult& ar : lr.assertions) {
            json aj = json::object();
            aj["name"] = ar.name;
            aj["passed"] = ar.passed;
            if (!ar.passed)
                aj["failure"] = ar.failure;
            asserts.push_back(std::move(aj));
        }
        lj["assertions"] = std::move(asserts);
        lemmas.push_back(std::move(lj));
    }
    out["lemmas"] = std::move(lemmas);
    json fin = json::object();
    fin["dim"] = transcript.final_dim;
    fin["matches_ad_span"] = transcript.final_matches_ad_span;
    fin["reconstruction_verified"] = transcript.reconstruction_verified;
    fin["reconstruction"] = transcript.reconstruction;
    out["final"] = std::move(fin);
    out["passed"] = transcript.all_passed;
    return out;
}

json report_catalog() {
    json out = json::object();
    out["command"] = "catalog";
    json algebras = json::array();
    for (const std::string& name : catalog_names()) {
        const SuperAlgebra alg = catalog(name);
        json aj = json::object();
        aj["name"] = name;
        aj["dimension"] = alg.dim();
        std::size_t even = 0;
        for (std::size_t i = 0; i < alg.dim(); ++i)
            if (alg.parity(i) == 0)
                ++even;
        aj["even_dim"] = even;
        aj["odd_dim"] = alg.dim() - even;
        algebras.push_back(std::move(aj));
    }
    out["algebras"] = std::move(algebras);
    return out;
}

std::string report_to_text(const json& report) {
    std::ostringstream os;
    const std::string cmd = report.value("command", "");
    if (cmd == "catalog") {
        for (const json& a : report["algebras"])
            os << a["name"].get<std::string>() << "  dim "
               << a["dimension"].get<std::size_t>() << " ("
               << a["even_dim"].get<std::size_t>() << " even, "
               << a["odd_dim"].get<std::size_t>() << " odd)\n";
        return os.str();
    }
    os << cmd << " " << report.value("input", "") << "\n";
    if (cmd == "validate") {
        if (report["valid"].get<bool>()) {
            os << "valid: all grading, skew and Jacobi checks hold\n";
        } else {
            os << "INVALID: " << report["violations"].size()
               << " violation(s)\n";
            for (const json& v : report["violations"])
                os << "  " << v["detail"].get<std::string>() << "\n";
        }
    } else if (cmd == "derivations") {
        const json& d = report["dims"];
        os << "dim Der = " << d["total"].get<std::size_t>() << " (even "
           << d["even"].get<std::size_t>() << ", odd "
           << d["odd"].get<std::size_t>() << "), inner "
           << d["inner"].get<std::size_t>() << ", outer quotient "
           << d["outer_quotient"].get<std::size_t>() << "\n";
        if (report.contains("der_decomposition")) {
            const json& t = report["der_decomposition"];
            os << "outer map check: "
               << (t["all"].get<bool>() ? "confirmed" : "FAILED")
               << " (delta derivation: " << t["delta_is_derivation"].get<bool>()
               << ", not inner: " << t["delta_not_inner"].get<bool>()
               << ", inner+delta spans: "
               << t["inner_plus_delta_is_der"].get<bool>() << ")\n";
        }
    } else if (cmd == "local-check") {
        const json& d = report["dims"];
        os << "dim Der = " << d["der"].get<std::size_t>()
           << ", dim closure = " << d["closure"].get<std::size_t>() << " over "
           << report["probes"]["count"].get<std::size_t>() << " probes\n";
        os << "verdict: " << report["verdict"].get<std::string>() << "\n";
        for (const json& r : report["refutations"])
            os << "  gap direction " << r["gap_index"].get<std::size_t>()
               << " refuted at " << r["witness"].dump() << "\n";
    } else if (cmd == "replay") {
        for (const json& l : report["lemmas"]) {
            os << "lemma " << l["label"].get<std::string>() << " (dim "
               << l["dim_after"].get<std::size_t>() << ")\n";
            for (const json& a : l["assertions"])
                os << "  " << (a["passed"].get<bool>() ? "pass" : "FAIL") << "  "
                   << a["name"].get<std::string>() << "\n";
        }
        const json& f = report["final"];
        os << "final space dim " << f["dim"].get<std::size_t>()
           << ", matches ad span: " << f["matches_ad_span"].get<bool>() << "\n";
        if (!f["reconstruction"].get<std::string>().empty())
            os << f["reconstruction"].get<std::string>() << "\n";
        os << (report["passed"].get<bool>() ? "replay passed" : "replay FAILED")
           << "\n";
    }
    return os.str();
}

}  // namespace superder::io
