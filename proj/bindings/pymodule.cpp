#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "superder/io.hpp"
#include "superder/localder.hpp"
#include "superder/replay.hpp"

namespace py = pybind11;
using namespace superder;
using nlohmann::json;

namespace {

py::object json_to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null:
            return py::none();
        case json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case json::value_t::number_integer:
            return py::int_(j.get<std::int64_t>());
        case json::value_t::number_unsigned:
            return py::int_(j.get<std::uint64_t>());
        case json::value_t::number_float:
            return py::float_(j.get<double>());
        case json::value_t::string:
            return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const json& e : j)
                out.append(json_to_py(e));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (const auto& [k, v] : j.items())
                out[py::str(k)] = json_to_py(v);
            return out;
        }
        default:
            return py::none();
    }
}

Element element_from_map(const SuperAlgebra& alg,
                         const std::map<std::string, std::string>& coeffs) {
    Element x(alg.dim());
    for (const auto& [name, coeff] : coeffs) {
        const auto idx = alg.index_of(name);
        if (!idx)
            throw AlgebraFormatError("unknown basis name '" + name + "'");
        x.coords[*idx] = parse_rational(coeff);
    }
    return x;
}

std::vector<std::string> element_to_list(const Element& x) {
    std::vector<std::string> out;
    for (const Rational& c : x.coords)
        out.push_back(rational_str(c));
    return out;
}

LinearMap map_from_rows(const std::vector<std::vector<std::string>>& rows) {
    const std::size_t n = rows.size();
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n)
            throw std::invalid_argument("matrix rows must form a square grid");
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = parse_rational(rows[i][j]);
    }
    return LinearMap(std::move(m));
}

ProbeSet probes_from_arg(const SuperAlgebra& alg, const py::object& probes) {
    if (probes.is_none())
        return builtin_probes(alg);
    const auto maps =
        probes.cast<std::vector<std::map<std::string, std::string>>>();
    ProbeSet out;
    for (const auto& m : maps) {
        Element x = element_from_map(alg, m);
        out.probes.push_back({format_element(alg, x), std::move(x)});
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_superder, m) {
    m.doc() =
        "Exact super-derivation and local super-derivation certifier for "
        "finite-dimensional Lie superalgebras given by structure constants.";

    py::register_exception<AlgebraFormatError>(m, "AlgebraFormatError");
    py::register_exception<ReplayFormatError>(m, "ReplayFormatError");

    py::class_<SuperAlgebra>(m, "SuperAlgebra")
        .def_property_readonly("name", &SuperAlgebra::name)
        .def_property_readonly("dimension", &SuperAlgebra::dim)
        .def("basis",
             [](const SuperAlgebra& a) {
                 std::vector<std::pair<std::string, int>> out;
                 for (const BasisVector& b : a.basis())
                     out.emplace_back(b.name, b.parity);
                 return out;
             })
        .def("is_valid", &SuperAlgebra::is_valid)
        .def("violations",
             [](const SuperAlgebra& a) {
                 return json_to_py(
                     io::report_validate(a, "python")["violations"]);
             })
        .def("bracket",
             [](const SuperAlgebra& a,
                const std::map<std::string, std::string>& x,
                const std::map<std::string, std::string>& y) {
                 return element_to_list(a.bracket(element_from_map(a, x),
                                                  element_from_map(a, y)));
             },
             py::arg("x"), py::arg("y"),
             "bracket of two elements given as {basis name: coefficient}; "
             "returns coordinates as rational strings")
        .def("center_dim",
             [](const SuperAlgebra& a) { return a.center().dim(); })
        .def("is_ideal",
             [](const SuperAlgebra& a, const std::vector<std::string>& names) {
                 std::vector<std::size_t> idx;
                 for (const std::string& n : names) {
                     const auto i = a.index_of(n);
                     if (!i)
                         throw AlgebraFormatError("unknown basis name '" + n +
                                                  "'");
                     idx.push_back(*i);
                 }
                 return a.is_ideal(idx);
             })
        .def("to_json",
             [](const SuperAlgebra& a) { return io::algebra_to_json(a).dump(2); })
        .def("__repr__", [](const SuperAlgebra& a) {
            return "<SuperAlgebra '" + a.name() + "' dim " +
                   std::to_string(a.dim()) + ">";
        });

    m.def("catalog", &catalog, py::arg("name"));
    m.def("catalog_names", &catalog_names);
    m.def("algebra_from_json", [](const std::string& text) {
        return io::algebra_from_json(json::parse(text));
    });

    m.def(
        "derivations",
        [](const SuperAlgebra& alg) {
            return json_to_py(io::report_derivations(alg, "python", "all"));
        },
        py::arg("algebra"),
        "dimensions and canonical bases of the super-derivation algebra");

    m.def("delta_matrix", []() {
        std::vector<std::vector<std::string>> out;
        const LinearMap d = delta_map();
        for (std::size_t i = 0; i < d.dim(); ++i) {
            std::vector<std::string> row;
            for (std::size_t j = 0; j < d.dim(); ++j)
                row.push_back(rational_str(d.matrix().at(i, j)));
            out.push_back(std::move(row));
        }
        return out;
    });

    m.def(
        "is_derivation",
        [](const SuperAlgebra& alg,
           const std::vector<std::vector<std::string>>& rows) {
            const DerivationCheck chk = is_derivation(alg, map_from_rows(rows));
            py::dict out;
            out["ok"] = chk.ok;
            if (chk.counterexample) {
                out["counterexample"] =
                    py::make_tuple(alg.basis_name(chk.counterexample->i),
                                   alg.basis_name(chk.counterexample->j),
                                   chk.counterexample->degree);
            }
            return out;
        },
        py::arg("algebra"), py::arg("matrix"));

    m.def(
        "orbit_dim",
        [](const SuperAlgebra& alg,
           const std::map<std::string, std::string>& x) {
            const DerivationSpace der = derivation_space(alg);
            return orbit(alg, der, element_from_map(alg, x)).dim();
        },
        py::arg("algebra"), py::arg("element"));

    m.def("builtin_probes", [](const SuperAlgebra& alg) {
        return json_to_py(io::probes_to_json(alg, builtin_probes(alg)));
    });

    m.def(
        "certify",
        [](const SuperAlgebra& alg, const py::object& probes,
           std::size_t refute_trials, std::uint64_t seed) {
            const ProbeSet set = probes_from_arg(alg, probes);
            CertificationReport rep = certify(alg, set);
            if (rep.verdict == Verdict::Inconclusive && refute_trials > 0) {
                const DerivationSpace der = derivation_space(alg);
                for (std::size_t g = 0; g < rep.gap.size(); ++g)
                    if (auto w = refute(alg, der, rep.gap[g], refute_trials,
                                        seed))
                        rep.refutations.push_back({g, std::move(*w)});
            }
            const std::string source = probes.is_none() ? "builtin" : "custom";
            return json_to_py(io::report_local_check(alg, "python", rep, source,
                                                     refute_trials, seed));
        },
        py::arg("algebra"), py::arg("probes") = py::none(),
        py::arg("refute_trials") = 0, py::arg("seed") = 1,
        "probe-closure certification that every local super-derivation is a "
        "super-derivation");

    m.def(
        "replay",
        [](const SuperAlgebra& alg) {
            if (!structurally_equal(alg, catalog("super-schrodinger")))
                throw AlgebraFormatError(
                    "replay requires the super-schrodinger algebra");
            return json_to_py(io::report_replay(
                alg, "python", replay(alg, builtin_lemma_facts(alg))));
        },
        py::arg("algebra"));

    m.def(
        "verify_der_decomposition",
        [](const SuperAlgebra& alg) {
            const DerDecompositionReport rep = verify_der_decomposition(alg);
            py::dict out;
            out["delta_is_derivation"] = rep.delta_is_derivation;
            out["delta_not_inner"] = rep.delta_not_inner;
            out["inner_plus_delta_is_der"] = rep.inner_plus_delta_is_der;
            out["dim_der_is_inner_plus_one"] = rep.dim_der_is_inner_plus_one;
            out["dim_der"] = rep.dim_der;
            out["dim_inner"] = rep.dim_inner;
            out["all"] = rep.all();
            return out;
        },
        py::arg("algebra"));
}
