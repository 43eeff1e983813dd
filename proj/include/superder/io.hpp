#ifndef SUPERDER_IO_HPP
#define SUPERDER_IO_HPP

#include <string>

#include <json.hpp>

#include "superder/localder.hpp"
#include "superder/replay.hpp"
#include "superder/superalgebra.hpp"

namespace superder::io {

using nlohmann::json;

/// Algebra definition document:
/// {"name": ..., "basis": [{"name","parity"}...],
///  "brackets": [{"left","right","result":[[coeff,basis]...]}...]}
/// Coefficients are exact rational strings ("2", "-1", "1/2"); floating
/// point literals are rejected. Only one orientation of each bracket is
/// needed; the other is filled in by graded skew-symmetry.
SuperAlgebra algebra_from_json(const json& doc);
SuperAlgebra load_algebra(const std::string& path);
json algebra_to_json(const SuperAlgebra& alg);

/// Elements serialize as coefficient maps over basis names,
/// e.g. {"f": "1", "q": "1", "z": "-1/2"}.
Element element_from_json(const SuperAlgebra& alg, const json& doc);
json element_to_json(const SuperAlgebra& alg, const Element& x);

/// Probe document: a JSON array of coefficient maps.
ProbeSet probes_from_json(const SuperAlgebra& alg, const json& doc);
ProbeSet load_probes(const SuperAlgebra& alg, const std::string& path);
json probes_to_json(const SuperAlgebra& alg, const ProbeSet& probes);

/// Lemma-fact document: {"lemmas":[{label, probes, pins, assertions}...],
/// "final_ad_span":[...], "reconstruction":[...], ...}. See the builtin
/// export for a complete example.
ReplayConfig facts_from_json(const SuperAlgebra& alg, const json& doc);
ReplayConfig load_facts(const SuperAlgebra& alg, const std::string& path);
json facts_to_json(const SuperAlgebra& alg, const ReplayConfig& cfg);

json map_to_json(const LinearMap& m);

/// Report payloads. All fields are deterministic functions of the inputs;
/// keys are emitted in sorted order, so equal inputs give identical bytes.
json report_validate(const SuperAlgebra& alg, const std::string& input);
json report_derivations(const SuperAlgebra& alg, const std::string& input,
                        const std::string& degree);
json report_local_check(const SuperAlgebra& alg, const std::string& input,
                        const CertificationReport& rep,
                        const std::string& probe_source, std::size_t trials,
                        std::uint64_t seed);
json report_replay(const SuperAlgebra& alg, const std::string& input,
                   const ReplayTranscript& transcript);
json report_catalog();

std::string report_to_text(const json& report);

}  // namespace superder::io

#endif
