#ifndef SUPERDER_LOCALDER_HPP
#define SUPERDER_LOCALDER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "superder/derivations.hpp"
#include "superder/subspace.hpp"
#include "superder/superalgebra.hpp"

namespace superder {

struct NamedElement {
    std::string name;
    Element value;
};

/// Ordered probe list; elements must be nonzero.
struct ProbeSet {
    std::vector<NamedElement> probes;
};

/// The shipped probe set for the super Schrodinger algebra: 27 mixed sums,
/// one extra four-term sum h+q+E+G needed to collapse the closure (no probe
/// of support <= 3 separates the last non-derivation direction), and the 9
/// basis vectors. Throws when a referenced basis name is missing from alg.
ProbeSet builtin_probes(const SuperAlgebra& alg);

/// Display name for an element, e.g. "f+q-1/2z".
std::string format_element(const SuperAlgebra& alg, const Element& x);

/// {D(x) : D in der.total}, a subspace of the n-dim algebra space.
Subspace orbit(const SuperAlgebra& alg, const DerivationSpace& der,
               const Element& x);

/// contains(orbit(x), v): is v an admissible value at x of some derivation?
bool is_local_value(const SuperAlgebra& alg, const DerivationSpace& der,
                    const Element& x, const Element& v);

/// {maps M : M(x) in orbit(x)} inside the n^2-dim endomorphism space,
/// obtained by imposing the annihilator functionals of the orbit on the
/// column M(x). Codimension = n - dim orbit(x).
Subspace probe_constraint(const SuperAlgebra& alg, const DerivationSpace& der,
                          const Element& x);

/// Intersection of the probe constraints, in probe order. Contains
/// der.total for every probe set.
Subspace probe_closure(const SuperAlgebra& alg, const DerivationSpace& der,
                       const ProbeSet& probes);

enum class Verdict { Certified, Inconclusive };

struct RefutationWitness {
    std::size_t gap_index = 0;  // which gap basis map was refuted
    Element witness;            // element x with gap(x) outside orbit(x)
};

struct CertificationReport {
    std::string algebra;
    std::size_t dim_der = 0;
    std::size_t dim_closure = 0;
    std::vector<std::string> probe_names;
    Verdict verdict = Verdict::Inconclusive;
    /// For Inconclusive: closure directions independent of the derivation
    /// space (dim_closure - dim_der many).
    std::vector<LinearMap> gap;
    std::vector<RefutationWitness> refutations;
};

/// Verdict is Certified iff dim closure == dim Der. Sound because
/// Der <= LocDer <= closure always holds, so a dimension collapse proves
/// LocDer = Der. An Inconclusive verdict never claims the converse; the gap
/// basis is reported and refute() can disprove individual candidates.
CertificationReport certify(const SuperAlgebra& alg, const ProbeSet& probes);

/// Random search for an element x with candidate(x) outside orbit(x).
/// Coordinates are sampled with numerators in [-10, 10] and denominators in
/// {1, 2, 3} from a seeded mt19937_64; the result is deterministic given the
/// seed. "None found" (nullopt) is NOT a proof that candidate is a local
/// derivation.
std::optional<Element> refute(const SuperAlgebra& alg,
                              const DerivationSpace& der,
                              const LinearMap& candidate, std::size_t trials,
                              std::uint64_t seed);

namespace detail {

/// Annihilator functionals of orbit(x) imposed on the column at x, as rows
/// over the flattened endomorphism space. probe_constraint is their
/// nullspace.
Matrix constraint_rows(const SuperAlgebra& alg, const DerivationSpace& der,
                       const Element& x);

/// {v in space : rows * v = 0}, computed in the space's own coordinates.
Subspace impose(const Subspace& space, const Matrix& rows);

}  // namespace detail

}  // namespace superder

#endif
