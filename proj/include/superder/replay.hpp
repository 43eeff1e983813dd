#ifndef SUPERDER_REPLAY_HPP
#define SUPERDER_REPLAY_HPP

#include <optional>
#include <string>
#include <vector>

#include "superder/localder.hpp"

namespace superder {

/// One additive piece of a witness-coefficient expression. At a probe x, a
/// local map satisfies M(x) = [b, x] + lam * delta(x) for some witness
/// (b, lam); Inner refers to a coordinate of b, Lambda to lam.
struct SymbolTerm {
    enum class Kind { Inner, Lambda };
    Kind kind = Kind::Inner;
    std::string inner_name;  // basis name, for Inner
    Rational coeff = 1;
};

/// weight * (symbol expression read off column `column`). The expression is
/// resolved to a functional on the map's entries by solving psi * P = phi
/// against the orbit parameterization P of the column's basis vector; an
/// expression that does not factor through the evaluation map is rejected.
struct CoeffTerm {
    Rational weight = 1;
    std::string column;
    std::vector<SymbolTerm> symbol;
};

struct LemmaAssertion {
    std::string name;
    /// When set: the whole column of this basis vector must vanish on the
    /// constrained space (the Delta(h)=0 style of claim).
    std::optional<std::string> column_zero;
    /// Otherwise: sum of resolved terms must vanish on the constrained space.
    std::vector<CoeffTerm> terms;
};

struct LemmaFact {
    std::string label;
    std::vector<NamedElement> probes;
    std::vector<NamedElement> pins;  // impose Delta(pin) = 0
    std::vector<LemmaAssertion> assertions;
};

struct ReconstructionPart {
    std::string inner_name;  // generator contributed to the inner element
    CoeffTerm coefficient;   // functional extracting its multiplier
};

struct ReplayConfig {
    std::vector<LemmaFact> lemmas;
    /// Expected final space: span of ad(x) over these basis names.
    std::vector<std::string> final_ad_span;
    std::vector<ReconstructionPart> reconstruction;
    std::string reconstruction_display;
};

/// The shipped fact list replaying the lemma chain for super-schrodinger,
/// including the supplementary probe h+q+E+G in the last constraint lemma.
ReplayConfig builtin_lemma_facts(const SuperAlgebra& alg);

struct AssertionResult {
    std::string name;
    bool passed = false;
    std::string failure;  // which functional failed, on which basis vector
};

struct LemmaResult {
    std::string label;
    std::size_t dim_after = 0;
    std::vector<AssertionResult> assertions;
};

struct ReplayTranscript {
    std::vector<LemmaResult> lemmas;
    std::size_t final_dim = 0;
    bool final_matches_ad_span = false;
    bool reconstruction_verified = false;
    std::string reconstruction;
    bool all_passed = false;
};

class ReplayFormatError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Data-driven replay: starting from the full endomorphism space, each fact
/// adds probe constraints and pins, then its assertions are checked as
/// linear functionals vanishing on the constrained space.
ReplayTranscript replay(const SuperAlgebra& alg, const ReplayConfig& config);

}  // namespace superder

#endif
