#include <doctest.h>

#include "superder/localder.hpp"
#include "test_util.hpp"

using namespace superder;
using test_util::el;
using test_util::unit;

namespace {

const SuperAlgebra& shared_alg() {
    static const SuperAlgebra s = catalog("super-schrodinger");
    return s;
}

const DerivationSpace& shared_der() {
    static const DerivationSpace der = derivation_space(shared_alg());
    return der;
}

}  // namespace

TEST_CASE("builtin probe set: 27 sums + gap probe + 9 basis vectors") {
    const SuperAlgebra& s = shared_alg();
    const ProbeSet probes = builtin_probes(s);
    CHECK(probes.probes.size() == 37);
    CHECK(probes.probes.front().name == "h+z");
    CHECK(probes.probes[24].name == "f+q-1/2*z");
    CHECK(probes.probes[27].name == "h+q+E+G");
    CHECK(probes.probes.back().name == "G");
    for (const NamedElement& p : probes.probes)
        CHECK_FALSE(p.value.is_zero());
    CHECK_THROWS_AS(builtin_probes(catalog("osp12")), std::invalid_argument);
}

TEST_CASE("orbits") {
    const SuperAlgebra& s = shared_alg();
    const DerivationSpace& der = shared_der();
    CHECK(orbit(s, der, unit(s, "z")) ==
          Subspace::span(9, {unit(s, "z").coords}));
    CHECK(orbit(s, der, el(s, {})) == Subspace(9));
    const Subspace oh = orbit(s, der, unit(s, "h"));
    CHECK(oh == Subspace::span(9, {unit(s, "e").coords, unit(s, "f").coords,
                                   unit(s, "p").coords, unit(s, "q").coords,
                                   unit(s, "E").coords, unit(s, "F").coords}));
    CHECK(orbit(s, der, el(s, {{"h", "1"}, {"z", "1"}})).dim() == 7);
}

TEST_CASE("is_local_value") {
    const SuperAlgebra& s = shared_alg();
    const DerivationSpace& der = shared_der();
    CHECK(is_local_value(s, der, el(s, {{"h", "1"}, {"z", "1"}}), Element(9)));
    CHECK_FALSE(is_local_value(s, der, unit(s, "z"), unit(s, "e")));
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        Element x(9);
        for (std::size_t i = 0; i < 9; ++i)
            x.coords[i] = test_util::rand_rational(rng);
        const LinearMap d =
            LinearMap::from_flat(test_util::rand_member(rng, der.total));
        CHECK(is_local_value(s, der, x, d.apply(x)));
    }
}

TEST_CASE("probe constraints") {
    const SuperAlgebra& s = shared_alg();
    const DerivationSpace& der = shared_der();
    // codim = 9 - dim orbit
    CHECK(probe_constraint(s, der, el(s, {{"h", "1"}, {"z", "1"}})).dim() == 79);
    CHECK(probe_constraint(s, der, unit(s, "z")).dim() == 73);
    CHECK_THROWS_AS(probe_constraint(s, der, Element(9)),
                    std::invalid_argument);
    // derivations satisfy every probe constraint
    std::mt19937_64 rng(7);
    const ProbeSet probes = builtin_probes(s);
    for (int t = 0; t < 10; ++t) {
        const std::vector<Rational> d = test_util::rand_member(rng, der.total);
        for (const NamedElement& p : probes.probes)
            CHECK(probe_constraint(s, der, p.value).contains(d));
    }
}

TEST_CASE("full orbit means no constraint") {
    const SuperAlgebra ab = test_util::abelian_even(3);
    const DerivationSpace der = derivation_space(ab);
    Element x(3);
    x.coords[0] = 1;
    CHECK(orbit(ab, der, x) == Subspace::full(3));
    CHECK(probe_constraint(ab, der, x) == Subspace::full(9));
}

TEST_CASE("probe constraint is scaling invariant") {
    const SuperAlgebra& s = shared_alg();
    const DerivationSpace& der = shared_der();
    std::mt19937_64 rng(9);
    const ProbeSet probes = builtin_probes(s);
    for (int t = 0; t < 8; ++t) {
        const Element& x = probes.probes[rng() % probes.probes.size()].value;
        Rational c = test_util::rand_rational(rng);
        if (c == 0)
            c = Rational(5, 2);
        CHECK(probe_constraint(s, der, c * x) == probe_constraint(s, der, x));
    }
}

TEST_CASE("probe closure collapses to Der over the builtin set") {
    const SuperAlgebra& s = shared_alg();
    const DerivationSpace& der = shared_der();
    const Subspace closure = probe_closure(s, der, builtin_probes(s));
    CHECK(closure.dim() == 9);
    CHECK(closure == der.total);
}

TEST_CASE("without the probe h+q+E+G the closure keeps one extra direction") {
    const SuperAlgebra& s = shared_alg();
    const DerivationSpace& der = shared_der();
    ProbeSet probes = builtin_probes(s);
    probes.probes.erase(probes.probes.begin() + 27);
    REQUIRE(probes.probes.size() == 36);
    const Subspace closure = probe_closure(s, der, probes);
    CHECK(closure.dim() == 10);
    const CertificationReport rep = certify(s, probes);
    CHECK(rep.verdict == Verdict::Inconclusive);
    REQUIRE(rep.gap.size() == 1);
    // the gap direction really does violate some orbit constraint
    const auto witness =
        refute(s, der, rep.gap.front(), 10000, 12345);
    REQUIRE(witness.has_value());
    CHECK_FALSE(
        is_local_value(s, der, *witness, rep.gap.front().apply(*witness)));
}

TEST_CASE("closure equals the iterated intersection of constraints") {
    const SuperAlgebra& s = shared_alg();
    const DerivationSpace& der = shared_der();
    const ProbeSet all = builtin_probes(s);
    ProbeSet head;
    head.probes.assign(all.probes.begin(), all.probes.begin() + 6);
    Subspace reference = Subspace::full(81);
    for (const NamedElement& p : head.probes)
        reference = intersect(reference, probe_constraint(s, der, p.value));
    CHECK(probe_closure(s, der, head) == reference);
}

TEST_CASE("closure is monotone in the probe list") {
    const SuperAlgebra& s = shared_alg();
    const DerivationSpace& der = shared_der();
    const ProbeSet all = builtin_probes(s);
    std::size_t prev = 81;
    for (std::size_t k : {std::size_t(1), std::size_t(5), std::size_t(12),
                          std::size_t(28), all.probes.size()}) {
        ProbeSet head;
        head.probes.assign(all.probes.begin(), all.probes.begin() + k);
        const std::size_t d = probe_closure(s, der, head).dim();
        CHECK(d <= prev);
        prev = d;
    }
}

TEST_CASE("closure is order independent") {
    const SuperAlgebra& s = shared_alg();
    const DerivationSpace& der = shared_der();
    const ProbeSet probes = builtin_probes(s);
    const Subspace reference = probe_closure(s, der, probes);
    std::mt19937_64 rng(2718);
    for (int t = 0; t < 3; ++t) {
        ProbeSet shuffled = probes;
        for (std::size_t i = shuffled.probes.size(); i > 1; --i)
            std::swap(shuffled.probes[i - 1], shuffled.probes[rng() % i]);
        CHECK(probe_closure(s, der, shuffled) == reference);
    }
}

TEST_CASE("certify") {
    const SuperAlgebra& s = shared_alg();
    SUBCASE("builtin probes certify") {
        const CertificationReport rep = certify(s, builtin_probes(s));
        CHECK(rep.verdict == Verdict::Certified);
        CHECK(rep.dim_der == 9);
        CHECK(rep.dim_closure == 9);
        CHECK(rep.gap.empty());
        CHECK(rep.probe_names.size() == 37);
    }
    SUBCASE("a single probe is inconclusive") {
        ProbeSet one;
        one.probes.push_back({"z", unit(s, "z")});
        const CertificationReport rep = certify(s, one);
        CHECK(rep.verdict == Verdict::Inconclusive);
        CHECK(rep.dim_closure == 73);
        CHECK(rep.gap.size() == rep.dim_closure - rep.dim_der);
    }
    SUBCASE("abelian algebras certify trivially") {
        const SuperAlgebra ab = test_util::abelian_even(2);
        ProbeSet one;
        Element x(2);
        x.coords[0] = 1;
        one.probes.push_back({"a0", x});
        const CertificationReport rep = certify(ab, one);
        CHECK(rep.verdict == Verdict::Certified);
        CHECK(rep.dim_der == 4);
        CHECK(rep.dim_closure == 4);
    }
}

TEST_CASE("refute") {
    const SuperAlgebra& s = shared_alg();
    const DerivationSpace& der = shared_der();
    SUBCASE("members of Der are never refuted") {
        CHECK_FALSE(refute(s, der, delta_map(), 50, 1));
        const LinearMap adh = ad(s, unit(s, "h"));
        CHECK_FALSE(refute(s, der, adh, 50, 1));
    }
    SUBCASE("the identity map is refuted and deterministically so") {
        const LinearMap id = LinearMap::identity_map(9);
        const auto w1 = refute(s, der, id, 10000, 42);
        REQUIRE(w1.has_value());
        CHECK_FALSE(is_local_value(s, der, *w1, id.apply(*w1)));
        const auto w2 = refute(s, der, id, 10000, 42);
        REQUIRE(w2.has_value());
        CHECK(*w1 == *w2);
        const auto w3 = refute(s, der, id, 10000, 43);
        REQUIRE(w3.has_value());
        CHECK_FALSE(is_local_value(s, der, *w3, id.apply(*w3)));
    }
}
