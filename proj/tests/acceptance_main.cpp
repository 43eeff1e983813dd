// Acceptance suite: drives the CLI binary end to end and runs the seeded
// property suites in process. One PASS/FAIL line per criterion; exit 0 iff
// all pass. All comparisons are exact.

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "superder/io.hpp"
#include "superder/localder.hpp"
#include "superder/replay.hpp"

using namespace superder;
using nlohmann::json;

namespace {

std::string g_cli;
std::filesystem::path g_tmpdir;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    RunResult res;
    const std::string cmd = g_cli + " " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        res.exit_code = -1;
        return res;
    }
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        res.out.append(buf.data(), n);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::filesystem::path write_file(const std::string& name,
                                 const std::string& content) {
    const std::filesystem::path path = g_tmpdir / name;
    std::ofstream out(path);
    out << content;
    return path;
}

bool check(bool ok, const std::string& what, std::vector<std::string>& log) {
    if (!ok)
        log.push_back(what);
    return ok;
}

// ---- criterion 1: axiom validation ----------------------------------------

bool criterion_axioms(std::vector<std::string>& log) {
    bool ok = true;
    const RunResult good = run("validate catalog:super-schrodinger");
    ok &= check(good.exit_code == 0, "validate exit code != 0", log);
    const json rep = json::parse(good.out);
    ok &= check(rep["valid"] == true, "validate reports invalid", log);

    // independent re-check of the identity on all 729 ordered triples
    const SuperAlgebra s = catalog("super-schrodinger");
    std::size_t triples = 0;
    for (std::size_t x = 0; x < 9; ++x)
        for (std::size_t y = 0; y < 9; ++y)
            for (std::size_t z = 0; z < 9; ++z) {
                Element ex(9), ey(9), ez(9);
                ex.coords[x] = 1;
                ey.coords[y] = 1;
                ez.coords[z] = 1;
                const Element lhs = s.bracket(ex, s.bracket(ey, ez));
                const int sign =
                    (s.parity(z) * ((s.parity(x) + s.parity(y)) % 2)) % 2 ? -1
                                                                          : 1;
                const Element rhs =
                    s.bracket(s.bracket(ex, ey), ez) +
                    Rational(sign) * s.bracket(s.bracket(ez, ex), ey);
                if (!(lhs == rhs)) {
                    ok = check(false, "triple identity fails", log);
                }
                ++triples;
            }
    ok &= check(triples == 729, "triple count != 729", log);

    // negative control: flip the sign of the [E,F] bracket
    json doc = io::algebra_to_json(s);
    bool flipped = false;
    for (json& b : doc["brackets"])
        if (b["left"] == "E" && b["right"] == "F") {
            const Rational c = -parse_rational(
                b["result"][0][0].get<std::string>());
            b["result"][0][0] = rational_str(c);
            flipped = true;
        }
    ok &= check(flipped, "catalog export lacks the [E,F] bracket", log);
    const auto path = write_file("flipped_EF.json", doc.dump());
    const RunResult bad = run("validate " + path.string());
    ok &= check(bad.exit_code == 1, "flipped [E,F] should exit 1", log);
    const json bad_rep = json::parse(bad.out);
    bool jacobi_reported = false;
    for (const json& v : bad_rep["violations"])
        if (v["kind"] == "jacobi")
            jacobi_reported = true;
    ok &= check(jacobi_reported, "flipped [E,F] reports no Jacobi violation",
                log);
    return ok;
}

// ---- criterion 2: derivation algebra --------------------------------------

bool criterion_derivations(std::vector<std::string>& log) {
    bool ok = true;
    const RunResult r = run("derivations catalog:super-schrodinger");
    ok &= check(r.exit_code == 0, "derivations exit code != 0", log);
    const json rep = json::parse(r.out);
    ok &= check(rep["dims"]["total"] == 9, "dim Der != 9", log);
    ok &= check(rep["dims"]["inner"] == 8, "dim IDer != 8", log);
    ok &= check(rep["dims"]["outer_quotient"] == 1, "outer quotient != 1", log);
    const json& t = rep["der_decomposition"];
    ok &= check(t["delta_is_derivation"] == true, "delta not a derivation", log);
    ok &= check(t["delta_not_inner"] == true, "delta reported inner", log);
    ok &= check(t["inner_plus_delta_is_der"] == true,
                "IDer + span{delta} != Der", log);
    ok &= check(t["dim_der_is_inner_plus_one"] == true, "dims inconsistent",
                log);

    // canonical-subspace restatement, in process
    const SuperAlgebra s = catalog("super-schrodinger");
    const DerivationSpace der = derivation_space(s);
    const Subspace inner = inner_space(s);
    const Subspace delta_span = Subspace::span(81, {delta_map().flatten()});
    ok &= check(sum(inner, delta_span) == der.total,
                "canonical sum mismatch", log);
    ok &= check(!inner.contains(delta_map().flatten()), "delta inside IDer",
                log);
    return ok;
}

// ---- criterion 3: certification -------------------------------------------

bool criterion_local_check(std::vector<std::string>& log) {
    bool ok = true;
    const RunResult r = run(
        "local-check catalog:super-schrodinger --probes=builtin");
    ok &= check(r.exit_code == 0, "local-check exit code != 0", log);
    const json rep = json::parse(r.out);
    ok &= check(rep["verdict"] == "certified", "verdict != certified", log);
    ok &= check(rep["dims"]["der"] == 9, "dim Der != 9", log);
    ok &= check(rep["dims"]["closure"] == 9, "dim closure != 9", log);
    return ok;
}

// ---- criterion 4: lemma-chain replay ---------------------------------------

bool criterion_replay(std::vector<std::string>& log) {
    bool ok = true;
    const RunResult r = run("replay catalog:super-schrodinger");
    ok &= check(r.exit_code == 0, "replay exit code != 0", log);
    const json rep = json::parse(r.out);
    ok &= check(rep["passed"] == true, "replay not passed", log);

    const std::vector<std::string> required = {
        "Delta(h)=0",        "Delta(z)=0",
        "b_{f,e}=0",         "b_{e,f}=0",
        "b_{F,p}=0",         "b_{E,q}=0",
        "b_{p,f}=b_{q,e}",   "b_{G,E}=b_{G,F}",
        "b_{F,E}=b_{F,G}",   "b_{E,F}=b_{E,G}",
        "b_{q,e}=0",         "b_{h,e}=b_{h,f}",
        "b_{F,E}=0",         "b_{E,F}=0",
        "b_{E,E}=0",         "b_{F,F}=0",
        "b_{E,E}=b_{F,F}",   "b_{h,F}=b_{h,e}",
        "b_{h,E}=b_{h,e}",   "b_{G,G}=b_{G,E}",
        "-b_{h,q}+lam_q=-b_{h,e}", "b_{h,p}+lam_p=b_{h,e}",
        "lam_G=0"};
    for (const std::string& name : required) {
        bool found_pass = false;
        for (const json& l : rep["lemmas"])
            for (const json& a : l["assertions"])
                if (a["name"] == name && a["passed"] == true)
                    found_pass = true;
        ok &= check(found_pass, "assertion missing or failed: " + name, log);
    }
    ok &= check(rep["final"]["dim"] == 2, "final space dim != 2", log);
    ok &= check(rep["final"]["matches_ad_span"] == true,
                "final space is not span{ad_h, ad_G}", log);
    ok &= check(rep["final"]["reconstruction_verified"] == true,
                "reconstruction not verified", log);
    ok &= check(rep["final"]["reconstruction"] ==
                    "nabla = D_{h+z} + ad(b_{h,e}*h + b_{G,E}*G)",
                "reconstruction line missing", log);
    return ok;
}

// ---- criterion 5: property suites ------------------------------------------

bool criterion_properties(std::vector<std::string>& log) {
    bool ok = true;
    std::mt19937_64 rng(20240901);
    auto rand_rational = [&](int num_range, int den_range) {
        const std::int64_t num =
            static_cast<std::int64_t>(rng() % (2 * num_range + 1)) - num_range;
        const std::int64_t den =
            static_cast<std::int64_t>(rng() % den_range) + 1;
        return Rational(num, den);
    };
    auto rand_matrix = [&](std::size_t rows, std::size_t cols) {
        Matrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                m.at(i, j) = rand_rational(5, 3);
        return m;
    };

    // 5a: rank-nullity and the modular dimension law, 500 instances each
    bool rn = true, mod = true;
    for (int t = 0; t < 500; ++t) {
        const std::size_t rows = rng() % 6 + 1;
        const std::size_t cols = rng() % 6 + 1;
        const Matrix m = rand_matrix(rows, cols);
        rn &= (rref(m).rank + nullspace(m).dim() == cols);
    }
    for (int t = 0; t < 500; ++t) {
        const std::size_t ambient = rng() % 6 + 2;
        std::vector<std::vector<Rational>> ra, rb;
        for (std::size_t i = 0; i < rng() % 3 + 1; ++i)
            ra.push_back(rand_matrix(1, ambient).row(0));
        for (std::size_t i = 0; i < rng() % 3 + 1; ++i)
            rb.push_back(rand_matrix(1, ambient).row(0));
        const Subspace a = Subspace::span(ambient, ra);
        const Subspace b = Subspace::span(ambient, rb);
        mod &= (a.dim() + b.dim() == sum(a, b).dim() + intersect(a, b).dim());
    }
    ok &= check(rn, "rank-nullity failed", log);
    ok &= check(mod, "modular dimension law failed", log);
    std::cout << "  - rank-nullity (500) and modular law (500): "
              << ((rn && mod) ? "ok" : "FAIL") << "\n";

    // 5b: Der inside every probe constraint, 100 random derivations
    const SuperAlgebra s = catalog("super-schrodinger");
    const DerivationSpace der = derivation_space(s);
    const ProbeSet probes = builtin_probes(s);
    std::vector<Subspace> orbits;
    for (const NamedElement& p : probes.probes)
        orbits.push_back(orbit(s, der, p.value));
    bool der_in = true;
    for (int t = 0; t < 100; ++t) {
        std::vector<Rational> combo(81);
        for (std::size_t r = 0; r < der.total.dim(); ++r) {
            const Rational c = rand_rational(3, 2);
            for (std::size_t i = 0; i < 81; ++i)
                combo[i] += c * der.total.basis().at(r, i);
        }
        const LinearMap d = LinearMap::from_flat(combo);
        for (std::size_t pi = 0; pi < probes.probes.size(); ++pi)
            der_in &= orbits[pi].contains(
                d.apply(probes.probes[pi].value).coords);
    }
    ok &= check(der_in, "a derivation escaped a probe constraint", log);
    std::cout << "  - Der inside closure (100 x " << probes.probes.size()
              << " probes): " << (der_in ? "ok" : "FAIL") << "\n";

    // 5c: supercommutator closure, 100 homogeneous pairs
    bool closed = true;
    for (int t = 0; t < 100; ++t) {
        const bool odd_a = rng() % 2;
        const bool odd_b = rng() % 2;
        const Subspace& sa = odd_a ? der.odd : der.even;
        const Subspace& sb = odd_b ? der.odd : der.even;
        auto pick = [&](const Subspace& sp) {
            std::vector<Rational> v(81);
            for (std::size_t r = 0; r < sp.dim(); ++r) {
                const Rational c = rand_rational(3, 2);
                for (std::size_t i = 0; i < 81; ++i)
                    v[i] += c * sp.basis().at(r, i);
            }
            return LinearMap::from_flat(v);
        };
        const LinearMap a = pick(sa);
        const LinearMap b = pick(sb);
        const int sign = (odd_a && odd_b) ? 1 : -1;
        const Matrix comm =
            a.matrix() * b.matrix() + Rational(sign) * (b.matrix() * a.matrix());
        closed &= der.total.contains(LinearMap(comm).flatten());
    }
    ok &= check(closed, "supercommutator left Der", log);
    std::cout << "  - supercommutator closure (100 pairs): "
              << (closed ? "ok" : "FAIL") << "\n";

    // 5d: probe-order invariance, 20 permutations
    const Subspace reference = probe_closure(s, der, probes);
    bool orderfree = true;
    for (int t = 0; t < 20; ++t) {
        ProbeSet shuffled = probes;
        for (std::size_t i = shuffled.probes.size(); i > 1; --i)
            std::swap(shuffled.probes[i - 1], shuffled.probes[rng() % i]);
        orderfree &= (probe_closure(s, der, shuffled) == reference);
    }
    ok &= check(orderfree, "closure depends on probe order", log);
    std::cout << "  - probe-order invariance (20 permutations): "
              << (orderfree ? "ok" : "FAIL") << "\n";

    // 5e: ablation control: dropping e+f+E+F must break b_{q,e}=0
    ReplayConfig cfg = builtin_lemma_facts(s);
    for (LemmaFact& fact : cfg.lemmas)
        std::erase_if(fact.probes, [](const NamedElement& p) {
            return p.name == "e+f+E+F";
        });
    const ReplayTranscript t = replay(s, cfg);
    bool broke = false;
    for (const LemmaResult& lr : t.lemmas)
        for (const AssertionResult& ar : lr.assertions)
            if (lr.label == "5" && ar.name == "b_{q,e}=0" && !ar.passed)
                broke = true;
    ok &= check(broke, "ablation did not break b_{q,e}=0", log);
    std::cout << "  - ablation sensitivity (drop e+f+E+F): "
              << (broke ? "ok" : "FAIL") << "\n";
    return ok;
}

// ---- criterion 6: determinism ----------------------------------------------

bool criterion_determinism(std::vector<std::string>& log) {
    // a probe file exercising the inconclusive + refutation path
    const auto zprobe = write_file("zonly.json", R"([{"z": "1"}])");
    const std::vector<std::string> cmds = {
        "validate catalog:super-schrodinger",
        "derivations catalog:super-schrodinger",
        "derivations catalog:osp12 --degree=1",
        "local-check catalog:super-schrodinger --probes=builtin",
        "local-check catalog:super-schrodinger --probes=" + zprobe.string() +
            " --refute-trials=40 --seed=9",
        "replay catalog:super-schrodinger",
        "catalog",
        "probes export",
        "facts export",
        "validate catalog:super-schrodinger --format=text",
        "replay catalog:super-schrodinger --format=text",
    };
    bool ok = true;
    for (const std::string& cmd : cmds) {
        const RunResult a = run(cmd);
        const RunResult b = run(cmd);
        const bool same = a.out == b.out && a.exit_code == b.exit_code;
        if (!same)
            log.push_back("non-deterministic output: " + cmd);
        ok &= same;
    }
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; i += 2)
        if (std::string(argv[i]) == "--cli")
            g_cli = argv[i + 1];
    if (g_cli.empty()) {
        std::cerr << "usage: superder_acceptance --cli <path-to-superder>\n";
        return 2;
    }
    g_tmpdir = std::filesystem::temp_directory_path() /
               ("superder_acceptance_" + std::to_string(getpid()));
    std::filesystem::create_directories(g_tmpdir);

    struct Criterion {
        const char* name;
        bool (*fn)(std::vector<std::string>&);
    };
    const std::vector<Criterion> criteria = {
        {"1 axiom-validation", criterion_axioms},
        {"2 derivation-algebra", criterion_derivations},
        {"3 local-derivation-certification", criterion_local_check},
        {"4 lemma-chain-replay", criterion_replay},
        {"5 property-suites", criterion_properties},
        {"6 determinism", criterion_determinism},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::vector<std::string> log;
        bool ok = false;
        try {
            ok = c.fn(log);
        } catch (const std::exception& e) {
            log.push_back(std::string("exception: ") + e.what());
        }
        std::cout << (ok ? "PASS" : "FAIL") << "  " << c.name << "\n";
        for (const std::string& line : log)
            std::cout << "      " << line << "\n";
        if (!ok)
            ++failures;
    }

    std::filesystem::remove_all(g_tmpdir);
    if (failures)
        std::cout << failures << " criterion(s) failed\n";
    else
        std::cout << "all criteria passed\n";
    return failures == 0 ? 0 : 1;
}
