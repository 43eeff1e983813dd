#include <chrono>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "superder/io.hpp"
#include "superder/localder.hpp"
#include "superder/replay.hpp"

using namespace superder;

namespace {

SuperAlgebra load_input(const std::string& in) {
    constexpr const char* kPrefix = "catalog:";
    if (in.rfind(kPrefix, 0) == 0)
        return catalog(in.substr(std::string(kPrefix).size()));
    return io::load_algebra(in);
}

void emit(const io::json& report, const std::string& format) {
    if (format == "text")
        std::cout << io::report_to_text(report);
    else
        std::cout << report.dump(2) << "\n";
}

int run_validate(const std::string& in, const std::string& format) {
    const SuperAlgebra alg = load_input(in);
    emit(io::report_validate(alg, in), format);
    return alg.is_valid() ? 0 : 1;
}

int run_derivations(const std::string& in, const std::string& degree,
                    const std::string& format) {
    const SuperAlgebra alg = load_input(in);
    if (!alg.is_valid()) {
        emit(io::report_validate(alg, in), format);
        return 1;
    }
    emit(io::report_derivations(alg, in, degree), format);
    return 0;
}

int run_local_check(const std::string& in, const std::string& probes_arg,
                    std::size_t trials, std::uint64_t seed,
                    const std::string& format) {
    const SuperAlgebra alg = load_input(in);
    if (!alg.is_valid()) {
        emit(io::report_validate(alg, in), format);
        return 1;
    }
    const ProbeSet probes = probes_arg == "builtin"
                                ? builtin_probes(alg)
                                : io::load_probes(alg, probes_arg);
    CertificationReport rep = certify(alg, probes);
    if (rep.verdict == Verdict::Inconclusive && trials > 0) {
        const DerivationSpace der = derivation_space(alg);
        for (std::size_t g = 0; g < rep.gap.size(); ++g)
            if (auto witness = refute(alg, der, rep.gap[g], trials, seed))
                rep.refutations.push_back({g, std::move(*witness)});
    }
    emit(io::report_local_check(alg, in, rep, probes_arg, trials, seed), format);
    return rep.verdict == Verdict::Certified ? 0 : 2;
}

int run_replay(const std::string& in, const std::string& facts_path,
               const std::string& format) {
    const SuperAlgebra alg = load_input(in);
    if (!structurally_equal(alg, catalog("super-schrodinger")))
        throw AlgebraFormatError(
            "replay requires the super-schrodinger algebra (catalog or a "
            "structurally identical file)");
    const ReplayConfig cfg = facts_path.empty()
                                 ? builtin_lemma_facts(alg)
                                 : io::load_facts(alg, facts_path);
    const ReplayTranscript transcript = replay(alg, cfg);
    emit(io::report_replay(alg, in, transcript), format);
    return transcript.all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "superder: exact super-derivation and local super-derivation "
        "certifier for Lie superalgebras given by structure constants"};
    app.require_subcommand(1);

    std::string input, format = "json", degree = "all";
    std::string probes_arg = "builtin", facts_path, output_path;
    std::size_t trials = 0;
    std::uint64_t seed = 1;
    bool timings = false;
    app.add_flag("--timings", timings, "print elapsed time to stderr");

    auto* validate = app.add_subcommand("validate",
                                        "check the superalgebra axioms");
    validate->add_option("input", input, "catalog:<name> or a file path")
        ->required();
    validate->add_option("--format", format, "json or text");

    auto* derivations =
        app.add_subcommand("derivations", "compute the super-derivation algebra");
    derivations->add_option("input", input)->required();
    derivations->add_option("--degree", degree, "0, 1 or all");
    derivations->add_option("--format", format, "json or text");

    auto* local = app.add_subcommand(
        "local-check", "certify that every local super-derivation is a "
                       "super-derivation");
    local->add_option("input", input)->required();
    local->add_option("--probes", probes_arg, "builtin or a probe file path");
    local->add_option("--refute-trials", trials,
                      "random refutation trials per gap direction");
    local->add_option("--seed", seed, "refutation PRNG seed");
    local->add_option("--format", format, "json or text");

    auto* replay_cmd =
        app.add_subcommand("replay", "replay the constraint lemma chain");
    replay_cmd->add_option("input", input)->required();
    replay_cmd->add_option("--facts", facts_path, "lemma-fact file path");
    replay_cmd->add_option("--format", format, "json or text");

    auto* catalog_cmd =
        app.add_subcommand("catalog", "list the built-in algebras");
    catalog_cmd->add_option("--format", format, "json or text");

    auto* probes_cmd = app.add_subcommand("probes", "probe set utilities");
    probes_cmd->require_subcommand(1);
    auto* probes_export = probes_cmd->add_subcommand(
        "export", "write the builtin probe set as a probe file");
    auto* facts_cmd = app.add_subcommand("facts", "lemma-fact utilities");
    facts_cmd->require_subcommand(1);
    auto* facts_export = facts_cmd->add_subcommand(
        "export", "write the builtin lemma facts as a fact file");

    CLI11_PARSE(app, argc, argv);

    const auto start = std::chrono::steady_clock::now();
    int rc = 0;
    try {
        if (validate->parsed())
            rc = run_validate(input, format);
        else if (derivations->parsed())
            rc = run_derivations(input, degree, format);
        else if (local->parsed())
            rc = run_local_check(input, probes_arg, trials, seed, format);
        else if (replay_cmd->parsed())
            rc = run_replay(input, facts_path, format);
        else if (catalog_cmd->parsed())
            emit(io::report_catalog(), format);
        else if (probes_export->parsed()) {
            const SuperAlgebra alg = catalog("super-schrodinger");
            std::cout << io::probes_to_json(alg, builtin_probes(alg)).dump(2)
                      << "\n";
        } else if (facts_export->parsed()) {
            const SuperAlgebra alg = catalog("super-schrodinger");
            std::cout << io::facts_to_json(alg, builtin_lemma_facts(alg)).dump(2)
                      << "\n";
        }
    } catch (const AlgebraFormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        rc = 3;
    } catch (const ReplayFormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        rc = 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        rc = 1;
    }
    if (timings) {
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        std::cerr << "elapsed " << ms << " ms\n";
    }
    return rc;
}
