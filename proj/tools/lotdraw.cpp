// lotdraw: run, verify, and measure sequential lots-drawing assignment
// procedures on market files. Reports are JSON on stdout; exit codes are
// 0 ok, 2 parse, 3 validation, 4 usage, 5 io.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lots/engine.hpp"
#include "lots/generators.hpp"
#include "lots/io.hpp"
#include "lots/montecarlo.hpp"
#include "lots/oracle.hpp"
#include "lots/procedures.hpp"
#include "lots/rng.hpp"

using nlohmann::ordered_json;
namespace fs = std::filesystem;
using namespace lots;

namespace {

int exit_code(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Parse: return 2;
    case ErrorKind::Validation: return 3;
    case ErrorKind::Usage: return 4;
    case ErrorKind::Io: return 5;
    }
    return 1;
}

CompatibilityRegime parse_regime(const std::string& token) {
    auto regime = regime_from_token(token);
    if (!regime)
        throw usage_error("regime must be C- or C+, got '" + token + "'");
    return *regime;
}

ProcedureKind parse_procedure(const std::string& token) {
    auto kind = procedure_from_token(token);
    if (!kind)
        throw usage_error("unknown procedure '" + token + "'");
    return *kind;
}

void emit(const ordered_json& report, const std::string& out_path) {
    std::string text = report.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out)
        throw io_error("cannot write '" + out_path + "'");
    out << text;
}

struct RunArgs {
    std::string market_path;
    std::string procedure;
    std::string regime = "C-";
    std::uint64_t seed = 0;
    std::string partition_path;
    std::string preferences_path;
    std::string plan_path;
    std::string out_path;
    bool verbose = false;
};

Procedure build_procedure(const Market& market, ProcedureKind kind, const RunArgs& args) {
    switch (kind) {
    case ProcedureKind::Song:
        if (args.preferences_path.empty())
            throw usage_error("song needs --preferences");
        return build_song(market, load_preferences(args.preferences_path));
    case ProcedureKind::MingOne:
        return build_ming_one(
            market, sample_uniform_job_orders(market.worker_ids(), market.job_ids(), args.seed));
    case ProcedureKind::MingTwo:
        return build_ming_two(market, args.seed);
    case ProcedureKind::QingOne:
    case ProcedureKind::QingTwo: {
        if (args.partition_path.empty())
            throw usage_error(to_token(kind) + " needs --partition");
        QingPartition partition = load_partition(args.partition_path);
        return kind == ProcedureKind::QingOne
                   ? build_qing_one(market, partition, args.seed)
                   : build_qing_two(market, partition, args.seed);
    }
    case ProcedureKind::TwoTube:
        return build_two_tube(market, args.seed);
    }
    throw usage_error("unknown procedure");
}

int cmd_run(const RunArgs& args) {
    Market market = load_market(args.market_path);
    ProcedureKind kind = parse_procedure(args.procedure);
    CompatibilityRegime regime = parse_regime(args.regime);

    Procedure proc = build_procedure(market, kind, args);
    if (!args.plan_path.empty()) {
        proc.plan = load_plan(args.plan_path);
        if (auto err = validate_plan(market, proc.plan))
            throw validation_error("plan file: " + *err);
    }

    std::vector<TraceEvent> trace;
    Matching mu = execute_traced(market, regime, proc.arrangement, proc.plan, trace);

    ordered_json report;
    report["command"] = "run";
    report["market"] = args.market_path;
    report["procedure"] = to_token(kind);
    report["regime"] = to_token(regime);
    report["seed"] = args.seed;
    report["matching"] = matching_to_json(mu);
    report["size"] = mu.size();
    report["level_vector"] = level_vector_to_json(level_vector(market, mu));
    report["maximum"] = is_maximum(market, regime, mu);
    if (market.workers().size() + market.jobs().size() <= kDefaultEnumerationBound)
        report["hl_optimal"] = is_hl_optimal(market, regime, mu);
    else
        report["hl_optimal"] = nullptr;
    if (args.verbose) {
        ordered_json events = ordered_json::array();
        for (const auto& ev : trace) {
            ordered_json e;
            e["sequence"] = ev.sequence;
            e["worker_tube"] = ev.worker_tube;
            e["worker"] = ev.worker;
            e["matched"] = ev.matched;
            if (ev.matched) {
                e["job"] = ev.job;
                e["job_tube"] = ev.job_tube;
            }
            events.push_back(e);
        }
        report["trace"] = events;
    }
    emit(report, args.out_path);
    return 0;
}

struct OracleArgs {
    std::string market_path;
    std::string regime = "C-";
    std::string out_path;
};

int cmd_oracle(const OracleArgs& args) {
    Market market = load_market(args.market_path);
    CompatibilityRegime regime = parse_regime(args.regime);
    Matching best = maximum_matching(market, regime);

    ordered_json report;
    report["command"] = "oracle";
    report["market"] = args.market_path;
    report["regime"] = to_token(regime);
    report["maximum_size"] = best.size();
    report["witness"] = matching_to_json(best);
    report["regionally_sufficient"] = is_regionally_sufficient(market);
    emit(report, args.out_path);
    return 0;
}

struct GenArgs {
    std::string case_name;
    std::size_t n = 2;
    std::string out_path;
};

int cmd_gen(const GenArgs& args) {
    GeneratedCase c = generate_case(args.case_name, args.n);

    fs::path market_path(args.out_path);
    std::string stem = market_path.string();
    if (stem.size() > 5 && stem.ends_with(".json"))
        stem.resize(stem.size() - 5);
    fs::path plan_path = stem + ".plan.json";
    fs::path partition_path = stem + ".partition.json";
    fs::path preferences_path = stem + ".preferences.json";

    save_market(c.market, market_path);
    save_plan(c.plan, plan_path);
    save_partition(c.partition, partition_path);
    save_preferences(c.plan.job_orders, preferences_path);

    ordered_json report;
    report["command"] = "gen";
    report["case"] = c.name;
    report["n"] = c.scale;
    report["regime"] = to_token(c.regime);
    report["market"] = market_path.string();
    report["plan"] = plan_path.string();
    report["partition"] = partition_path.string();
    report["preferences"] = preferences_path.string();
    std::cout << report.dump(2) << "\n";
    return 0;
}

struct VerifyArgs {
    std::string case_name;
    std::size_t n = 2;
    std::string out_path;
};

ordered_json verify_case(const GeneratedCase& c, bool& all_pass) {
    ordered_json assertions = ordered_json::array();
    auto record = [&](const std::string& name, const ordered_json& expected,
                      const ordered_json& actual) {
        bool pass = expected == actual;
        all_pass = all_pass && pass;
        ordered_json a;
        a["name"] = name;
        a["expected"] = expected;
        a["actual"] = actual;
        a["pass"] = pass;
        assertions.push_back(a);
    };

    std::size_t max_size = maximum_matching(c.market, c.regime).size();
    record("maximum_size", c.maximum_size, max_size);

    bool within_bound =
        c.market.workers().size() + c.market.jobs().size() <= kDefaultEnumerationBound;
    std::vector<LevelVector> achievable;
    if (within_bound)
        achievable = achievable_level_vectors(c.market, c.regime);

    for (const auto& [kind, want] : c.expected) {
        AssignmentArrangement arr = arrangement_for(kind, c.market, &c.partition);
        Matching mu = execute(c.market, c.regime, arr, c.plan);
        record(to_token(kind) + ".size", want.size, mu.size());
        record(to_token(kind) + ".level_vector", level_vector_to_json(want.level),
               level_vector_to_json(level_vector(c.market, mu)));

        auto maximal = c.expected_maximal.find(kind);
        if (maximal != c.expected_maximal.end())
            record(to_token(kind) + ".maximum", maximal->second,
                   is_maximum(c.market, c.regime, mu));
        auto hl = c.expected_hl_optimal.find(kind);
        if (hl != c.expected_hl_optimal.end() && within_bound)
            record(to_token(kind) + ".hl_optimal", hl->second,
                   is_hl_optimal_vector(level_vector(c.market, mu), achievable));
    }

    ordered_json out;
    out["case"] = c.name;
    out["n"] = c.scale;
    out["assertions"] = assertions;
    return out;
}

// The two-tube case has no single market: it sweeps the whole catalog of
// regionally-sufficient single-category markets with up to min(n, 5) workers
// and jobs, quantifying over every assignment plan.
ordered_json verify_two_tube(std::size_t n, bool& all_pass) {
    std::size_t bound = std::min<std::size_t>(n, 5);
    TwoTubeSweepStats stats = two_tube_catalog_sweep(bound, bound);

    ordered_json assertions = ordered_json::array();
    auto record = [&](const std::string& name, const ordered_json& expected,
                      const ordered_json& actual) {
        bool pass = expected == actual;
        all_pass = all_pass && pass;
        ordered_json a;
        a["name"] = name;
        a["expected"] = expected;
        a["actual"] = actual;
        a["pass"] = pass;
        assertions.push_back(a);
    };
    record("catalog_nonempty", true, stats.markets > 0);
    record("plans_missing_maximum", 0, stats.maximality_failures);
    record("plans_missing_full_fill", 0, stats.fill_failures);

    ordered_json out;
    out["case"] = "thm3";
    out["n"] = bound;
    out["markets"] = stats.markets;
    if (!stats.first_maximality_failure.empty())
        out["first_failure"] = stats.first_maximality_failure;
    else if (!stats.first_fill_failure.empty())
        out["first_failure"] = stats.first_fill_failure;
    out["assertions"] = assertions;
    return out;
}

int cmd_verify(const VerifyArgs& args) {
    if (args.n < 1 || args.n > 50)
        throw usage_error("--n must be between 1 and 50");

    // "all" is the fixture suite; the thm3 catalog sweep is addressed by name.
    std::vector<std::string> names;
    if (args.case_name == "all")
        names = generated_case_names();
    else
        names.push_back(args.case_name);

    bool all_pass = true;
    ordered_json cases = ordered_json::array();
    for (const auto& name : names) {
        if (name == "thm3")
            cases.push_back(verify_two_tube(args.n, all_pass));
        else
            cases.push_back(verify_case(generate_case(name, args.n), all_pass));
    }

    ordered_json report;
    report["command"] = "verify";
    report["n"] = args.n;
    report["cases"] = cases;
    report["pass"] = all_pass;
    emit(report, args.out_path);
    return all_pass ? 0 : 1;
}

struct MonteCarloArgs {
    std::string market_path;
    std::vector<std::string> procedures;
    std::string regime = "C-";
    std::uint64_t seed = 0;
    std::size_t trials = 1;
    std::string partition_path;
    std::string preferences_path;
    std::string out_path; // paired-trials CSV
};

int cmd_montecarlo(const MonteCarloArgs& args) {
    Market market = load_market(args.market_path);
    CompatibilityRegime regime = parse_regime(args.regime);
    if (args.trials < 1)
        throw usage_error("--trials must be at least 1");

    std::vector<ProcedureKind> kinds;
    for (const auto& token : args.procedures)
        kinds.push_back(parse_procedure(token));
    if (kinds.empty())
        throw usage_error("give at least one --procedure");

    MonteCarloOptions options;
    options.trials = args.trials;
    options.master_seed = args.seed;
    if (!args.partition_path.empty())
        options.partition = load_partition(args.partition_path);
    if (!args.preferences_path.empty())
        options.song_preferences = load_preferences(args.preferences_path);

    PairedTrials paired;
    std::vector<TrialStats> stats = compare_procedures(market, kinds, regime, options, &paired);

    ordered_json report;
    report["command"] = "montecarlo";
    report["market"] = args.market_path;
    report["regime"] = to_token(regime);
    report["seed"] = args.seed;
    report["trials"] = args.trials;
    report["procedures"] = ordered_json::array();
    for (const auto& s : stats)
        report["procedures"].push_back(trial_stats_to_json(s));
    std::cout << report.dump(2) << "\n";

    if (!args.out_path.empty()) {
        std::ofstream csv(args.out_path);
        if (!csv)
            throw io_error("cannot write '" + args.out_path + "'");
        csv << "trial,seed";
        for (const auto& kind : kinds)
            csv << "," << to_token(kind);
        csv << "\n";
        for (std::size_t t = 0; t < paired.sizes.size(); ++t) {
            csv << t << "," << paired.trial_seeds[t];
            for (std::size_t p = 0; p < kinds.size(); ++p)
                csv << "," << paired.sizes[t][p];
            csv << "\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sequential lots-drawing assignment procedures"};
    app.require_subcommand(1);

    RunArgs run_args;
    CLI::App* run = app.add_subcommand("run", "execute one procedure on a market file");
    run->add_option("--market", run_args.market_path, "market JSON file")->required();
    run->add_option("--procedure", run_args.procedure,
                    "song|ming1|ming2|qing1|qing2|twotube")->required();
    run->add_option("--regime", run_args.regime, "C- or C+");
    run->add_option("--seed", run_args.seed, "lottery seed");
    run->add_option("--partition", run_args.partition_path, "partition file (qing1/qing2)");
    run->add_option("--preferences", run_args.preferences_path, "preferences file (song)");
    run->add_option("--plan", run_args.plan_path, "fixed plan file overriding the lottery");
    run->add_option("--out", run_args.out_path, "write the JSON report here");
    run->add_flag("--verbose", run_args.verbose, "include the draw trace in the report");

    OracleArgs oracle_args;
    CLI::App* oracle = app.add_subcommand("oracle", "maximum matching and sufficiency report");
    oracle->add_option("--market", oracle_args.market_path, "market JSON file")->required();
    oracle->add_option("--regime", oracle_args.regime, "C- or C+");
    oracle->add_option("--out", oracle_args.out_path, "write the JSON report here");

    GenArgs gen_args;
    CLI::App* gen = app.add_subcommand("gen", "write a named case market and its sibling files");
    gen->add_option("case", gen_args.case_name,
                    "example1|prop1|prop2|prop3|prop4|thm1|thm2")->required();
    gen->add_option("--n", gen_args.n, "construction scale");
    gen->add_option("--out", gen_args.out_path, "market output path")->required();

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "re-derive a case and assert its outcomes");
    verify->add_option("case", verify_args.case_name,
                       "example1|prop1|prop2|prop3|prop4|thm1|thm2|thm3|all")->required();
    verify->add_option("--n", verify_args.n, "construction scale (1..50)");
    verify->add_option("--out", verify_args.out_path, "write the JSON report here");

    MonteCarloArgs mc_args;
    CLI::App* mc = app.add_subcommand("montecarlo", "seeded trial campaign over procedures");
    mc->add_option("--market", mc_args.market_path, "market JSON file")->required();
    mc->add_option("--procedure", mc_args.procedures, "procedure token (repeatable)");
    mc->add_option("--regime", mc_args.regime, "C- or C+");
    mc->add_option("--seed", mc_args.seed, "master seed");
    mc->add_option("--trials", mc_args.trials, "number of trials");
    mc->add_option("--partition", mc_args.partition_path, "partition file (qing1/qing2)");
    mc->add_option("--preferences", mc_args.preferences_path, "preferences file (song)");
    mc->add_option("--out", mc_args.out_path, "write the paired per-trial CSV here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 4;
    }

    try {
        if (run->parsed()) return cmd_run(run_args);
        if (oracle->parsed()) return cmd_oracle(oracle_args);
        if (gen->parsed()) return cmd_gen(gen_args);
        if (verify->parsed()) return cmd_verify(verify_args);
        if (mc->parsed()) return cmd_montecarlo(mc_args);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
