// Command-line front end: validate instance files, analyze instances or
// built-ins, inspect generated ideals, and run verification campaigns.
//
// Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 resource cap exceeded.

#include <skewcat/verifier.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace skewcat;

int default_max_dim() {
    if (const char* env = std::getenv("SKEWCAT_MAX_DIM")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 64;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("FileNotReadable", "cannot open '" + path + "'");
    try {
        json j;
        in >> j;
        return j;
    } catch (const json::exception& e) {
        throw Error("InvalidJson", e.what());
    }
}

DynSys load_instance(const std::string& path, const std::string& builtin) {
    if (!builtin.empty()) return builtins::by_name(builtin);
    return parse_instance(read_json_file(path));
}

int exit_code_for(const Error& e) {
    if (e.code() == "DimensionCapExceeded" || e.code() == "BoundsExceeded" ||
        e.code() == "ClosureExplosion")
        return 3;
    return 2;
}

void print_error(const Error& e) {
    json j;
    j["error"] = e.code();
    j["message"] = e.what();
    std::cout << j.dump(2) << "\n";
}

void print_pretty(const DynSys& d, const Report& r) {
    const auto& g = d.cat;
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    std::cout << "objects: " << g.n_obj() << ", morphisms: " << g.n_mor()
              << ", algebra dimension: " << r.dim << "\n"
              << "radical dimension:  " << r.radical_dim << "\n"
              << "center dimension:   " << r.center_dim << "\n"
              << "simple over C:      " << yn(r.simple) << "\n"
              << "inverse connected:  " << yn(r.inverse_connected) << "\n"
              << "minimal:            " << yn(r.minimal) << "\n"
              << "faithful:           " << yn(r.faithful) << "\n"
              << "topologically free: " << yn(r.top_free) << "\n"
              << "max. commutative A: " << yn(r.maximal_commutative) << "\n"
              << "kernel loc. triv.:  " << yn(r.kernel_locally_trivial) << "\n"
              << "groupoid:           " << yn(r.structure.groupoid)
              << (r.structure.groupoid
                      ? std::string(", locally abelian: ") + yn(r.structure.locally_abelian)
                      : "")
              << "\n";
    for (int e = 0; e < g.n_obj(); ++e)
        std::cout << "object " << g.objects[e] << ": G_e-simple " << yn(r.ge_simple[e])
                  << ", corner center dim " << r.corner_center_dims[e] << "\n";
    if (!r.witnesses.empty()) std::cout << "witnesses: " << r.witnesses.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"skew category algebra toolkit"};
    app.require_subcommand(1);

    std::string path, builtin, element_text, seed_file, mutation_name;
    bool pretty = false;
    std::uint64_t seed = 1;
    int trials = 600;
    int max_dim = default_max_dim();

    auto* validate = app.add_subcommand("validate", "validate an instance file");
    validate->add_option("path", path, "instance JSON file")->required();

    auto* analyze_cmd = app.add_subcommand("analyze", "analyze an instance");
    analyze_cmd->add_option("path", path, "instance JSON file");
    analyze_cmd->add_option("--builtin", builtin, "built-in instance name");
    analyze_cmd->add_flag("--pretty", pretty, "human-readable text instead of JSON");
    analyze_cmd->add_option("--max-dim", max_dim, "algebra dimension cap");

    auto* ideal_cmd = app.add_subcommand("ideal", "two-sided ideal generated by an element");
    ideal_cmd->add_option("path", path, "instance JSON file");
    ideal_cmd->add_option("--builtin", builtin, "built-in instance name");
    ideal_cmd
        ->add_option("--element", element_text,
                     "generator as sparse JSON, e.g. "
                     "'[{\"morphism\":\"m\",\"point\":\"x\",\"coeff\":\"1/2\"}]'; "
                     "omitted coefficients default to 1")
        ->required();
    ideal_cmd->add_option("--max-dim", max_dim, "algebra dimension cap");

    auto* verify = app.add_subcommand("verify", "run the randomized verification campaign");
    verify->add_option("--seed", seed, "master seed");
    verify->add_option("--trials", trials,
                       "total generated instances (half groupoid, half general); "
                       "0 runs nothing, not even the built-ins");
    verify->add_option("--max-dim", max_dim, "algebra dimension cap");
    verify->add_option("--seed-file", seed_file, "write per-instance replay seeds to this file");
    verify->add_option("--mutation", mutation_name,
                       "weaken the groupoid equivalence for sensitivity testing")
        ->check(CLI::IsMember({"drop-inverse-connected", "drop-minimal", "drop-faithful"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) {
            parse_instance(read_json_file(path));
            return 0;
        }

        if (analyze_cmd->parsed()) {
            if (path.empty() && builtin.empty())
                throw Error("MissingInput", "give an instance file or --builtin NAME");
            const DynSys d = load_instance(path, builtin);
            const Report r = analyze(d, max_dim);
            if (pretty)
                print_pretty(d, r);
            else
                std::cout << report_to_json(d, r).dump(2) << "\n";
            return 0;
        }

        if (ideal_cmd->parsed()) {
            if (path.empty() && builtin.empty())
                throw Error("MissingInput", "give an instance file or --builtin NAME");
            const DynSys d = load_instance(path, builtin);
            const Algebra a = build_algebra(d, max_dim);
            json ej;
            try {
                ej = json::parse(element_text);
            } catch (const json::exception& e) {
                throw Error("InvalidElement", e.what());
            }
            std::cout << ideal_report(a, parse_element(a, ej)).dump(2) << "\n";
            return 0;
        }

        // verify
        CampaignConfig cfg;
        cfg.seed = seed;
        cfg.groupoid_trials = trials / 2;
        cfg.partial_trials = trials - trials / 2;
        cfg.include_builtins = trials > 0;
        cfg.bounds.max_dim = max_dim;
        if (mutation_name == "drop-inverse-connected") cfg.mutation = Mutation::DropInverseConnected;
        if (mutation_name == "drop-minimal") cfg.mutation = Mutation::DropMinimal;
        if (mutation_name == "drop-faithful") cfg.mutation = Mutation::DropFaithful;

        const CampaignSummary sum = run_campaign(cfg);
        if (!seed_file.empty()) {
            std::ofstream out(seed_file);
            out << "# master " << seed << "\n";
            for (const auto& line : sum.seed_lines) out << line << "\n";
        }
        json j;
        j["instances"] = sum.instances;
        j["checks_run"] = sum.checks_run;
        j["failures"] = sum.failures;
        j["locally_abelian_groupoids"] = sum.locally_abelian_groupoids;
        j["partial_instances"] = sum.partial_instances;
        j["oracle_checked"] = sum.oracle_checked;
        if (sum.failures > 0) j["failure_reports"] = sum.failure_reports;
        std::cout << j.dump(2) << "\n";
        return sum.failures > 0 ? 1 : 0;
    } catch (const Error& e) {
        print_error(e);
        return exit_code_for(e);
    } catch (const std::exception& e) {
        print_error(Error("Internal", e.what()));
        return 2;
    }
}
