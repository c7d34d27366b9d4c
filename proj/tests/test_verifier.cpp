#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <skewcat/verifier.hpp>

using namespace skewcat;

namespace {

Instance builtin_instance(const std::string& name) {
    Instance inst;
    inst.sys = builtins::by_name(name);
    inst.source = "builtin:" + name;
    const auto sp = structure_predicates(inst.sys.cat);
    inst.is_groupoid = sp.groupoid;
    inst.is_locally_abelian = sp.locally_abelian;
    if (name == "abs") inst.partial = builtins::make_abs_partial();
    return inst;
}

bool all_pass(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& c) { return c.pass; });
}

}  // namespace

TEST_CASE("groupoid generator is deterministic and produces valid tagged instances") {
    const Bounds bounds;
    for (std::uint64_t seed : {1ull, 7ull, 1234567ull, 999ull}) {
        CAPTURE(seed);
        const Instance a = gen_locally_abelian_groupoid_system(seed, bounds);
        const Instance b = gen_locally_abelian_groupoid_system(seed, bounds);
        CHECK(instance_to_json(a.sys) == instance_to_json(b.sys));
        CHECK(a.is_groupoid);
        CHECK(a.is_locally_abelian);
        CHECK(a.seed == seed);

        const auto sp = structure_predicates(a.sys.cat);
        CHECK(sp.groupoid);
        CHECK(sp.locally_abelian);
        CHECK(build_algebra(a.sys).dim <= bounds.max_dim);

        // round-trips through the JSON instance format and revalidates
        const DynSys back = parse_instance(instance_to_json(a.sys));
        CHECK(instance_to_json(back) == instance_to_json(a.sys));
    }
    // different seeds give different instances at least sometimes
    CHECK(instance_to_json(gen_locally_abelian_groupoid_system(1, bounds).sys) !=
          instance_to_json(gen_locally_abelian_groupoid_system(2, bounds).sys));
}

TEST_CASE("non-abelian groupoid probe") {
    const Bounds bounds;
    bool saw_nonabelian = false;
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const Instance p = gen_nonabelian_groupoid_system(seed, bounds);
        CHECK(p.is_groupoid);
        const auto sp = structure_predicates(p.sys.cat);
        CHECK(sp.groupoid);
        CHECK(p.is_locally_abelian == sp.locally_abelian);
        saw_nonabelian = saw_nonabelian || !p.is_locally_abelian;
        CHECK(instance_to_json(gen_nonabelian_groupoid_system(seed, bounds).sys) ==
              instance_to_json(p.sys));
    }
    CHECK(saw_nonabelian);
}

TEST_CASE("partial-system generator") {
    const Bounds bounds;
    int made = 0;
    for (std::uint64_t seed = 1; seed <= 30 && made < 10; ++seed) {
        try {
            const Instance p = gen_partial_system(seed, bounds);
            ++made;
            REQUIRE(p.partial.has_value());
            CHECK_NOTHROW(validate_partial_system(*p.partial));
            CHECK(instance_to_json(from_partial_system(*p.partial)) == instance_to_json(p.sys));
            CHECK(instance_to_json(gen_partial_system(seed, bounds).sys) ==
                  instance_to_json(p.sys));
        } catch (const Error& e) {
            CHECK(std::string(e.code()) == "ClosureExplosion");
        }
    }
    CHECK(made == 10);

    // a tight piece cap triggers the closure guard on some seed
    Bounds tight = bounds;
    tight.max_pieces = 3;
    bool exploded = false;
    for (std::uint64_t seed = 1; seed <= 40 && !exploded; ++seed) {
        try {
            (void)gen_partial_system(seed, tight);
        } catch (const Error& e) {
            exploded = std::string(e.code()) == "ClosureExplosion";
        }
    }
    CHECK(exploded);
}

TEST_CASE("congruence closure of kernel merges stays inside the kernel") {
    const DynSys d = builtins::make_prod();
    const Congruence ker = sigma_kernel(d);
    const int g00 = d.cat.morphism_index("g00"), g01 = d.cat.morphism_index("g01");
    REQUIRE(ker.related(g00, g01));
    const Congruence closed = detail::congruence_closure(d.cat, {{g00, g01}});
    for (int m = 0; m < d.cat.n_mor(); ++m)
        for (int n = 0; n < d.cat.n_mor(); ++n)
            if (closed.related(m, n)) CHECK(ker.related(m, n));
    // translation closure here recovers the full kernel
    CHECK(closed.cls == ker.cls);
    CHECK_NOTHROW(validate_congruence(
        d.cat, [&] {
            std::vector<std::vector<std::string>> classes;
            for (const auto& cl : closed.classes()) {
                std::vector<std::string> names;
                for (int m : cl) names.push_back(d.cat.morphisms[m]);
                classes.push_back(names);
            }
            return classes;
        }()));
}

TEST_CASE("per-instance checks pass on every built-in") {
    const Bounds bounds;
    for (const char* name : {"swap", "pair2", "pair3", "triv2", "prod", "abs", "subsets2", "arrow",
                             "fix3", "twoswap"}) {
        CAPTURE(name);
        const auto results = check_instance(builtin_instance(name), bounds);
        for (const auto& c : results) {
            CAPTURE(c.name);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("mutations are caught by deterministic witnesses") {
    const Bounds bounds;
    auto equivalence_fails = [&](const std::string& name, Mutation m) {
        for (const auto& c : check_instance(builtin_instance(name), bounds, m))
            if (c.name == "simplicity-equivalence-locally-abelian" && !c.pass) return true;
        return false;
    };
    // each weakened equivalence is refuted by a built-in that satisfies
    // the remaining conjuncts but is not simple
    CHECK(equivalence_fails("twoswap", Mutation::DropInverseConnected));
    CHECK(equivalence_fails("fix3", Mutation::DropMinimal));
    CHECK(equivalence_fails("prod", Mutation::DropFaithful));
    // and the unmutated equivalence holds on all three
    CHECK_FALSE(equivalence_fails("twoswap", Mutation::None));
    CHECK_FALSE(equivalence_fails("fix3", Mutation::None));
    CHECK_FALSE(equivalence_fails("prod", Mutation::None));
}

TEST_CASE("shrinking keeps the failure and only ever yields valid systems") {
    Instance inst = builtin_instance("pair3");
    int evaluated = 0;
    const auto still_fails = [&](const Instance& cand) {
        ++evaluated;
        // every candidate handed to the predicate must be a valid system
        CHECK_NOTHROW(build_algebra(cand.sys));
        return build_algebra(cand.sys).dim >= 2;
    };
    const Instance small = shrink(inst, still_fails);
    CHECK(evaluated > 1);
    CHECK(build_algebra(small.sys).dim >= 2);
    CHECK(small.sys.cat.n_obj() == 2);  // greedy object removal bottoms out at pair2
    CHECK(small.source == "builtin:pair3:shrunk");

    // a non-failing instance is returned untouched
    const Instance same = shrink(builtin_instance("swap"), [](const Instance&) { return false; });
    CHECK(instance_to_json(same.sys) == instance_to_json(builtins::make_swap()));
}

TEST_CASE("small campaign runs clean and counts correctly") {
    CampaignConfig cfg;
    cfg.seed = 5;
    cfg.groupoid_trials = 6;
    cfg.partial_trials = 6;
    cfg.nonabelian_every = 3;
    const CampaignSummary sum = run_campaign(cfg);
    CHECK(sum.failures == 0);
    CHECK(sum.failure_reports.empty());
    CHECK(sum.locally_abelian_groupoids == 6);
    CHECK(sum.partial_instances == 6);
    CHECK(sum.instances == 10 + 6 + 2 + 6);  // builtins + groupoid + probes + partial
    CHECK(sum.checks_run > sum.instances * 5);
    CHECK(sum.oracle_checked > 0);
    CHECK(sum.seed_lines.size() == 6 + 2 + 6);

    // identical configuration reproduces the identical campaign
    const CampaignSummary again = run_campaign(cfg);
    CHECK(again.checks_run == sum.checks_run);
    CHECK(again.seed_lines == sum.seed_lines);
}

TEST_CASE("mutated campaigns fail on the built-in prelude alone") {
    CampaignConfig cfg;
    cfg.groupoid_trials = 0;
    cfg.partial_trials = 0;
    cfg.nonabelian_every = 0;
    for (Mutation m : {Mutation::DropInverseConnected, Mutation::DropMinimal,
                       Mutation::DropFaithful}) {
        cfg.mutation = m;
        const CampaignSummary sum = run_campaign(cfg);
        CHECK(sum.failures > 0);
        REQUIRE_FALSE(sum.failure_reports.empty());
        for (const auto& rep : sum.failure_reports) {
            CHECK(rep.at("check") == "simplicity-equivalence-locally-abelian");
            // the shrunk witness is a well-formed instance
            CHECK_NOTHROW(parse_instance(rep.at("shrunk_instance")));
        }
    }
}
