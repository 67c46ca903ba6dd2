#include <doctest.h>

#include <stdexcept>

#include <algorithm>

#include "woi/benchmarks.hpp"
#include "woi/orchestrator.hpp"
#include "woi/report_json.hpp"

using namespace woi;

namespace {

Concept simple_concept(const std::string& id, TestFunctionKind kind, int n = 12)
{
    Concept c;
    c.id = id;
    c.function = kind == TestFunctionKind::SCH1 ? TestFunction::make(kind, 1)
                                                : TestFunction::make(kind, n);
    c.transform = AffineTransform{{1.0, 1.0}, {0.0, 0.0}};
    return c;
}

RunConfig small_config()
{
    RunConfig cfg;
    // SCH1 can reach the window (its front passes (1,1)); the shifted ZDT1
    // cannot (its first objective stays at 2 or above)
    Concept shifted = simple_concept("ZDT1", TestFunctionKind::ZDT1);
    shifted.transform.offset = {2.0, 0.0};
    cfg.portfolio = {simple_concept("SCH1", TestFunctionKind::SCH1), shifted};
    cfg.woi_limits = {1.0, 1.05};
    cfg.target_l = 1;
    cfg.budget = 2000;
    cfg.ga.N = 10;
    cfg.policy.gq0 = 5;
    cfg.seed = 3;
    return cfg;
}

} // namespace

TEST_CASE("config validation rejects broken setups")
{
    RunConfig cfg = small_config();
    CHECK_NOTHROW(cfg.validate());

    RunConfig no_budget = small_config();
    no_budget.budget = 5; // below gq0 * concepts
    CHECK_THROWS_AS(no_budget.validate(), std::invalid_argument);

    RunConfig bad_l = small_config();
    bad_l.target_l = 3;
    CHECK_THROWS_AS(bad_l.validate(), std::invalid_argument);
    bad_l.target_l = 0;
    CHECK_THROWS_AS(bad_l.validate(), std::invalid_argument);

    RunConfig odd = small_config();
    odd.ga.N = 9;
    CHECK_THROWS_AS(odd.validate(), std::invalid_argument);

    RunConfig dupes = small_config();
    dupes.portfolio[1].id = "SCH1";
    CHECK_THROWS_AS(dupes.validate(), std::invalid_argument);
}

TEST_CASE("an all-containing window stops immediately after evaluation")
{
    RunConfig cfg = small_config();
    cfg.woi_limits = {1e9, 1e9};
    const RunReport report = run_simultaneous(cfg);

    CHECK(report.stop_reason == StopReason::target_reached);
    REQUIRE(report.satisficing.size() == 1);
    CHECK(report.satisficing[0].id == "SCH1"); // portfolio order
    CHECK(report.satisficing[0].generation == 0);
    CHECK(report.total_generations == 0);
    // both concepts were still initialized and evaluated
    CHECK(report.total_evaluations == 2 * 10);
    for (const ConceptReport& c : report.concepts)
        CHECK(c.trajectory.front() == std::pair{0, 0.0});
}

TEST_CASE("simultaneous search finds the reachable concept and freezes it")
{
    const RunConfig cfg = small_config();
    const RunReport report = run_simultaneous(cfg);

    CHECK(report.stop_reason == StopReason::target_reached);
    REQUIRE(report.satisficing.size() == 1);
    CHECK(report.satisficing[0].id == "SCH1");

    const ConceptReport& sch = report.concepts[0];
    CHECK(sch.status == ConceptStatus::satisficing);
    CHECK(sch.satisficing_generation == report.satisficing[0].generation);
    // frozen at detection: one evaluation block per generation up to detection
    CHECK(sch.generations == sch.satisficing_generation);
    CHECK(sch.evaluations ==
          static_cast<std::uint64_t>(cfg.ga.N) * static_cast<std::uint64_t>(sch.generations + 1));

    // a member of the final population sits inside the window
    const WindowOfInterest woi(cfg.woi_limits);
    bool inside = false;
    for (const MemberSnapshot& m : sch.final_population)
        inside = inside || woi.contains(m.y);
    CHECK(inside);
}

TEST_CASE("budget ledger adds up and respects the cap")
{
    RunConfig cfg = small_config();
    cfg.woi_limits = {-1.0, -1.0}; // unreachable: every objective is nonnegative
    cfg.budget = 64;
    const RunReport report = run_simultaneous(cfg);

    CHECK(report.stop_reason == StopReason::budget_exhausted);
    CHECK(report.satisficing.empty());
    CHECK(report.total_generations == 64);

    std::int64_t gens = 0;
    std::uint64_t evals = 0;
    for (const ConceptReport& c : report.concepts) {
        gens += c.generations;
        evals += c.evaluations;
    }
    CHECK(gens == report.total_generations);
    CHECK(evals == report.total_evaluations);
}

TEST_CASE("evaluation ledger matches the counter inside the objective functions")
{
    const RunConfig cfg = small_config();
    reset_evaluation_count();
    const RunReport report = run_simultaneous(cfg);
    CHECK(report.total_evaluations == evaluation_count());

    reset_evaluation_count();
    const RunReport seq = run_sequential(cfg);
    CHECK(seq.total_evaluations == evaluation_count());
}

TEST_CASE("identical seeds replay byte-identical reports")
{
    const RunConfig cfg = small_config();
    const std::string a = report_to_json(run_simultaneous(cfg));
    const std::string b = report_to_json(run_simultaneous(cfg));
    CHECK(a == b);

    RunConfig other = cfg;
    other.seed = 4;
    CHECK(report_to_json(run_simultaneous(other)) != a);
}

TEST_CASE("reports survive a serialization round trip")
{
    const RunReport report = run_simultaneous(small_config());
    const RunReport back = report_from_json(report_to_json(report));
    CHECK(report_to_json(back) == report_to_json(report));
}

TEST_CASE("sequential equals simultaneous for a single-concept portfolio")
{
    RunConfig cfg;
    cfg.portfolio = {simple_concept("SCH1", TestFunctionKind::SCH1)};
    cfg.woi_limits = {1.0, 1.05};
    cfg.target_l = 1;
    cfg.budget = 1000;
    cfg.ga.N = 10;
    cfg.seed = 8;

    const RunReport sim = run_simultaneous(cfg);
    const RunReport seq = run_sequential(cfg);
    CHECK(sim.stop_reason == StopReason::target_reached);
    CHECK(seq.stop_reason == StopReason::target_reached);
    CHECK(sim.total_generations == seq.total_generations);
    CHECK(sim.total_evaluations == seq.total_evaluations);
    CHECK(sim.satisficing[0].generation == seq.satisficing[0].generation);
}

TEST_CASE("sequential caps non-satisficing concepts at budget over concepts")
{
    RunConfig cfg = small_config();
    cfg.woi_limits = {-1.0, -1.0};
    cfg.budget = 2 * 25;
    const RunReport report = run_sequential(cfg);

    CHECK(report.stop_reason == StopReason::budget_exhausted);
    for (const ConceptReport& c : report.concepts) {
        CHECK(c.generations == 25);
        CHECK(c.status == ConceptStatus::exhausted);
    }
    CHECK(report.total_generations == 50);
}

TEST_CASE("frozen concepts stop consuming evaluations")
{
    RunConfig cfg;
    cfg.portfolio = {simple_concept("SCH1", TestFunctionKind::SCH1),
                     simple_concept("ZDT1", TestFunctionKind::ZDT1)};
    cfg.woi_limits = {1.0, 1.05}; // both concepts can get here; SCH1 is 1-D and fast
    cfg.target_l = 2;             // keep the run going after the first detection
    cfg.budget = 2000;
    cfg.ga.N = 10;
    cfg.policy.gq0 = 5;
    cfg.seed = 3;
    const RunReport report = run_simultaneous(cfg);

    const ConceptReport& sch = report.concepts[0];
    REQUIRE(sch.status == ConceptStatus::satisficing);
    // generations stop exactly at detection even though the run continued
    CHECK(sch.generations == sch.satisficing_generation);
    CHECK(report.total_generations > sch.generations);
    CHECK(sch.evaluations ==
          static_cast<std::uint64_t>(cfg.ga.N) * static_cast<std::uint64_t>(sch.generations + 1));
}

TEST_CASE("satisficing ids always map to in-window members of the final population")
{
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        RunConfig cfg = small_config();
        cfg.seed = seed;
        const RunReport report = run_simultaneous(cfg);
        const WindowOfInterest woi(cfg.woi_limits);
        for (const SatisficingEntry& entry : report.satisficing) {
            const auto it = std::find_if(report.concepts.begin(), report.concepts.end(),
                                         [&](const ConceptReport& c) { return c.id == entry.id; });
            REQUIRE(it != report.concepts.end());
            bool inside = false;
            for (const MemberSnapshot& m : it->final_population)
                inside = inside || woi.contains(m.y);
            CHECK(inside);
        }
    }
}

TEST_CASE("progress series is non-increasing and ends at the total evaluations")
{
    const RunReport report = run_simultaneous(small_config());
    REQUIRE_FALSE(report.progress.empty());
    for (std::size_t i = 1; i < report.progress.size(); ++i) {
        CHECK(report.progress[i].first >= report.progress[i - 1].first);
        CHECK(report.progress[i].second <= report.progress[i - 1].second);
    }
    CHECK(report.progress.back().first == report.total_evaluations);
}
