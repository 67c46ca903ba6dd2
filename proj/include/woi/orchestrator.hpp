#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "woi/allocation.hpp"
#include "woi/benchmarks.hpp"
#include "woi/evolution.hpp"
#include "woi/objective_space.hpp"

namespace woi {

enum class RunMode { simultaneous, sequential };

const char* to_string(RunMode mode);
RunMode run_mode_from_string(const std::string& name);

enum class StopReason { target_reached, budget_exhausted };

const char* to_string(StopReason reason);

struct RunConfig {
    std::vector<Concept> portfolio;
    std::vector<double> woi_limits;
    int target_l = 1;
    std::int64_t budget = 0; // total generations across concepts; 0 -> 1000 per concept
    GAParams ga;
    AllocationPolicy policy;
    RunMode mode = RunMode::simultaneous;
    std::uint64_t seed = 1;

    // Optional sink for one progress line per allocation round; not part of
    // the run's identity.
    std::function<void(const std::string&)> logger;

    std::int64_t effective_budget() const
    {
        return budget > 0 ? budget : 1000 * static_cast<std::int64_t>(portfolio.size());
    }

    void validate() const;
};

struct SatisficingEntry {
    std::string id;
    int generation = 0;
};

struct MemberSnapshot {
    std::vector<double> x;
    std::vector<double> y;
};

struct ConceptReport {
    std::string id;
    int generations = 0;
    std::uint64_t evaluations = 0;
    int final_category = 0; // 0 = never reached an allocation round
    ConceptStatus status = ConceptStatus::active;
    int satisficing_generation = -1;
    std::vector<std::pair<int, double>> trajectory;
    std::vector<MemberSnapshot> final_population;
};

struct RunReport {
    RunMode mode = RunMode::simultaneous;
    std::uint64_t seed = 0;
    StopReason stop_reason = StopReason::budget_exhausted;
    std::vector<SatisficingEntry> satisficing; // detection order
    std::vector<ConceptReport> concepts;       // portfolio order
    std::int64_t total_generations = 0;
    std::uint64_t total_evaluations = 0;

    // Best distance over all concepts against cumulative evaluations, one
    // entry per evaluation event; non-increasing in the second component.
    std::vector<std::pair<std::uint64_t, double>> progress;
};

// Checks current distance; on the first exact zero the state freezes.
// Returns true exactly once per concept.
bool detect_satisficing(ConceptState& state);

// The whole simultaneous search: per-concept initialization, warm-up quotas,
// round-robin evolution one generation per visit, quota re-allocation when
// every active concept has spent its block, until the satisficing target or
// the generation budget is hit.
RunReport run_simultaneous(const RunConfig& config);

// Baseline: every concept evolved in isolation (no allocator) until it
// satisfices or uses budget/|portfolio| generations, portfolio order. Totals
// reflect the worst-case sequential cost.
RunReport run_sequential(const RunConfig& config);

// Dispatch on config.mode.
RunReport run(const RunConfig& config);

} // namespace woi
