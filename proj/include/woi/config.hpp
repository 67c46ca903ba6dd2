#pragma once

#include <set>
#include <string>

#include "woi/orchestrator.hpp"

namespace woi {

enum class Artifact { report, trajectories, boxplot, summary };

struct ExperimentSpec {
    RunConfig base;
    int repetitions = 1;
    std::set<Artifact> outputs = {Artifact::report, Artifact::trajectories, Artifact::boxplot,
                                  Artifact::summary};

    // seed policy: repetition i runs with base.seed + i
    std::uint64_t seed_for(int repetition) const
    {
        return base.seed + static_cast<std::uint64_t>(repetition);
    }

    void validate() const;
};

// Parses and validates a JSON run config. Unknown keys anywhere in the
// document are rejected; diagnostics name the offending key.
ExperimentSpec load_config(const std::string& path);
ExperimentSpec parse_config_text(const std::string& text);

// Built-in experiment presets: "case1", "case2" (the nine-concept benchmark
// portfolios) or "single:<function>:<limit,limit,...>" for a one-concept run
// with identity transform.
ExperimentSpec preset_spec(const std::string& name);

// JSON text equivalent to a preset, usable as a config-file starting point.
std::string preset_config_text(const std::string& name);

} // namespace woi
