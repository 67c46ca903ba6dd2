#include "woi/orchestrator.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "woi/rng.hpp"

namespace woi {

const char* to_string(RunMode mode)
{
    switch (mode) {
    case RunMode::simultaneous: return "simultaneous";
    case RunMode::sequential: return "sequential";
    }
    throw std::logic_error("orchestrator: unknown run mode");
}

RunMode run_mode_from_string(const std::string& name)
{
    if (name == "simultaneous") return RunMode::simultaneous;
    if (name == "sequential") return RunMode::sequential;
    throw std::invalid_argument("mode: expected 'simultaneous' or 'sequential', got '" + name + "'");
}

const char* to_string(StopReason reason)
{
    switch (reason) {
    case StopReason::target_reached: return "target_reached";
    case StopReason::budget_exhausted: return "budget_exhausted";
    }
    throw std::logic_error("orchestrator: unknown stop reason");
}

void RunConfig::validate() const
{
    if (portfolio.empty())
        throw std::invalid_argument("concepts: portfolio must not be empty");
    std::set<std::string> ids;
    for (const Concept& c : portfolio) {
        c.validate();
        if (!ids.insert(c.id).second)
            throw std::invalid_argument("concepts: duplicate concept id '" + c.id + "'");
        if (c.transform.scale.size() != woi_limits.size())
            throw std::invalid_argument("concepts: objective dimension of '" + c.id
                                        + "' does not match the window dimension");
    }
    WindowOfInterest probe(woi_limits); // validates the limits themselves
    (void)probe;
    if (target_l < 1 || target_l > static_cast<int>(portfolio.size()))
        throw std::invalid_argument("target_l: must lie in [1, number of concepts]");
    ga.validate();
    policy.validate();
    const std::int64_t min_budget =
        static_cast<std::int64_t>(policy.gq0) * static_cast<std::int64_t>(portfolio.size());
    if (effective_budget() < min_budget)
        throw std::invalid_argument("budget: must cover at least gq0 generations per concept ("
                                    + std::to_string(min_budget) + ")");
}

bool detect_satisficing(ConceptState& state)
{
    if (state.status != ConceptStatus::active)
        return false;
    const bool was_active = state.satisficing_generation < 0;
    concept_distance(state);
    return was_active && state.status == ConceptStatus::satisficing;
}

namespace {

// Running best-distance-vs-evaluations series for the report.
struct ProgressTracker {
    std::uint64_t evaluations = 0;
    double best = std::numeric_limits<double>::infinity();
    std::vector<std::pair<std::uint64_t, double>> series;

    void record(std::uint64_t fresh, double distance)
    {
        evaluations += fresh;
        best = std::min(best, distance);
        series.emplace_back(evaluations, best);
    }
};

ConceptState make_state(const Concept& cdef, const RunConfig& config,
                        const WindowOfInterest& woi, Rng& rng)
{
    ConceptState state;
    state.def = cdef;
    state.population = init_population(cdef, config.ga.N, rng);
    state.evaluations += evaluate_and_measure(state.population, cdef, woi);
    assign_ranks(state.population, config.ga.n_r);
    assign_crowding(state.population);
    return state;
}

void snapshot_population(const ConceptState& state, ConceptReport& report)
{
    report.final_population.reserve(state.population.members.size());
    for (const Individual& ind : state.population.members)
        report.final_population.push_back({ind.x, ind.y});
}

RunReport finalize(const RunConfig& config, std::vector<ConceptState>& states,
                   std::vector<SatisficingEntry> satisficing, StopReason reason,
                   ProgressTracker& progress)
{
    RunReport report;
    report.mode = config.mode;
    report.seed = config.seed;
    report.stop_reason = reason;
    report.satisficing = std::move(satisficing);
    report.progress = std::move(progress.series);
    for (const ConceptState& state : states) {
        ConceptReport cr;
        cr.id = state.def.id;
        cr.generations = state.generations;
        cr.evaluations = state.evaluations;
        cr.final_category = state.category;
        cr.status = state.status;
        cr.satisficing_generation = state.satisficing_generation;
        cr.trajectory = state.distance_history;
        snapshot_population(state, cr);
        report.concepts.push_back(std::move(cr));
        report.total_generations += state.generations;
        report.total_evaluations += state.evaluations;
    }
    return report;
}

} // namespace

RunReport run_simultaneous(const RunConfig& config)
{
    config.validate();
    const WindowOfInterest woi(config.woi_limits);
    const std::int64_t budget = config.effective_budget();

    std::vector<ConceptState> states;
    std::vector<Rng> streams;
    states.reserve(config.portfolio.size());
    streams.reserve(config.portfolio.size());
    for (std::size_t j = 0; j < config.portfolio.size(); ++j) {
        streams.push_back(derive_stream(config.seed, j));
        states.push_back(make_state(config.portfolio[j], config, woi, streams[j]));
        states[j].remaining = config.policy.gq0;
    }

    std::vector<SatisficingEntry> found;
    ProgressTracker progress;
    int J = 0;

    // Initial populations may already sit inside the window. Every concept
    // records its generation-0 distance; the detection log stops at target_l.
    for (ConceptState& state : states) {
        const std::uint64_t init_evals = state.evaluations;
        if (detect_satisficing(state) && J < config.target_l) {
            found.push_back({state.def.id, state.population.generation});
            ++J;
        }
        progress.record(init_evals, state.distance_history.back().second);
    }
    if (J >= config.target_l)
        return finalize(config, states, std::move(found), StopReason::target_reached, progress);

    std::int64_t total_generations = 0;
    int allocation_round = 0;
    while (true) {
        // Round-robin, one generation per visit, until every active concept
        // has exhausted its quota block. Interleaving at generation
        // granularity keeps the satisficing-target check responsive.
        bool advanced = true;
        while (advanced && J < config.target_l && total_generations < budget) {
            advanced = false;
            for (std::size_t j = 0; j < states.size(); ++j) {
                if (J >= config.target_l || total_generations >= budget)
                    break;
                ConceptState& state = states[j];
                if (state.status != ConceptStatus::active || state.remaining <= 0)
                    continue;
                const std::uint64_t fresh =
                    advance_generation(state.population, state.def, woi, config.ga, streams[j]);
                state.evaluations += fresh;
                state.generations += 1;
                state.remaining -= 1;
                total_generations += 1;
                advanced = true;
                if (detect_satisficing(state)) {
                    found.push_back({state.def.id, state.population.generation});
                    ++J;
                }
                progress.record(fresh, state.distance_history.back().second);
            }
        }

        if (J >= config.target_l)
            return finalize(config, states, std::move(found), StopReason::target_reached, progress);
        if (total_generations >= budget)
            return finalize(config, states, std::move(found), StopReason::budget_exhausted, progress);

        const bool any_active = std::any_of(states.begin(), states.end(), [](const ConceptState& s) {
            return s.status == ConceptStatus::active;
        });
        if (!any_active)
            return finalize(config, states, std::move(found), StopReason::budget_exhausted, progress);

        allocate(states, config.policy);
        ++allocation_round;
        if (config.logger) {
            std::ostringstream line;
            line << "allocation round " << allocation_round << ": generations " << total_generations
                 << "/" << budget << ", satisficing " << J << "/" << config.target_l
                 << ", categories [";
            for (std::size_t j = 0; j < states.size(); ++j) {
                if (j > 0)
                    line << ' ';
                line << (states[j].status == ConceptStatus::active
                             ? std::to_string(states[j].category)
                             : std::string(to_string(states[j].status)).substr(0, 1));
            }
            line << "]";
            config.logger(line.str());
        }
    }
}

RunReport run_sequential(const RunConfig& config)
{
    config.validate();
    const WindowOfInterest woi(config.woi_limits);
    const std::int64_t cap =
        config.effective_budget() / static_cast<std::int64_t>(config.portfolio.size());

    std::vector<ConceptState> states;
    std::vector<SatisficingEntry> found;
    ProgressTracker progress;
    for (std::size_t j = 0; j < config.portfolio.size(); ++j) {
        Rng rng = derive_stream(config.seed, j);
        ConceptState state = make_state(config.portfolio[j], config, woi, rng);
        if (detect_satisficing(state))
            found.push_back({state.def.id, state.population.generation});
        progress.record(state.evaluations, state.distance_history.back().second);

        while (state.status == ConceptStatus::active && state.generations < cap) {
            const std::uint64_t fresh =
                advance_generation(state.population, state.def, woi, config.ga, rng);
            state.evaluations += fresh;
            state.generations += 1;
            if (detect_satisficing(state))
                found.push_back({state.def.id, state.population.generation});
            progress.record(fresh, state.distance_history.back().second);
        }
        if (state.status == ConceptStatus::active)
            state.status = ConceptStatus::exhausted;
        states.push_back(std::move(state));
    }

    const StopReason reason = static_cast<int>(found.size()) >= config.target_l
        ? StopReason::target_reached
        : StopReason::budget_exhausted;
    return finalize(config, states, std::move(found), reason, progress);
}

RunReport run(const RunConfig& config)
{
    return config.mode == RunMode::simultaneous ? run_simultaneous(config) : run_sequential(config);
}

} // namespace woi
