#include "woi/allocation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace woi {

void AllocationPolicy::validate() const
{
    if (gq0 < 1)
        throw std::invalid_argument("policy.gq0: warm-up quota must be at least 1");
    if (quotas.empty())
        throw std::invalid_argument("policy.quotas: at least one quota required");
    for (std::size_t i = 0; i < quotas.size(); ++i) {
        if (quotas[i] < 1)
            throw std::invalid_argument("policy.quotas: every quota must be at least 1");
        if (i > 0 && quotas[i] >= quotas[i - 1])
            throw std::invalid_argument("policy.quotas: quotas must be strictly decreasing");
    }
    if (!category_sizes.empty()) {
        if (category_sizes.size() != quotas.size())
            throw std::invalid_argument("policy.category_sizes: need one size per quota");
        for (int s : category_sizes) {
            if (s < 0)
                throw std::invalid_argument("policy.category_sizes: sizes must be non-negative");
        }
    }
}

std::vector<int> proportional_sizes(int active, int n_cat)
{
    std::vector<int> sizes(static_cast<std::size_t>(n_cat), 0);
    if (active <= 0 || n_cat == 0)
        return sizes;
    if (n_cat == 1) {
        sizes[0] = active;
        return sizes;
    }
    int top = static_cast<int>(std::lround(0.25 * active));
    int bottom = static_cast<int>(std::lround(0.25 * active));
    if (top == 0)
        top = 1; // category 1 must exist while anything is active
    if (top + bottom > active)
        bottom = active - top;
    sizes[0] = top;
    sizes[static_cast<std::size_t>(n_cat) - 1] = bottom;
    // remainder into the middle tier(s); with three categories this is just
    // the classic 25/50/25 split
    int rest = active - top - bottom;
    for (std::size_t i = 1; i + 1 < sizes.size() && rest > 0; ++i) {
        sizes[i] = rest;
        rest = 0;
    }
    if (rest > 0)
        sizes[static_cast<std::size_t>(n_cat) - 1] += rest;
    return sizes;
}

const char* to_string(ConceptStatus status)
{
    switch (status) {
    case ConceptStatus::active: return "active";
    case ConceptStatus::satisficing: return "satisficing";
    case ConceptStatus::exhausted: return "exhausted";
    }
    throw std::logic_error("allocation: unknown concept status");
}

double concept_distance(ConceptState& state)
{
    const double d = min_distance(state.population);
    if (state.distance_history.empty() ||
        state.distance_history.back().first != state.population.generation)
        state.distance_history.emplace_back(state.population.generation, d);
    if (d == 0.0 && state.status == ConceptStatus::active) {
        state.status = ConceptStatus::satisficing;
        state.satisficing_generation = state.population.generation;
    }
    return d;
}

double distance_rate(const ConceptState& state)
{
    if (state.distance_history.size() < 2)
        return 0.0;
    const auto& [g0, d0] = state.distance_history[state.block_start];
    const auto& [g1, d1] = state.distance_history.back();
    if (g1 == g0)
        return 0.0;
    return (d1 - d0) / static_cast<double>(g1 - g0);
}

std::vector<std::pair<std::size_t, int>> categorize(const std::vector<ConceptState>& states,
                                                    const AllocationPolicy& policy)
{
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (states[i].status == ConceptStatus::active)
            active.push_back(i);
    }

    std::sort(active.begin(), active.end(), [&](std::size_t a, std::size_t b) {
        const double ra = distance_rate(states[a]);
        const double rb = distance_rate(states[b]);
        if (ra != rb)
            return ra < rb; // more negative = improving faster = more promising
        const double da = states[a].distance_history.back().second;
        const double db = states[b].distance_history.back().second;
        if (da != db)
            return da < db;
        return a < b;
    });

    const int n_cat = static_cast<int>(policy.quotas.size());
    const std::vector<int> sizes = policy.category_sizes.empty()
        ? proportional_sizes(static_cast<int>(active.size()), n_cat)
        : policy.category_sizes;

    std::vector<std::pair<std::size_t, int>> result;
    result.reserve(active.size());
    std::size_t next = 0;
    for (int cat = 1; cat <= n_cat && next < active.size(); ++cat) {
        int take = sizes[static_cast<std::size_t>(cat - 1)];
        if (cat == n_cat)
            take = static_cast<int>(active.size() - next); // last tier absorbs any excess
        for (int k = 0; k < take && next < active.size(); ++k, ++next)
            result.emplace_back(active[next], cat);
    }
    return result;
}

void allocate(std::vector<ConceptState>& states, const AllocationPolicy& policy)
{
    for (const ConceptState& state : states) {
        if (state.status == ConceptStatus::active && state.remaining > 0)
            throw std::logic_error("allocation: called while an active concept still has quota");
    }

    const auto categories = categorize(states, policy);
    for (ConceptState& state : states)
        state.remaining = 0;
    for (const auto& [idx, cat] : categories) {
        states[idx].category = cat;
        states[idx].remaining = policy.quotas[static_cast<std::size_t>(cat - 1)];
        states[idx].block_start = states[idx].distance_history.size() - 1;
    }
}

} // namespace woi
