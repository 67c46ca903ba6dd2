#pragma once

#include <string>
#include <utility>
#include <vector>

#include "woi/benchmarks.hpp"
#include "woi/evolution.hpp"

namespace woi {

// How generation quotas are split across promise categories. Category 1 is
// the most promising and must carry the largest quota.
struct AllocationPolicy {
    int gq0 = 10;                        // warm-up generations per concept
    std::vector<int> quotas = {10, 3, 1}; // GQ_1 > GQ_2 > ... >= 1
    std::vector<int> category_sizes;      // empty -> proportional 25/50/25 split

    void validate() const;
};

// Proportional category sizes for `active` concepts: roughly a quarter each
// for the top and bottom categories, the middle absorbing the remainder.
// Category 1 is never empty while any concept is active.
std::vector<int> proportional_sizes(int active, int n_cat);

enum class ConceptStatus { active, satisficing, exhausted };

const char* to_string(ConceptStatus status);

struct ConceptState {
    Concept def;
    ConceptPopulation population;
    int remaining = 0;   // generations left in the current quota block
    int category = 0;    // 0 until the first allocation round
    ConceptStatus status = ConceptStatus::active;
    std::vector<std::pair<int, double>> distance_history; // (generation, d)
    std::size_t block_start = 0; // index into distance_history of the block start

    int satisficing_generation = -1;
    int generations = 0;
    std::uint64_t evaluations = 0;
};

// Minimum member distance at the current generation, appended to the state's
// history. Flips status to satisficing on the first exact zero.
double concept_distance(ConceptState& state);

// Per-generation average distance change over the most recent quota block;
// negative means the concept is approaching the window. Neutral (0) with
// fewer than two history entries.
double distance_rate(const ConceptState& state);

// Sorts active concepts by rate (most negative first; ties by lower current
// distance, then original index) and assigns categories by the policy's
// sizes. Returns (index into states, category) pairs for active concepts.
std::vector<std::pair<std::size_t, int>> categorize(const std::vector<ConceptState>& states,
                                                    const AllocationPolicy& policy);

// Refills every active concept's remaining counter from its category quota.
// Non-active concepts stay at zero. Calling while some active concept still
// has quota left is an orchestrator bug.
void allocate(std::vector<ConceptState>& states, const AllocationPolicy& policy);

} // namespace woi
