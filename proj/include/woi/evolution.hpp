#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "woi/benchmarks.hpp"
#include "woi/objective_space.hpp"
#include "woi/rng.hpp"

namespace woi {

struct Individual {
    std::vector<double> x;
    std::vector<double> y;     // empty until evaluated
    double distance = 0.0;     // window distance of y
    int rank = 0;
    double crowding = 0.0;

    bool evaluated() const { return !y.empty(); }
};

struct ConceptPopulation {
    std::vector<Individual> members;
    int generation = 0;
};

struct GAParams {
    int N = 20;                    // population size, even
    double p_c = 0.9;              // crossover probability per pair
    std::optional<double> p_m;     // per-variable mutation probability; unset -> 1/n
    double eta_c = 20.0;           // SBX distribution index
    double eta_m = 20.0;           // polynomial mutation distribution index
    int n_r = 10;                  // number of distance ranges for ranking
    int tournament_size = 2;
    std::uint64_t rng_seed = 1;

    double mutation_probability(int n) const
    {
        return p_m ? *p_m : 1.0 / static_cast<double>(n);
    }

    void validate() const;
};

// Uniform random population of size N inside the concept's decision box.
ConceptPopulation init_population(const Concept& cdef, int N, Rng& rng);

// Fills y and window distance for every member; members that already carry a
// performance vector are not re-evaluated. Returns the number of fresh
// objective evaluations.
std::size_t evaluate_and_measure(ConceptPopulation& pop, const Concept& cdef,
                                 const WindowOfInterest& woi);

// Distance-range ranking: rank = floor((d - d_min)/delta + 1) with
// delta = (d_max - d_min)/n_r, clamped to [1, n_r]. Degenerate spread
// (d_max == d_min) puts everyone in rank 1.
void assign_ranks(ConceptPopulation& pop, int n_r);

// Crowding distance within each rank class, computed over performance vectors
// with the usual cuboid method: per objective the class is sorted, boundary
// members get +inf, interior members accumulate normalized neighbor gaps.
void assign_crowding(ConceptPopulation& pop);

// True when a beats b lexicographically: lower rank first, then larger crowding.
bool beats(const Individual& a, const Individual& b);

// Tournament selection of `count` parents. Ties on (rank, crowding) are
// settled by coin flip.
std::vector<Individual> tournament_select(const ConceptPopulation& pop, std::size_t count,
                                          const GAParams& params, Rng& rng);

// SBX pairs with probability p_c (copies otherwise), then per-variable
// polynomial mutation, then clipping to the decision box. Offspring come back
// unevaluated.
std::vector<Individual> reproduce(const std::vector<Individual>& parents, const GAParams& params,
                                  const TestFunction& domain, Rng& rng);

// One full selection/reproduction cycle: tournament parents, offspring, union
// with the current members, rank + crowding over the union, elite truncation
// back to N. Returns fresh objective evaluations (the offspring).
std::size_t advance_generation(ConceptPopulation& pop, const Concept& cdef,
                               const WindowOfInterest& woi, const GAParams& params, Rng& rng);

// Minimum member distance of an evaluated population.
double min_distance(const ConceptPopulation& pop);

} // namespace woi
