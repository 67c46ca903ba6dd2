#include "woi/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace woi {

void GAParams::validate() const
{
    if (N < 2 || N % 2 != 0)
        throw std::invalid_argument("ga.N: population size must be even and at least 2");
    if (p_c < 0.0 || p_c > 1.0)
        throw std::invalid_argument("ga.p_c: crossover probability must lie in [0,1]");
    if (p_m && (*p_m < 0.0 || *p_m > 1.0))
        throw std::invalid_argument("ga.p_m: mutation probability must lie in [0,1]");
    if (eta_c <= 0.0 || eta_m <= 0.0)
        throw std::invalid_argument("ga.eta_c/eta_m: distribution indices must be positive");
    if (n_r < 1)
        throw std::invalid_argument("ga.n_r: number of distance ranges must be at least 1");
    if (tournament_size < 1)
        throw std::invalid_argument("ga.tournament_size: must be at least 1");
}

ConceptPopulation init_population(const Concept& cdef, int N, Rng& rng)
{
    const TestFunction& fn = cdef.function;
    ConceptPopulation pop;
    pop.members.resize(static_cast<std::size_t>(N));
    for (Individual& ind : pop.members) {
        ind.x.resize(static_cast<std::size_t>(fn.n));
        for (int i = 0; i < fn.n; ++i)
            ind.x[static_cast<std::size_t>(i)] = rng.uniform(fn.lower[i], fn.upper[i]);
    }
    return pop;
}

std::size_t evaluate_and_measure(ConceptPopulation& pop, const Concept& cdef,
                                 const WindowOfInterest& woi)
{
    std::size_t fresh = 0;
    for (Individual& ind : pop.members) {
        if (!ind.evaluated()) {
            ind.y = evaluate_concept(cdef, ind.x);
            ++fresh;
        }
        ind.distance = woi.distance(ind.y);
    }
    return fresh;
}

void assign_ranks(ConceptPopulation& pop, int n_r)
{
    if (pop.members.empty())
        return;
    double dmin = std::numeric_limits<double>::infinity();
    double dmax = -std::numeric_limits<double>::infinity();
    for (const Individual& ind : pop.members) {
        dmin = std::min(dmin, ind.distance);
        dmax = std::max(dmax, ind.distance);
    }
    const double delta = (dmax - dmin) / static_cast<double>(n_r);
    for (Individual& ind : pop.members) {
        if (delta <= 0.0) {
            ind.rank = 1;
            continue;
        }
        const int raw = static_cast<int>(std::floor((ind.distance - dmin) / delta + 1.0));
        ind.rank = std::clamp(raw, 1, n_r);
    }
}

void assign_crowding(ConceptPopulation& pop)
{
    const std::size_t n = pop.members.size();
    if (n == 0)
        return;
    const std::size_t n_o = pop.members.front().y.size();

    for (Individual& ind : pop.members)
        ind.crowding = 0.0;

    // Group member indices by rank.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return pop.members[a].rank < pop.members[b].rank;
    });

    std::size_t lo = 0;
    while (lo < n) {
        std::size_t hi = lo;
        while (hi < n && pop.members[order[hi]].rank == pop.members[order[lo]].rank)
            ++hi;
        std::vector<std::size_t> cls(order.begin() + static_cast<std::ptrdiff_t>(lo),
                                     order.begin() + static_cast<std::ptrdiff_t>(hi));
        const std::size_t m = cls.size();
        if (m <= 2) {
            for (std::size_t idx : cls)
                pop.members[idx].crowding = std::numeric_limits<double>::infinity();
        } else {
            for (std::size_t k = 0; k < n_o; ++k) {
                std::sort(cls.begin(), cls.end(), [&](std::size_t a, std::size_t b) {
                    return pop.members[a].y[k] < pop.members[b].y[k];
                });
                const double span = pop.members[cls.back()].y[k] - pop.members[cls.front()].y[k];
                pop.members[cls.front()].crowding = std::numeric_limits<double>::infinity();
                pop.members[cls.back()].crowding = std::numeric_limits<double>::infinity();
                if (span <= 0.0)
                    continue;
                for (std::size_t j = 1; j + 1 < m; ++j) {
                    pop.members[cls[j]].crowding +=
                        (pop.members[cls[j + 1]].y[k] - pop.members[cls[j - 1]].y[k]) / span;
                }
            }
        }
        lo = hi;
    }
}

bool beats(const Individual& a, const Individual& b)
{
    if (a.rank != b.rank)
        return a.rank < b.rank;
    return a.crowding > b.crowding;
}

std::vector<Individual> tournament_select(const ConceptPopulation& pop, std::size_t count,
                                          const GAParams& params, Rng& rng)
{
    const std::size_t n = pop.members.size();
    std::vector<Individual> parents;
    parents.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t champion = rng.uniform_index(n);
        for (int k = 1; k < params.tournament_size && n > 1; ++k) {
            std::size_t challenger;
            do {
                challenger = rng.uniform_index(n);
            } while (challenger == champion);
            const Individual& a = pop.members[challenger];
            const Individual& b = pop.members[champion];
            if (beats(a, b))
                champion = challenger;
            else if (!beats(b, a) && rng.coin_flip())
                champion = challenger;
        }
        parents.push_back(pop.members[champion]);
    }
    return parents;
}

namespace {

void sbx_pair(Individual& a, Individual& b, double eta_c, Rng& rng)
{
    for (std::size_t i = 0; i < a.x.size(); ++i) {
        const double x1 = a.x[i];
        const double x2 = b.x[i];
        if (x1 == x2)
            continue;
        const double u = rng.uniform01();
        double beta;
        if (u <= 0.5)
            beta = std::pow(2.0 * u, 1.0 / (eta_c + 1.0));
        else
            beta = std::pow(1.0 / (2.0 * (1.0 - u)), 1.0 / (eta_c + 1.0));
        a.x[i] = 0.5 * ((1.0 + beta) * x1 + (1.0 - beta) * x2);
        b.x[i] = 0.5 * ((1.0 - beta) * x1 + (1.0 + beta) * x2);
    }
}

void polynomial_mutation(Individual& ind, const TestFunction& domain, double p_m, double eta_m,
                         Rng& rng)
{
    for (std::size_t i = 0; i < ind.x.size(); ++i) {
        if (rng.uniform01() >= p_m)
            continue;
        const double lb = domain.lower[i];
        const double ub = domain.upper[i];
        const double range = ub - lb;
        const double x = ind.x[i];
        const double u = rng.uniform01();
        double dq;
        if (u < 0.5) {
            const double d1 = (x - lb) / range;
            const double val = 2.0 * u + (1.0 - 2.0 * u) * std::pow(1.0 - d1, eta_m + 1.0);
            dq = std::pow(val, 1.0 / (eta_m + 1.0)) - 1.0;
        } else {
            const double d2 = (ub - x) / range;
            const double val =
                2.0 * (1.0 - u) + 2.0 * (u - 0.5) * std::pow(1.0 - d2, eta_m + 1.0);
            dq = 1.0 - std::pow(val, 1.0 / (eta_m + 1.0));
        }
        ind.x[i] = x + dq * range;
    }
}

void clip_to_domain(Individual& ind, const TestFunction& domain)
{
    for (std::size_t i = 0; i < ind.x.size(); ++i)
        ind.x[i] = std::clamp(ind.x[i], domain.lower[i], domain.upper[i]);
}

} // namespace

std::vector<Individual> reproduce(const std::vector<Individual>& parents, const GAParams& params,
                                  const TestFunction& domain, Rng& rng)
{
    if (parents.size() % 2 != 0)
        throw std::invalid_argument("reproduce: parent count must be even");
    const double p_m = params.mutation_probability(domain.n);

    std::vector<Individual> offspring;
    offspring.reserve(parents.size());
    for (std::size_t i = 0; i + 1 < parents.size(); i += 2) {
        Individual a;
        Individual b;
        a.x = parents[i].x;
        b.x = parents[i + 1].x;
        if (rng.uniform01() < params.p_c)
            sbx_pair(a, b, params.eta_c, rng);
        polynomial_mutation(a, domain, p_m, params.eta_m, rng);
        polynomial_mutation(b, domain, p_m, params.eta_m, rng);
        clip_to_domain(a, domain);
        clip_to_domain(b, domain);
        offspring.push_back(std::move(a));
        offspring.push_back(std::move(b));
    }
    return offspring;
}

std::size_t advance_generation(ConceptPopulation& pop, const Concept& cdef,
                               const WindowOfInterest& woi, const GAParams& params, Rng& rng)
{
    const std::size_t N = pop.members.size();

    std::vector<Individual> parents = tournament_select(pop, N, params, rng);
    std::vector<Individual> offspring = reproduce(parents, params, cdef.function, rng);

    ConceptPopulation unionpop;
    unionpop.members.reserve(2 * N);
    for (Individual& ind : pop.members)
        unionpop.members.push_back(std::move(ind));
    for (Individual& ind : offspring)
        unionpop.members.push_back(std::move(ind));

    const std::size_t fresh = evaluate_and_measure(unionpop, cdef, woi);
    assign_ranks(unionpop, params.n_r);
    assign_crowding(unionpop);

    // Elite truncation; the tie chain keeps the order total so runs replay
    // exactly: rank, then crowding, then distance, then original position.
    std::vector<std::size_t> order(unionpop.members.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t ia, std::size_t ib) {
        const Individual& a = unionpop.members[ia];
        const Individual& b = unionpop.members[ib];
        if (a.rank != b.rank)
            return a.rank < b.rank;
        if (a.crowding != b.crowding)
            return a.crowding > b.crowding;
        if (a.distance != b.distance)
            return a.distance < b.distance;
        return ia < ib;
    });

    // Elitism guarantee: the union's min-distance member must survive even
    // when its rank class overflows N and its crowding would sort it out.
    std::size_t best = 0;
    for (std::size_t i = 1; i < unionpop.members.size(); ++i) {
        if (unionpop.members[i].distance < unionpop.members[best].distance)
            best = i;
    }
    if (std::find(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(N), best) ==
        order.begin() + static_cast<std::ptrdiff_t>(N))
        order[N - 1] = best;

    std::vector<Individual> elite;
    elite.reserve(N);
    for (std::size_t i = 0; i < N; ++i)
        elite.push_back(std::move(unionpop.members[order[i]]));

    pop.members = std::move(elite);
    pop.generation += 1;
    return fresh;
}

double min_distance(const ConceptPopulation& pop)
{
    double best = std::numeric_limits<double>::infinity();
    for (const Individual& ind : pop.members)
        best = std::min(best, ind.distance);
    return best;
}

} // namespace woi
