#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hpfold/hp_model.hpp"
#include "hpfold/rng.hpp"

namespace hpfold::galsts {

/// Solver hyperparameters. A value of 0 for reproduction_budget or ls_budget
/// means "derive from the chain length at run start" (n and 8n respectively).
struct GaParams {
    int population = 200;          ///< m, number of individuals kept per generation
    double ls_probability = 0.8;   ///< p_m, chance an offspring pair goes through local search
    int reproduction_budget = 0;   ///< K_max, cut-point draws per parent pair
    int ls_budget = 0;             ///< mutation trials per local-search call
    int max_generations = 12;
    double time_limit_s = 0;       ///< wall-clock cap; 0 disables
    std::uint64_t seed = 1;

    void validate() const;
    /// Copy with zero budgets resolved against chain length n.
    GaParams resolved(int n) const;
};

struct Individual {
    Conformation conf;
    Energy energy = 0;
};

/// Grows a uniformly random self-avoiding conformation: each residue samples
/// directions without replacement until a free cell is found; a dead end
/// restarts the walk from the second residue with the occupancy reset.
Conformation random_conformation(int n, Rng& rng);

/// Replaces move u (1-based) with one of the five other directions, trying
/// them in random order and keeping the first self-avoiding result. Returns
/// nullopt when all five alternatives collide.
std::optional<Conformation> mutate(const Conformation& conf, int u, Rng& rng);

/// Hill climb: `budget` random single-move mutations, accepting only strict
/// energy improvements. The result is never worse than `start`.
Individual local_search(const HpSequence& seq, Individual start, int budget, Rng& rng);

/// One-point crossover at cut c (1 < c < n): offspring take the first c-1
/// moves from one parent and the rest from the other. Candidates are decoded
/// and flagged invalid rather than repaired.
std::pair<DecodeResult, DecodeResult> crossover(const Conformation& p1, const Conformation& p2,
                                                int cut);

/// Roulette-wheel draw over raw nonnegative fitness values.
std::size_t roulette_index_raw(std::span<const double> fitness, Rng& rng);

/// Selection probabilities implied by raw fitness values (sums to 1).
std::vector<double> selection_proportions(std::span<const double> fitness);

/// Roulette-wheel parent selection over a population of energies, using the
/// transform f(i) = 1 + (E_worst - E(i)) so lower energy means higher weight.
std::size_t roulette_index(std::span<const Energy> energies, Rng& rng);

/// Per-call trace of reproduce(), for tests.
struct ReproduceStats {
    std::vector<int> cuts_crossed;   ///< cut points actually used for crossover, in order
    int tabu_skips = 0;
    int invalid_offspring = 0;
};

/// Tabu-guided reproduction: K_max cut draws, each unused cut performs a
/// crossover (then local search on valid children with probability p_m) and
/// becomes tabu; children replace the running best pair only on strict
/// improvement, so the result is never worse than the parents.
std::pair<Individual, Individual> reproduce(const HpSequence& seq, const Individual& p1,
                                            const Individual& p2, const GaParams& params,
                                            Rng& rng, ReproduceStats* stats = nullptr);

/// Full provenance of one solver run.
struct RunRecord {
    std::string sequence_id;
    std::string hp;                ///< expanded residue letters
    GaParams params;               ///< budgets as actually used (resolved)
    std::uint64_t seed = 0;
    Energy best_energy = 0;
    std::vector<Dir> best_moves;
    int generations = 0;
    double wall_ms = 0;
    std::vector<Energy> best_by_generation; ///< best-ever after each generation

    /// Field-wise equality ignoring wall_ms (timing is not reproducible).
    bool same_outcome(const RunRecord& other) const;
};

/// Runs the full loop: random initial population, roulette parent selection,
/// tabu-guided reproduction into a deduplicated offspring pool, elitist
/// replacement by the m best of the union. Deterministic given params.seed.
RunRecord run(const HpSequence& seq, const GaParams& params, std::string sequence_id = "");

} // namespace hpfold::galsts
