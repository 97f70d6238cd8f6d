#include "hpfold/galsts.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>
#include <stdexcept>

namespace hpfold::galsts {

void GaParams::validate() const {
    if (population < 2) throw std::invalid_argument("population must be >= 2");
    if (ls_probability < 0.0 || ls_probability > 1.0)
        throw std::invalid_argument("ls_probability must be in [0,1]");
    if (reproduction_budget < 0 || ls_budget < 0 || max_generations < 0 || time_limit_s < 0)
        throw std::invalid_argument("budgets must be nonnegative");
}

GaParams GaParams::resolved(int n) const {
    GaParams p = *this;
    if (p.reproduction_budget == 0) p.reproduction_budget = n;
    if (p.ls_budget == 0) p.ls_budget = 8 * n;
    return p;
}

namespace {

// Scratch state shared by the hot paths of one solver run. The grid clears in
// O(1), so reusing it turns per-call O(n^2) allocations into O(n) work.
struct Workspace {
    explicit Workspace(const HpSequence& s)
        : seq(s), n(static_cast<int>(s.size())), grid(n), scratch{} {
        scratch.moves.resize(static_cast<std::size_t>(n > 0 ? n - 1 : 0));
        scratch.points.resize(static_cast<std::size_t>(n));
    }

    const HpSequence& seq;
    int n;
    OccupancyGrid grid;
    Conformation scratch;

    Energy energy(const Conformation& conf) {
        grid.clear();
        for (int k = 0; k < n; ++k) grid.place(conf.points[static_cast<std::size_t>(k)], k);
        int contacts = 0;
        for (int i = 0; i < n; ++i) {
            if (!seq.is_h(static_cast<std::size_t>(i))) continue;
            const Point p = conf.points[static_cast<std::size_t>(i)];
            for (int d = 1; d <= 6; ++d) {
                const int j = grid.occupant(step(p, static_cast<Dir>(d)));
                if (j >= i + 2 && seq.is_h(static_cast<std::size_t>(j))) ++contacts;
            }
        }
        return -contacts;
    }

    // Splice of a.moves[0..cut-2] with b.moves[cut-1..]; decoded into `out`.
    // Returns false when the composite walk self-intersects.
    bool crossover_decode(const Conformation& a, const Conformation& b, int cut, Conformation& out) {
        for (int k = 0; k < cut - 1; ++k) out.moves[static_cast<std::size_t>(k)] = a.moves[static_cast<std::size_t>(k)];
        for (int k = cut - 1; k < n - 1; ++k) out.moves[static_cast<std::size_t>(k)] = b.moves[static_cast<std::size_t>(k)];
        grid.clear();
        out.points[0] = Point{0, 0};
        grid.place(out.points[0], 0);
        for (int k = 1; k < n; ++k) {
            out.points[static_cast<std::size_t>(k)] =
                step(out.points[static_cast<std::size_t>(k - 1)], out.moves[static_cast<std::size_t>(k - 1)]);
            if (!grid.place(out.points[static_cast<std::size_t>(k)], k)) return false;
        }
        return true;
    }

    // Single-move replacement; writes the result into `out` on success.
    bool mutate(const Conformation& conf, int u, Rng& rng, Conformation& out) {
        grid.clear();
        for (int k = 0; k < u; ++k) grid.place(conf.points[static_cast<std::size_t>(k)], k);

        const Dir old = conf.moves[static_cast<std::size_t>(u - 1)];
        Dir candidates[5];
        int cnum = 0;
        for (int d = 1; d <= 6; ++d)
            if (d != old) candidates[cnum++] = static_cast<Dir>(d);

        while (cnum > 0) {
            const int pick = static_cast<int>(rng.below(static_cast<std::uint64_t>(cnum)));
            const Dir d = candidates[pick];
            candidates[pick] = candidates[--cnum];
            bool ok = true;
            Point prev = conf.points[static_cast<std::size_t>(u - 1)];
            int placed_to = u - 1;
            for (int k = u; k < n; ++k) {
                const Dir mk = k == u ? d : conf.moves[static_cast<std::size_t>(k - 1)];
                prev = step(prev, mk);
                if (!grid.place(prev, k)) {
                    ok = false;
                    break;
                }
                out.points[static_cast<std::size_t>(k)] = prev;
                placed_to = k;
            }
            for (int k = u; k <= placed_to; ++k) grid.remove(out.points[static_cast<std::size_t>(k)]);
            if (!ok) continue;
            for (int k = 0; k < u; ++k) out.points[static_cast<std::size_t>(k)] = conf.points[static_cast<std::size_t>(k)];
            out.moves = conf.moves;
            out.moves[static_cast<std::size_t>(u - 1)] = d;
            return true;
        }
        return false;
    }

    // Hill climb in place: only strict improvements are kept.
    void improve(Individual& cur, int budget, Rng& rng) {
        if (n < 2) return;
        for (int it = 0; it < budget; ++it) {
            const int u = rng.between(1, n - 1);
            if (!mutate(cur.conf, u, rng, scratch)) continue;
            const Energy e = energy(scratch);
            if (e < cur.energy) {
                std::swap(cur.conf, scratch);
                cur.energy = e;
            }
        }
    }
};

std::pair<Individual, Individual> reproduce_in(Workspace& ws, const Individual& p1,
                                               const Individual& p2, const GaParams& resolved,
                                               Rng& rng, ReproduceStats* stats) {
    const int n = ws.n;
    Individual best1 = p1;
    Individual best2 = p2;
    if (n < 3) return {best1, best2}; // no admissible cut point exists

    std::vector<bool> tabu(static_cast<std::size_t>(n), false);
    Conformation child;
    child.moves.resize(static_cast<std::size_t>(n - 1));
    child.points.resize(static_cast<std::size_t>(n));
    for (int k = 0; k < resolved.reproduction_budget; ++k) {
        const int u = rng.between(2, n - 1);
        if (tabu[static_cast<std::size_t>(u)]) {
            if (stats) ++stats->tabu_skips;
            continue;
        }
        tabu[static_cast<std::size_t>(u)] = true;
        if (stats) stats->cuts_crossed.push_back(u);

        const bool apply_ls = resolved.ls_probability > 0 && rng.real01() <= resolved.ls_probability;
        for (int side = 0; side < 2; ++side) {
            const Conformation& head = side == 0 ? p1.conf : p2.conf;
            const Conformation& tail = side == 0 ? p2.conf : p1.conf;
            Individual& incumbent = side == 0 ? best1 : best2;
            if (!ws.crossover_decode(head, tail, u, child)) {
                if (stats) ++stats->invalid_offspring;
                continue;
            }
            Individual offspring{child, ws.energy(child)};
            if (apply_ls) ws.improve(offspring, resolved.ls_budget, rng);
            if (offspring.energy < incumbent.energy) incumbent = std::move(offspring);
        }
    }
    return {best1, best2};
}

} // namespace

Conformation random_conformation(int n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("random_conformation: n must be >= 1");
    Conformation conf;
    conf.points.resize(static_cast<std::size_t>(n));
    conf.moves.resize(static_cast<std::size_t>(n > 0 ? n - 1 : 0));
    conf.points[0] = Point{0, 0};
    if (n == 1) return conf;

    OccupancyGrid grid(n);
    for (;;) {
        grid.clear();
        grid.place(Point{0, 0}, 0);
        bool dead_end = false;
        for (int k = 1; k < n && !dead_end; ++k) {
            Dir candidates[6] = {1, 2, 3, 4, 5, 6};
            int remaining = 6;
            bool placed = false;
            while (remaining > 0) {
                const int pick = static_cast<int>(rng.below(static_cast<std::uint64_t>(remaining)));
                const Dir d = candidates[pick];
                candidates[pick] = candidates[--remaining];
                const Point p = step(conf.points[static_cast<std::size_t>(k - 1)], d);
                if (grid.place(p, k)) {
                    conf.points[static_cast<std::size_t>(k)] = p;
                    conf.moves[static_cast<std::size_t>(k - 1)] = d;
                    placed = true;
                    break;
                }
            }
            if (!placed) dead_end = true; // all six occupied: restart the walk
        }
        if (!dead_end) return conf;
    }
}

std::optional<Conformation> mutate(const Conformation& conf, int u, Rng& rng) {
    const int n = conf.n();
    if (u < 1 || u > n - 1) throw std::invalid_argument("mutate: move index out of range");
    // Standalone entry point; the solver loop goes through the shared
    // workspace instead.
    const HpSequence dummy(std::vector<Residue>(static_cast<std::size_t>(n), Residue::P));
    Workspace ws(dummy);
    Conformation out;
    out.moves.resize(static_cast<std::size_t>(n - 1));
    out.points.resize(static_cast<std::size_t>(n));
    if (!ws.mutate(conf, u, rng, out)) return std::nullopt;
    return out;
}

Individual local_search(const HpSequence& seq, Individual start, int budget, Rng& rng) {
    Workspace ws(seq);
    ws.improve(start, budget, rng);
    return start;
}

std::pair<DecodeResult, DecodeResult> crossover(const Conformation& p1, const Conformation& p2,
                                                int cut) {
    const int n = p1.n();
    if (p2.n() != n) throw std::invalid_argument("crossover: parents differ in length");
    if (cut <= 1 || cut >= n) throw std::invalid_argument("crossover: cut point out of range");

    std::vector<Dir> m1(p1.moves.begin(), p1.moves.begin() + (cut - 1));
    m1.insert(m1.end(), p2.moves.begin() + (cut - 1), p2.moves.end());
    std::vector<Dir> m2(p2.moves.begin(), p2.moves.begin() + (cut - 1));
    m2.insert(m2.end(), p1.moves.begin() + (cut - 1), p1.moves.end());
    return {decode(m1, n), decode(m2, n)};
}

std::size_t roulette_index_raw(std::span<const double> fitness, Rng& rng) {
    if (fitness.empty()) throw std::invalid_argument("roulette: empty fitness list");
    double total = 0;
    for (double f : fitness) {
        if (f < 0) throw std::invalid_argument("roulette: negative fitness");
        total += f;
    }
    if (total <= 0) return rng.below(fitness.size()); // all-zero: uniform
    const double r = rng.real01() * total;
    double acc = 0;
    for (std::size_t i = 0; i + 1 < fitness.size(); ++i) {
        acc += fitness[i];
        if (r < acc) return i;
    }
    return fitness.size() - 1;
}

std::vector<double> selection_proportions(std::span<const double> fitness) {
    double total = std::accumulate(fitness.begin(), fitness.end(), 0.0);
    std::vector<double> out(fitness.size(), 0.0);
    if (total <= 0) return out;
    for (std::size_t i = 0; i < fitness.size(); ++i) out[i] = fitness[i] / total;
    return out;
}

std::size_t roulette_index(std::span<const Energy> energies, Rng& rng) {
    if (energies.empty()) throw std::invalid_argument("roulette: empty population");
    const Energy worst = *std::max_element(energies.begin(), energies.end());
    // f(i) = 1 + (E_worst - E(i)), a strictly positive integer weight.
    std::uint64_t total = 0;
    for (Energy e : energies) total += static_cast<std::uint64_t>(1 + (worst - e));
    std::uint64_t r = rng.below(total);
    for (std::size_t i = 0; i < energies.size(); ++i) {
        const std::uint64_t w = static_cast<std::uint64_t>(1 + (worst - energies[i]));
        if (r < w) return i;
        r -= w;
    }
    return energies.size() - 1; // unreachable
}

std::pair<Individual, Individual> reproduce(const HpSequence& seq, const Individual& p1,
                                            const Individual& p2, const GaParams& params,
                                            Rng& rng, ReproduceStats* stats) {
    Workspace ws(seq);
    return reproduce_in(ws, p1, p2, params.resolved(ws.n), rng, stats);
}

bool RunRecord::same_outcome(const RunRecord& other) const {
    return sequence_id == other.sequence_id && hp == other.hp && seed == other.seed &&
           best_energy == other.best_energy && best_moves == other.best_moves &&
           generations == other.generations && best_by_generation == other.best_by_generation &&
           params.population == other.params.population &&
           params.ls_probability == other.params.ls_probability &&
           params.reproduction_budget == other.params.reproduction_budget &&
           params.ls_budget == other.params.ls_budget &&
           params.max_generations == other.params.max_generations &&
           params.seed == other.params.seed;
}

RunRecord run(const HpSequence& seq, const GaParams& params, std::string sequence_id) {
    params.validate();
    const auto t0 = std::chrono::steady_clock::now();
    const int n = static_cast<int>(seq.size());
    const GaParams p = params.resolved(n);

    Rng init_rng = Rng::stream(p.seed, 0);
    Rng select_rng = Rng::stream(p.seed, 1);
    Rng repro_rng = Rng::stream(p.seed, 2);

    const auto elapsed_s = [&t0] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };
    const auto out_of_time = [&] { return p.time_limit_s > 0 && elapsed_s() >= p.time_limit_s; };

    Workspace ws(seq);
    std::vector<Individual> pop;
    pop.reserve(static_cast<std::size_t>(p.population));
    for (int i = 0; i < p.population; ++i) {
        Conformation c = random_conformation(n, init_rng);
        const Energy e = ws.energy(c);
        pop.push_back({std::move(c), e});
    }

    Individual best = pop.front();
    for (const Individual& ind : pop)
        if (ind.energy < best.energy) best = ind;

    RunRecord rec;
    rec.sequence_id = std::move(sequence_id);
    rec.hp = seq.to_string();
    rec.params = p;
    rec.seed = p.seed;

    int gen = 0;
    for (; gen < p.max_generations && !out_of_time(); ++gen) {
        std::vector<Individual> pool;
        pool.reserve(static_cast<std::size_t>(p.population));
        std::set<std::vector<Dir>> seen;
        // Converged or tiny search spaces may be unable to produce m distinct
        // vectors; after the attempt cap, duplicates are accepted.
        const int max_attempts = p.population;
        int attempts = 0;
        std::vector<Energy> energies(pop.size());
        for (std::size_t i = 0; i < pop.size(); ++i) energies[i] = pop[i].energy;
        while (static_cast<int>(pool.size()) < p.population) {
            ++attempts;
            const std::size_t i1 = roulette_index(energies, select_rng);
            const std::size_t i2 = roulette_index(energies, select_rng);
            auto [o1, o2] = reproduce_in(ws, pop[i1], pop[i2], p, repro_rng, nullptr);
            const bool force = attempts > max_attempts;
            for (Individual* o : {&o1, &o2}) {
                if (static_cast<int>(pool.size()) >= p.population) break;
                if (force || seen.insert(o->conf.moves).second) pool.push_back(std::move(*o));
            }
        }
        // Elitist replacement: m best of the union, ties kept in insertion
        // order (current population first) for reproducibility.
        std::vector<Individual> unionpop = std::move(pop);
        unionpop.insert(unionpop.end(), std::make_move_iterator(pool.begin()),
                        std::make_move_iterator(pool.end()));
        std::stable_sort(unionpop.begin(), unionpop.end(),
                         [](const Individual& a, const Individual& b) { return a.energy < b.energy; });
        unionpop.resize(static_cast<std::size_t>(p.population));
        pop = std::move(unionpop);

        if (pop.front().energy < best.energy) best = pop.front();
        rec.best_by_generation.push_back(best.energy);
    }

    rec.best_energy = best.energy;
    rec.best_moves = best.conf.moves;
    rec.generations = gen;
    rec.wall_ms = elapsed_s() * 1000.0;
    return rec;
}

} // namespace hpfold::galsts
