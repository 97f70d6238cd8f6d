#include "hpfold/oracle.hpp"

#include <limits>

namespace hpfold::oracle {

namespace {

// DFS state shared across the recursion. Contacts are maintained
// incrementally: placing rank k adds the occupied H neighbors with rank
// <= k-2, removing it subtracts them again.
struct Search {
    const HpSequence& seq;
    int n;
    bool reduced;
    OccupancyGrid grid;
    std::vector<Point> points;
    std::vector<Dir> moves;
    int contacts = 0;

    Energy best = 1; // sentinel above any reachable energy
    std::uint64_t best_count = 0;
    std::uint64_t straight_leaves = 0;
    std::uint64_t turned_leaves = 0;
    bool best_is_straight = false; // reduced mode: does the optimum include the straight walk
    std::uint64_t best_turned = 0;
    const std::function<bool(const std::vector<Dir>&, Energy)>* visit = nullptr;
    bool stopped = false;

    explicit Search(const HpSequence& s, bool reduce)
        : seq(s), n(static_cast<int>(s.size())), reduced(reduce), grid(n),
          points(static_cast<std::size_t>(n)), moves(static_cast<std::size_t>(n > 0 ? n - 1 : 0)) {}

    int contact_delta(Point p, int rank0) const {
        if (!seq.is_h(rank0)) return 0;
        int added = 0;
        for (int d = 1; d <= 6; ++d) {
            const int j = grid.occupant(step(p, static_cast<Dir>(d)));
            if (j >= 0 && j <= rank0 - 2 && seq.is_h(j)) ++added;
        }
        return added;
    }

    void leaf(bool straight_so_far) {
        const Energy e = -contacts;
        if (visit) {
            if (!(*visit)(moves, e)) stopped = true;
            return;
        }
        if (straight_so_far) ++straight_leaves; else ++turned_leaves;
        if (e < best) {
            best = e;
            best_count = 0;
            best_is_straight = false;
            best_turned = 0;
        }
        if (e == best) {
            ++best_count;
            if (straight_so_far) best_is_straight = true; else ++best_turned;
        }
    }

    // straight_so_far: every move so far equals direction 1 (reduced mode).
    void grow(int rank0, bool straight_so_far) {
        if (stopped) return;
        if (rank0 == n) {
            leaf(straight_so_far);
            return;
        }
        const Point prev = points[rank0 - 1];
        for (int d = 1; d <= 6; ++d) {
            if (reduced) {
                if (rank0 == 1 && d != 1) break;              // first move fixed
                if (straight_so_far && (d == 5 || d == 6)) continue; // mirror side pruned
            }
            const Point p = step(prev, static_cast<Dir>(d));
            if (grid.occupant(p) >= 0) continue;
            const int added = contact_delta(p, rank0);
            grid.place(p, rank0);
            points[rank0] = p;
            moves[rank0 - 1] = static_cast<Dir>(d);
            contacts += added;
            grow(rank0 + 1, straight_so_far && d == 1);
            contacts -= added;
            grid.remove(p);
            if (stopped) return;
        }
    }

    void run() {
        grid.clear();
        grid.place(Point{0, 0}, 0);
        points[0] = Point{0, 0};
        if (n == 1) {
            leaf(true);
            return;
        }
        grow(1, true);
    }
};

void check_cap(const HpSequence& seq, int cap) {
    if (static_cast<int>(seq.size()) > cap) throw CapExceededError(static_cast<int>(seq.size()), cap);
}

} // namespace

EnumerationResult enumerate_optimal(const HpSequence& seq, bool symmetry_reduction, int cap) {
    check_cap(seq, cap);
    Search s(seq, symmetry_reduction);
    s.run();

    EnumerationResult res;
    res.n = s.n;
    res.symmetry_reduced = symmetry_reduction;
    res.optimal_energy = s.best;
    if (s.n == 1) {
        res.optimal_energy = 0;
        res.optimal_count = 1;
        res.total_valid = 1;
        return res;
    }
    if (!symmetry_reduction) {
        res.optimal_count = s.best_count;
        res.total_valid = s.straight_leaves + s.turned_leaves;
        return res;
    }
    // Orbit sizes: a turned walk has 12 distinct images under the lattice
    // point group, the straight walk 6 (it is mirror-fixed). A first turn of
    // 4 always collides, so no turned walk is mirror-fixed.
    res.total_valid = 12 * s.turned_leaves + 6 * s.straight_leaves;
    res.optimal_count = 12 * s.best_turned + (s.best_is_straight ? 6 : 0);
    return res;
}

bool verify_best(const HpSequence& seq, Energy claimed, int cap) {
    return enumerate_optimal(seq, true, cap).optimal_energy == claimed;
}

std::vector<Dir> sample_optimal_moves(const HpSequence& seq, int cap) {
    const Energy target = enumerate_optimal(seq, true, cap).optimal_energy;
    std::vector<Dir> found;
    for_each_conformation(
        seq, true,
        [&](const std::vector<Dir>& moves, Energy e) {
            if (e == target) {
                found = moves;
                return false;
            }
            return true;
        },
        cap);
    return found;
}

void for_each_conformation(const HpSequence& seq, bool symmetry_reduction,
                           const std::function<bool(const std::vector<Dir>&, Energy)>& visit,
                           int cap) {
    check_cap(seq, cap);
    Search s(seq, symmetry_reduction);
    s.visit = &visit;
    s.run();
}

} // namespace hpfold::oracle
