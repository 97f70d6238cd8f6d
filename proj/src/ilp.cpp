#include "hpfold/ilp.hpp"

#include <algorithm>
#include <stdexcept>

namespace hpfold::ilp {

const std::vector<GridDelta>& axial_grid_deltas() {
    static const std::vector<GridDelta> deltas = {{+1, +1}, {+1, 0}, {0, -1}, {-1, -1}, {-1, 0}, {0, +1}};
    return deltas;
}

const std::vector<GridDelta>& paper_grid_deltas() {
    static const std::vector<GridDelta> deltas = {{-1, +1}, {-1, 0}, {-1, -1}, {+1, -1}, {+1, 0}, {+1, +1}};
    return deltas;
}

GridDelta dir_grid_delta(Dir d) {
    static const GridDelta table[7] = {{0, 0}, {+1, +1}, {+1, 0}, {0, -1}, {-1, -1}, {-1, 0}, {0, +1}};
    return table[d];
}

namespace {

// Positive representatives of the (symmetric) neighbor delta sets, used to
// enumerate each unordered adjacent cell pair exactly once.
const std::vector<GridDelta>& positive_deltas(bool paper_faithful) {
    static const std::vector<GridDelta> ax = {{+1, 0}, {0, +1}, {+1, +1}};
    static const std::vector<GridDelta> pap = {{+1, -1}, {+1, 0}, {+1, +1}};
    return paper_faithful ? pap : ax;
}

} // namespace

const std::vector<GridDelta>& IlpModel::neighbor_deltas() const {
    return options_.paper_faithful ? paper_grid_deltas() : axial_grid_deltas();
}

IlpModel::IlpModel(const HpSequence& seq, IlpOptions options)
    : n_(static_cast<int>(seq.size())), hp_(seq.to_string()), options_(options) {
    if (n_ < 2) throw std::invalid_argument("ilp: sequence must have at least 2 residues");
    if (n_ > options_.max_n)
        throw std::invalid_argument("ilp: n=" + std::to_string(n_) + " exceeds model-size cap " +
                                    std::to_string(options_.max_n));

    h_flags_.resize(static_cast<std::size_t>(n_));
    for (int k = 1; k <= n_; ++k) {
        h_flags_[static_cast<std::size_t>(k - 1)] = seq.is_h(static_cast<std::size_t>(k - 1)) ? 1 : 0;
        if (h_flags_[static_cast<std::size_t>(k - 1)]) h_ranks_.push_back(k);
    }
    for (int k = 1; k < n_; ++k)
        if (rank_is_h(k) && rank_is_h(k + 1)) ++consecutive_hh_;

    // One product block per unordered adjacent cell pair and ordered pair of
    // distinct hydrophobic ranks.
    const int side = grid_side();
    const std::size_t hcount = h_ranks_.size();
    products_.reserve(static_cast<std::size_t>(expected_product_count(n_, static_cast<int>(hcount),
                                                                      options_.paper_faithful)));
    for (const GridDelta& d : positive_deltas(options_.paper_faithful)) {
        for (int i = 1; i <= side; ++i) {
            const int i2 = i + d.di;
            if (i2 < 1 || i2 > side) continue;
            for (int j = 1; j <= side; ++j) {
                const int j2 = j + d.dj;
                if (j2 < 1 || j2 > side) continue;
                const std::int32_t a = static_cast<std::int32_t>(cell_index({i, j}));
                const std::int32_t b = static_cast<std::int32_t>(cell_index({i2, j2}));
                for (int k : h_ranks_)
                    for (int kp : h_ranks_) {
                        if (k == kp) continue;
                        products_.push_back({a, b, static_cast<std::int16_t>(k),
                                             static_cast<std::int16_t>(kp)});
                    }
            }
        }
    }
}

std::int64_t IlpModel::constraint_count() const {
    return expected_constraint_count(n_, static_cast<int>(h_ranks_.size()), options_.paper_faithful);
}

std::string IlpModel::variable_name(std::int64_t index) const {
    if (index < y_count()) {
        const GridCell c = cell_at(index / n_);
        const int k = static_cast<int>(index % n_) + 1;
        return "y_" + std::to_string(c.i) + "_" + std::to_string(c.j) + "_" + std::to_string(k);
    }
    const ProductVar& p = products_[static_cast<std::size_t>(index - y_count())];
    const GridCell a = cell_at(p.cell_a);
    const GridCell b = cell_at(p.cell_b);
    return "w_" + std::to_string(a.i) + "_" + std::to_string(a.j) + "_" + std::to_string(b.i) + "_" +
           std::to_string(b.j) + "_" + std::to_string(p.k) + "_" + std::to_string(p.kp);
}

Assignment assignment_from_conformation(const IlpModel& model, const Conformation& conf) {
    if (conf.n() != model.n())
        throw std::invalid_argument("assignment: conformation length does not match model");

    // Embed: rank 1 at (n, n), every move by its fixed grid delta.
    const int n = model.n();
    std::vector<std::int64_t> cell_of_rank(static_cast<std::size_t>(n));
    GridCell at{n, n};
    cell_of_rank[0] = model.cell_index(at);
    for (int k = 1; k < n; ++k) {
        const GridDelta d = dir_grid_delta(conf.moves[static_cast<std::size_t>(k - 1)]);
        at = {at.i + d.di, at.j + d.dj};
        if (at.i < 1 || at.i > model.grid_side() || at.j < 1 || at.j > model.grid_side())
            throw std::logic_error("assignment: embedding escaped the 2n x 2n grid");
        cell_of_rank[static_cast<std::size_t>(k)] = model.cell_index(at);
    }

    Assignment asg(static_cast<std::size_t>(model.variable_count()), 0);
    for (int k = 1; k <= n; ++k)
        asg[static_cast<std::size_t>(cell_of_rank[static_cast<std::size_t>(k - 1)] * n + (k - 1))] = 1;

    const std::vector<ProductVar>& products = model.products();
    for (std::size_t t = 0; t < products.size(); ++t) {
        const ProductVar& p = products[t];
        const bool on = cell_of_rank[static_cast<std::size_t>(p.k - 1)] == p.cell_a &&
                        cell_of_rank[static_cast<std::size_t>(p.kp - 1)] == p.cell_b;
        asg[static_cast<std::size_t>(model.y_count() + static_cast<std::int64_t>(t))] = on ? 1 : 0;
    }
    return asg;
}

Evaluation evaluate_assignment(const IlpModel& model, const Assignment& asg) {
    if (static_cast<std::int64_t>(asg.size()) != model.variable_count())
        throw std::invalid_argument("evaluate: assignment size does not match variable count");
    for (std::int8_t v : asg)
        if (v == kMissingAssignment) throw std::invalid_argument("evaluate: assignment has missing variables");

    Evaluation ev;
    const int n = model.n();
    const int side = model.grid_side();
    const auto y = [&](int i, int j, int k) -> int {
        return asg[static_cast<std::size_t>(model.y_index({i, j}, k))];
    };

    auto fail = [&](std::string what) {
        ev.feasible = false;
        ev.first_violation = std::move(what);
        return ev;
    };

    if (y(n, n, 1) != 1) return fail("start");

    long long total = 0;
    for (std::int64_t idx = 0; idx < model.y_count(); ++idx) total += asg[static_cast<std::size_t>(idx)];
    if (total != n) return fail("total");

    for (int i = 1; i <= side; ++i)
        for (int j = 1; j <= side; ++j) {
            int sum = 0;
            for (int k = 1; k <= n; ++k) sum += y(i, j, k);
            if (sum > 1) return fail("cell_" + std::to_string(i) + "_" + std::to_string(j));
        }

    const std::vector<GridDelta>& deltas = model.neighbor_deltas();
    for (int k = 1; k < n; ++k)
        for (int i = 1; i <= side; ++i)
            for (int j = 1; j <= side; ++j) {
                if (y(i, j, k + 1) == 0) continue;
                int reach = 0;
                for (const GridDelta& d : deltas) {
                    const int i2 = i + d.di, j2 = j + d.dj;
                    if (i2 < 1 || i2 > side || j2 < 1 || j2 > side) continue;
                    reach += y(i2, j2, k);
                }
                if (reach < 1)
                    return fail("chain_" + std::to_string(i) + "_" + std::to_string(j) + "_" +
                                std::to_string(k));
            }

    if (model.repaired())
        for (int k = 1; k <= n; ++k) {
            int sum = 0;
            for (int i = 1; i <= side; ++i)
                for (int j = 1; j <= side; ++j) sum += y(i, j, k);
            if (sum != 1) return fail("rank_" + std::to_string(k));
        }

    const std::vector<ProductVar>& products = model.products();
    long long obj = -model.objective_constant();
    for (std::size_t t = 0; t < products.size(); ++t) {
        const int w = asg[static_cast<std::size_t>(model.y_count() + static_cast<std::int64_t>(t))];
        const ProductVar& p = products[t];
        const int ya = asg[static_cast<std::size_t>(p.cell_a * static_cast<std::int64_t>(n) + (p.k - 1))];
        const int yb = asg[static_cast<std::size_t>(p.cell_b * static_cast<std::int64_t>(n) + (p.kp - 1))];
        if (w > ya || w > yb || ya + yb - w > 1) return fail("mccormick_" + std::to_string(t));
        obj += w;
    }

    ev.feasible = true;
    ev.objective = obj;
    return ev;
}

std::int64_t expected_y_count(int n) { return 4LL * n * n * n; }

std::int64_t expected_adjacent_pair_count(int n, bool paper_faithful) {
    const std::int64_t s = 2LL * n;
    // straight delta (+1,0): (s-1)*s pairs; each diagonal delta: (s-1)^2.
    if (paper_faithful) return (s - 1) * s + 2 * (s - 1) * (s - 1);
    return 2 * s * (s - 1) + (s - 1) * (s - 1);
}

std::int64_t expected_product_count(int n, int h_count, bool paper_faithful) {
    return expected_adjacent_pair_count(n, paper_faithful) * h_count * (h_count - 1);
}

std::int64_t expected_constraint_count(int n, int h_count, bool paper_faithful) {
    const std::int64_t cells = 4LL * n * n;
    std::int64_t count = 2 + cells + cells * (n - 1) + 3 * expected_product_count(n, h_count, paper_faithful);
    if (!paper_faithful) count += n;
    return count;
}

} // namespace hpfold::ilp
