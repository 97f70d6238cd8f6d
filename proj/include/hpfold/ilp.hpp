#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hpfold/hp_model.hpp"

namespace hpfold::ilp {

/// Grid cell of the 0-1 placement model; rows and columns run 1..2n and the
/// chain is anchored at (n, n).
struct GridCell {
    int i = 0;
    int j = 0;
    friend bool operator==(GridCell a, GridCell b) { return a.i == b.i && a.j == b.j; }
};

struct GridDelta {
    int di = 0;
    int dj = 0;
};

/// Six neighbor deltas of the default model: the parity-free embedding of the
/// triangular lattice on a square index grid.
const std::vector<GridDelta>& axial_grid_deltas();

/// Six neighbor deltas of the study ("paper-faithful") variant: rows +-1 with
/// all three column offsets. This graph is bipartite, so it admits no
/// (i, i+2) contacts; it is emitted only for comparison.
const std::vector<GridDelta>& paper_grid_deltas();

/// Grid delta taken by lattice direction d under the fixed bridge
/// 1->(+1,+1), 2->(+1,0), 3->(0,-1), 4->(-1,-1), 5->(-1,0), 6->(0,+1).
GridDelta dir_grid_delta(Dir d);

/// Linearization product y_a^k * y_b^kp for an adjacent cell pair (a, b) and
/// an ordered pair of hydrophobic ranks.
struct ProductVar {
    std::int32_t cell_a = 0; ///< flat cell index of the first cell
    std::int32_t cell_b = 0;
    std::int16_t k = 0;  ///< 1-based rank placed at cell_a
    std::int16_t kp = 0; ///< 1-based rank placed at cell_b
};

struct IlpOptions {
    bool paper_faithful = false; ///< literal constraint set, no repair equalities
    int max_n = 24;              ///< model-size cap; var count grows as O(n^3)
};

/// The 0-1 program for one sequence. Binary variables are the placement
/// indicators y_i_j_k ((2n)^2 * n of them) followed by the linearization
/// products w_ia_ja_ib_jb_k_kp. Constraints:
///   start:       y_n_n_1 = 1
///   total:       sum of all y = n
///   cell_i_j:    sum_k y_i_j_k <= 1                       (4n^2 rows)
///   chain_i_j_k: y_i_j_(k+1) <= sum of neighbors' y^k     (4n^2 (n-1) rows)
///   rank_k:      sum_ij y_i_j_k = 1                       (n rows, default only)
///   3 McCormick rows per product
/// Objective: maximize sum of products minus the number of consecutive H-H
/// pairs in the sequence, which equals -E at every chain embedding.
class IlpModel {
  public:
    IlpModel(const HpSequence& seq, IlpOptions options = {});

    int n() const { return n_; }
    const std::string& hp() const { return hp_; }
    bool repaired() const { return !options_.paper_faithful; }
    const IlpOptions& options() const { return options_; }

    int grid_side() const { return 2 * n_; }
    std::int64_t cell_count() const { return static_cast<std::int64_t>(grid_side()) * grid_side(); }
    std::int64_t cell_index(GridCell c) const {
        return static_cast<std::int64_t>(c.i - 1) * grid_side() + (c.j - 1);
    }
    GridCell cell_at(std::int64_t flat) const {
        return {static_cast<int>(flat / grid_side()) + 1, static_cast<int>(flat % grid_side()) + 1};
    }

    std::int64_t y_count() const { return cell_count() * n_; }
    std::int64_t y_index(GridCell c, int k) const { return cell_index(c) * n_ + (k - 1); }
    std::int64_t product_count() const { return static_cast<std::int64_t>(products_.size()); }
    std::int64_t variable_count() const { return y_count() + product_count(); }
    const std::vector<ProductVar>& products() const { return products_; }
    const std::vector<GridDelta>& neighbor_deltas() const;

    std::int64_t constraint_count() const;
    std::string variable_name(std::int64_t index) const;

    /// Count of consecutive H-H pairs; the objective subtracts it.
    int objective_constant() const { return consecutive_hh_; }
    bool rank_is_h(int k) const { return h_flags_[static_cast<std::size_t>(k - 1)] != 0; }
    const std::vector<int>& h_ranks() const { return h_ranks_; }

  private:
    int n_;
    std::string hp_;
    IlpOptions options_;
    std::vector<std::uint8_t> h_flags_;
    std::vector<int> h_ranks_;
    int consecutive_hh_ = 0;
    std::vector<ProductVar> products_;
};

/// 0/1 per variable; kMissing marks unset entries (evaluate rejects them).
using Assignment = std::vector<std::int8_t>;
inline constexpr std::int8_t kMissingAssignment = -1;

/// Embeds a valid conformation into the grid via dir_grid_delta and sets all
/// y and product variables accordingly.
Assignment assignment_from_conformation(const IlpModel& model, const Conformation& conf);

struct Evaluation {
    bool feasible = false;
    long long objective = 0;     ///< exact, integer arithmetic
    std::string first_violation; ///< empty when feasible
};

/// Checks every constraint and computes the objective.
/// Throws std::invalid_argument if the assignment is missing any variable.
Evaluation evaluate_assignment(const IlpModel& model, const Assignment& assignment);

enum class ModelFormat { lp, mps };

/// Renders the full model as LP or fixed-field MPS text. The header comment
/// carries the sequence, n, the active constraint variant and the variable
/// naming legend.
std::string write_model(const IlpModel& model, ModelFormat format);

/// Closed-form counts used by the docs and tests.
std::int64_t expected_y_count(int n);
std::int64_t expected_adjacent_pair_count(int n, bool paper_faithful);
std::int64_t expected_product_count(int n, int h_count, bool paper_faithful);
std::int64_t expected_constraint_count(int n, int h_count, bool paper_faithful);

} // namespace hpfold::ilp
