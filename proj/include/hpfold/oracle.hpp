#pragma once

#include <cstdint>
#include <functional>

#include "hpfold/hp_model.hpp"

namespace hpfold::oracle {

/// Exhaustive-search result over all self-avoiding move vectors of a chain.
/// With symmetry reduction the search fixes the first move to direction 1 and
/// the first turning move to {2,3}, then multiplies counts back by the orbit
/// sizes (12 for turned walks, 6 for the straight chain), so counts and the
/// optimum are identical in both modes.
struct EnumerationResult {
    int n = 0;
    Energy optimal_energy = 0;
    std::uint64_t optimal_count = 0;
    std::uint64_t total_valid = 0;
    bool symmetry_reduced = false;
};

inline constexpr int kDefaultEnumerationCap = 16;

class CapExceededError : public std::runtime_error {
  public:
    explicit CapExceededError(int n, int cap)
        : std::runtime_error("enumeration cap exceeded: n=" + std::to_string(n) +
                             " > cap=" + std::to_string(cap)) {}
};

/// Depth-first enumeration of every self-avoiding conformation of seq,
/// pruning on collision. Exact; cost grows as ~6*5^(n-2).
/// Throws CapExceededError when seq.size() > cap.
EnumerationResult enumerate_optimal(const HpSequence& seq, bool symmetry_reduction,
                                    int cap = kDefaultEnumerationCap);

/// True iff `claimed` equals the exact optimum for seq.
bool verify_best(const HpSequence& seq, Energy claimed, int cap = kDefaultEnumerationCap);

/// Visits one optimal move vector (the lexicographically first found in the
/// reduced search); returns it. Intended for tests and small demos.
std::vector<Dir> sample_optimal_moves(const HpSequence& seq, int cap = kDefaultEnumerationCap);

/// Streams every valid move vector to `visit` (reduced search when
/// symmetry_reduction is set). `visit` may return false to stop early.
void for_each_conformation(const HpSequence& seq, bool symmetry_reduction,
                           const std::function<bool(const std::vector<Dir>&, Energy)>& visit,
                           int cap = kDefaultEnumerationCap);

} // namespace hpfold::oracle
