#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hpfold/galsts.hpp"
#include "hpfold/hp_model.hpp"

namespace hpfold::bench {

/// One benchmark instance. declared_length is the length printed in the
/// source table; instance 5's declared length (40) disagrees with its
/// expansion (48), and the harness reports the expansion while flagging the
/// mismatch instead of altering the string.
struct Instance {
    std::string id;
    int declared_length = 0;
    std::string compact;
};

const std::vector<Instance>& table_instances();
const Instance* find_instance(const std::string& id);

/// Published energies for one instance; absent values stay absent (never 0).
struct Reference {
    int galsts_best = 0;
    std::optional<double> galsts_mean;
    std::optional<int> galsts_worst;
    std::optional<int> best_known;
    std::optional<int> sga, hga, ts, ers_ga, hhga, imog;
};

const Reference* reference_for(const std::string& id);

/// Accepts an instance id ("1".."10") or a compact HP string.
/// Returns the parsed sequence plus the id it resolved to (the literal string
/// is echoed when it is not a table instance).
struct ResolvedSequence {
    std::string id;
    HpSequence seq;
    const Instance* instance = nullptr; // null for ad-hoc strings
};
ResolvedSequence resolve_sequence(const std::string& spec);

struct BenchRequest {
    std::vector<std::string> ids;      ///< instance ids to run
    int runs = 30;
    int jobs = 1;
    galsts::GaParams base;             ///< per-run seeds are base.seed + 0..runs-1
};

struct SequenceSummary {
    std::string id;
    int n = 0;
    int declared_length = 0;
    int runs = 0;
    std::uint64_t base_seed = 0;
    galsts::GaParams params;           ///< budgets as resolved for this instance
    Energy best = 0;
    double mean = 0;
    Energy worst = 0;
    std::vector<Energy> energies;      ///< per run, in seed order
    const Reference* reference = nullptr;
};

struct BenchResult {
    std::vector<galsts::RunRecord> records;   ///< ordered by (id position, run index)
    std::vector<SequenceSummary> summaries;
    double wall_ms = 0;
};

/// Runs runs x |ids| solver runs, up to `jobs` in parallel. Results are
/// ordered canonically by (instance position, run index), so serial and
/// parallel execution produce identical output.
BenchResult run_bench(const BenchRequest& request,
                      const std::function<void(const galsts::RunRecord&)>& on_record = nullptr);

/// RunRecord <-> JSONL. Records round-trip exactly except wall_ms precision.
std::string record_to_jsonl(const galsts::RunRecord& rec);
galsts::RunRecord record_from_jsonl(const std::string& line);
std::string records_to_jsonl(const std::vector<galsts::RunRecord>& recs);
std::vector<galsts::RunRecord> records_from_jsonl(const std::string& text);

/// Canonical timing-free summary lines (one JSON object per sequence).
std::string summaries_to_jsonl(const BenchResult& result);

/// Human-readable table with reference deltas.
std::string summaries_to_text(const BenchResult& result);

} // namespace hpfold::bench
