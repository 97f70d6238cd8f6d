#include "hpfold/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace hpfold::bench {

using nlohmann::ordered_json;

const std::vector<Instance>& table_instances() {
    static const std::vector<Instance> instances = {
        {"1", 20, "(HP)^2PH(HP)^2(PH)^2HP(PH)^2"},
        {"2", 24, "H^2P^2(HP^2)^6H^2"},
        {"3", 25, "P^2HP^2(H^2P^4)^3H^2"},
        {"4", 36, "P(P^2H^2)^2P^5H^5(H^2P^2)^2P^2H(HP^2)^2"},
        {"5", 40, "P^2H(P^2H^2)^2P^5H^10P^6(H^2P^2)^2HP^2H^5"},
        {"6", 50, "H^2(PH)^3PH^4PH(P^3H)^2P^4(HP^3)^2HPH^4(PH)^3PH^2"},
        {"7", 60, "P(PH^3)^2H^5P^3H^10PHP^3H^12P^4H^6PH^2PHP"},
        {"8", 64, "H^12(PH)^2((P^2H^2)^2P^2H)^3(PH)^2H^11"},
        {"9", 85, "H^4P^4H^12P^6(H^12P^3)^3HP^2(H^2P^2)^2HPH"},
        {"10", 100, "P^3H^2P^2H^4P^2H^3(PH^2)^3H^2P^8H^6P^2H^6P^9HPH^2PH^11P^2H^3PH^2PHP^2HPH^3P^6H^3"},
    };
    return instances;
}

const Instance* find_instance(const std::string& id) {
    for (const Instance& inst : table_instances())
        if (inst.id == id) return &inst;
    return nullptr;
}

const Reference* reference_for(const std::string& id) {
    // Published best/mean/worst for the hybrid solver plus competitor bests;
    // "NA" entries in the source stay unset.
    static const std::vector<std::pair<std::string, Reference>> refs = {
        {"1", {-15, -14.86, -14, -15, -11, -15, -15, -15, -15, -15}},
        {"2", {-17, -15.53, -15, -17, -10, -13, -17, -13, -17, -17}},
        {"3", {-12, -12.0, -12, -12, -10, -10, -12, -12, -12, -12}},
        {"4", {-24, -21.93, -21, -24, -16, -19, -24, -20, -23, -24}},
        {"5", {-43, -39.86, -38, -43, -26, -32, -40, -32, -41, -40}},
        {"6", {-40, -37.6, -36, -41, -21, -23, std::nullopt, -30, -38, -40}},
        {"7", {-70, -68.26, -65, std::nullopt, -40, -46, -70, -55, -66, -67}},
        {"8", {-67, -58.46, -56, std::nullopt, -33, -46, -50, -47, -63, -63}},
        {"9", {-98, std::nullopt, std::nullopt, std::nullopt, std::nullopt, std::nullopt, std::nullopt,
               std::nullopt, std::nullopt, std::nullopt}},
        {"10", {-87, std::nullopt, std::nullopt, std::nullopt, std::nullopt, std::nullopt, std::nullopt,
                std::nullopt, std::nullopt, std::nullopt}},
    };
    for (const auto& [rid, ref] : refs)
        if (rid == id) return &ref;
    return nullptr;
}

ResolvedSequence resolve_sequence(const std::string& spec) {
    if (const Instance* inst = find_instance(spec))
        return {inst->id, HpSequence::parse(inst->compact), inst};
    return {spec, HpSequence::parse(spec), nullptr};
}

BenchResult run_bench(const BenchRequest& request,
                      const std::function<void(const galsts::RunRecord&)>& on_record) {
    const auto t0 = std::chrono::steady_clock::now();
    if (request.runs < 1) throw std::invalid_argument("bench: runs must be >= 1");
    if (request.jobs < 1) throw std::invalid_argument("bench: jobs must be >= 1");

    struct Job {
        std::size_t slot;
        const Instance* inst;
        std::uint64_t seed;
    };
    std::vector<Job> jobs;
    std::vector<const Instance*> insts;
    for (const std::string& id : request.ids) {
        const Instance* inst = find_instance(id);
        if (!inst) throw std::invalid_argument("bench: unknown instance id '" + id + "'");
        insts.push_back(inst);
    }
    for (std::size_t s = 0; s < insts.size(); ++s)
        for (int r = 0; r < request.runs; ++r)
            jobs.push_back({s * static_cast<std::size_t>(request.runs) + static_cast<std::size_t>(r),
                            insts[s], request.base.seed + static_cast<std::uint64_t>(r)});

    BenchResult result;
    result.records.resize(jobs.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= jobs.size()) return;
            const Job& job = jobs[idx];
            galsts::GaParams params = request.base;
            params.seed = job.seed;
            const HpSequence seq = HpSequence::parse(job.inst->compact);
            result.records[job.slot] = galsts::run(seq, params, job.inst->id);
        }
    };
    if (request.jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        const int count = std::min<int>(request.jobs, static_cast<int>(jobs.size()));
        pool.reserve(static_cast<std::size_t>(count));
        for (int t = 0; t < count; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    if (on_record)
        for (const galsts::RunRecord& rec : result.records) on_record(rec);

    for (std::size_t s = 0; s < insts.size(); ++s) {
        SequenceSummary sum;
        sum.id = insts[s]->id;
        sum.declared_length = insts[s]->declared_length;
        sum.runs = request.runs;
        sum.base_seed = request.base.seed;
        sum.reference = reference_for(sum.id);
        long long total = 0;
        for (int r = 0; r < request.runs; ++r) {
            const galsts::RunRecord& rec =
                result.records[s * static_cast<std::size_t>(request.runs) + static_cast<std::size_t>(r)];
            sum.n = static_cast<int>(rec.hp.size());
            sum.params = rec.params;
            sum.energies.push_back(rec.best_energy);
            total += rec.best_energy;
        }
        sum.best = *std::min_element(sum.energies.begin(), sum.energies.end());
        sum.worst = *std::max_element(sum.energies.begin(), sum.energies.end());
        sum.mean = static_cast<double>(total) / request.runs;
        result.summaries.push_back(std::move(sum));
    }
    result.wall_ms =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() * 1000.0;
    return result;
}

namespace {

ordered_json params_to_json(const galsts::GaParams& p) {
    return ordered_json{{"population", p.population},
                        {"ls_probability", p.ls_probability},
                        {"reproduction_budget", p.reproduction_budget},
                        {"ls_budget", p.ls_budget},
                        {"max_generations", p.max_generations},
                        {"time_limit_s", p.time_limit_s}};
}

galsts::GaParams params_from_json(const nlohmann::json& j) {
    galsts::GaParams p;
    p.population = j.at("population").get<int>();
    p.ls_probability = j.at("ls_probability").get<double>();
    p.reproduction_budget = j.at("reproduction_budget").get<int>();
    p.ls_budget = j.at("ls_budget").get<int>();
    p.max_generations = j.at("max_generations").get<int>();
    p.time_limit_s = j.at("time_limit_s").get<double>();
    return p;
}

} // namespace

std::string record_to_jsonl(const galsts::RunRecord& rec) {
    ordered_json j{{"sequence_id", rec.sequence_id},
                   {"hp", rec.hp},
                   {"seed", rec.seed},
                   {"params", params_to_json(rec.params)},
                   {"best_energy", rec.best_energy},
                   {"best_moves", rec.best_moves},
                   {"generations", rec.generations},
                   {"wall_ms", rec.wall_ms},
                   {"trace", rec.best_by_generation}};
    return j.dump();
}

galsts::RunRecord record_from_jsonl(const std::string& line) {
    const nlohmann::json j = nlohmann::json::parse(line);
    galsts::RunRecord rec;
    rec.sequence_id = j.at("sequence_id").get<std::string>();
    rec.hp = j.at("hp").get<std::string>();
    rec.seed = j.at("seed").get<std::uint64_t>();
    rec.params = params_from_json(j.at("params"));
    rec.params.seed = rec.seed;
    rec.best_energy = j.at("best_energy").get<Energy>();
    rec.best_moves = j.at("best_moves").get<std::vector<Dir>>();
    rec.generations = j.at("generations").get<int>();
    rec.wall_ms = j.at("wall_ms").get<double>();
    rec.best_by_generation = j.at("trace").get<std::vector<Energy>>();
    return rec;
}

std::string records_to_jsonl(const std::vector<galsts::RunRecord>& recs) {
    std::string out;
    for (const galsts::RunRecord& rec : recs) {
        out += record_to_jsonl(rec);
        out += '\n';
    }
    return out;
}

std::vector<galsts::RunRecord> records_from_jsonl(const std::string& text) {
    std::vector<galsts::RunRecord> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        out.push_back(record_from_jsonl(line));
    }
    return out;
}

std::string summaries_to_jsonl(const BenchResult& result) {
    std::string out;
    for (const SequenceSummary& s : result.summaries) {
        ordered_json j{{"sequence_id", s.id}, {"n", s.n},       {"declared_length", s.declared_length},
                       {"runs", s.runs},     {"base_seed", s.base_seed},
                       {"params", params_to_json(s.params)},
                       {"best", s.best},     {"mean", s.mean}, {"worst", s.worst},
                       {"energies", s.energies}};
        if (s.reference) {
            ordered_json ref{{"best", s.reference->galsts_best}};
            if (s.reference->galsts_mean) ref["mean"] = *s.reference->galsts_mean;
            if (s.reference->galsts_worst) ref["worst"] = *s.reference->galsts_worst;
            j["reference"] = ref;
            j["delta_best"] = s.best - s.reference->galsts_best;
        }
        if (s.n != s.declared_length) j["length_note"] = "declared length differs from expansion";
        out += j.dump();
        out += '\n';
    }
    return out;
}

std::string summaries_to_text(const BenchResult& result) {
    char buf[256];
    std::string out;
    out += "seq   n    runs  best   mean     worst  ref.best  ref.mean  d.best\n";
    for (const SequenceSummary& s : result.summaries) {
        std::string refb = "-", refm = "-", db = "-";
        if (s.reference) {
            refb = std::to_string(s.reference->galsts_best);
            if (s.reference->galsts_mean) {
                std::snprintf(buf, sizeof buf, "%.2f", *s.reference->galsts_mean);
                refm = buf;
            }
            db = std::to_string(s.best - s.reference->galsts_best);
        }
        std::snprintf(buf, sizeof buf, "%-5s %-4d %-5d %-6d %-8.2f %-6d %-9s %-9s %s\n", s.id.c_str(),
                      s.n, s.runs, s.best, s.mean, s.worst, refb.c_str(), refm.c_str(), db.c_str());
        out += buf;
        if (s.n != s.declared_length) {
            std::snprintf(buf, sizeof buf, "      note: declared length %d, expansion has %d residues\n",
                          s.declared_length, s.n);
            out += buf;
        }
    }
    return out;
}

} // namespace hpfold::bench
