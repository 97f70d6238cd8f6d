// Acceptance gates for the full artifact. Each criterion prints one PASS or
// FAIL line; the process exits nonzero if any gate fails.

#include <atomic>
#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "hpfold/bench.hpp"
#include "hpfold/galsts.hpp"
#include "hpfold/ilp.hpp"
#include "hpfold/oracle.hpp"

using namespace hpfold;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

// ---------------------------------------------------------------- criterion 1
void energy_ground_truth() {
    const HpSequence seq = HpSequence::parse("(HP)^2PH(HP)^2(PH)^2HP(PH)^2");
    const std::vector<Dir> mv = {2, 6, 2, 6, 5, 4, 5, 1, 5, 6, 2, 6, 2, 3, 2, 1, 5, 1, 5};
    const DecodeResult dec = decode(mv, 20);
    const bool ok = dec.valid && contact_energy(seq, dec.conf) == -15 &&
                    hh_contacts(seq, dec.conf).size() == 15;
    report(1, ok, "reference move vector decodes validly with E = -15 (15 H-H contacts)");
}

// ---------------------------------------------------------------- criterion 2
struct OracleCase {
    std::string letters;
    Energy optimum;
};

void oracle_equivalence() {
    Rng gen(424242);
    std::vector<OracleCase> cases;
    for (int i = 0; i < 50; ++i) {
        const int n = gen.between(2, 10);
        std::string letters;
        for (int k = 0; k < n; ++k) letters.push_back(gen.below(2) ? 'H' : 'P');
        cases.push_back({letters, oracle::enumerate_optimal(HpSequence::parse(letters), true).optimal_energy});
    }

    auto hits_with = [&](int gens) {
        std::atomic<int> hits{0};
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= cases.size()) return;
                galsts::GaParams params;
                params.population = 50;
                params.max_generations = gens;
                params.seed = 1000 + static_cast<std::uint64_t>(i);
                const galsts::RunRecord rec =
                    galsts::run(HpSequence::parse(cases[i].letters), params, "");
                if (rec.best_energy == cases[i].optimum) hits.fetch_add(1);
            }
        };
        std::thread t1(worker), t2(worker);
        t1.join();
        t2.join();
        return hits.load();
    };

    const int hits100 = hits_with(100);
    const int hits500 = hits_with(500);
    std::ostringstream detail;
    detail << "solver matches the exact optimum on " << hits100 << "/50 (gens=100, need >=45) and "
           << hits500 << "/50 (gens=500, need 50)";
    report(2, hits100 >= 45 && hits500 == 50, detail.str());
}

// ---------------------------------------------------------------- criterion 3
void ilp_consistency() {
    Rng rng(777);
    int checked = 0;
    bool ok = true;
    for (int it = 0; it < 1000 && ok; ++it) {
        const int n = rng.between(2, 12);
        std::string letters;
        for (int i = 0; i < n; ++i) letters.push_back(rng.below(2) ? 'H' : 'P');
        const HpSequence seq = HpSequence::parse(letters);
        const ilp::IlpModel model(seq);
        Rng walk(rng.next_u64());
        const Conformation conf = galsts::random_conformation(n, walk);
        const auto ev = ilp::evaluate_assignment(model, ilp::assignment_from_conformation(model, conf));
        ok = ev.feasible && ev.objective == -contact_energy(seq, conf);
        ++checked;
    }
    std::ostringstream detail;
    detail << checked << "/1000 random embeddings feasible with objective exactly -E";
    report(3, ok && checked == 1000, detail.str());
}

// ----------------------------------------------------------- criteria 4 and 5
bench::BenchResult desk_scale_bench() {
    bench::BenchRequest req;
    req.ids = {"1", "2", "3", "4"};
    req.runs = 30;
    req.jobs = static_cast<int>(std::max(2u, std::thread::hardware_concurrency()));
    req.base.seed = 1;
    return bench::run_bench(req);
}

void benchmark_reproduction(const bench::BenchResult& result) {
    Energy best[5] = {};
    for (const auto& s : result.summaries) best[std::stoi(s.id)] = s.best;
    const bool in_budget = result.wall_ms < 600000.0;
    const bool ok = best[1] == -15 && best[2] == -17 && best[3] == -12 && best[4] <= -23 && in_budget;
    std::ostringstream detail;
    detail << "30-run bests: seq1 " << best[1] << " (need -15), seq2 " << best[2]
           << " (need -17), seq3 " << best[3] << " (need -12), seq4 " << best[4]
           << " (need <= -23), wall " << result.wall_ms / 1000.0 << " s (budget 600)";
    report(4, ok, detail.str());
    std::printf("      informational deltas vs the published column:\n%s",
                bench::summaries_to_text(result).c_str());
    std::printf("      instances 5-10 are reported by the bench harness, not gated here\n");
}

void stability_analogue(const bench::BenchResult& result) {
    for (const auto& s : result.summaries)
        if (s.id == "3") {
            std::ostringstream detail;
            detail << "seq3 mean over 30 runs = " << s.mean << " (need exactly -12.0)";
            report(5, s.mean == -12.0, detail.str());
            return;
        }
    report(5, false, "seq3 summary missing");
}

// ---------------------------------------------------------------- criterion 6
bool distinct_points(const std::vector<Dir>& moves, int n) {
    std::vector<Point> pts(static_cast<std::size_t>(n));
    pts[0] = {0, 0};
    for (int k = 1; k < n; ++k)
        pts[static_cast<std::size_t>(k)] = step(pts[static_cast<std::size_t>(k - 1)], moves[static_cast<std::size_t>(k - 1)]);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (pts[static_cast<std::size_t>(a)] == pts[static_cast<std::size_t>(b)]) return false;
    return true;
}

void property_suites(const bench::BenchResult& bench_result) {
    Rng rng(31337);
    bool ok = true;
    std::string first_bad;
    auto expect = [&](bool cond, const char* what) {
        if (!cond && ok) {
            ok = false;
            first_bad = what;
        }
    };

    // self-avoidance <=> decode acceptance
    for (int it = 0; it < 1500; ++it) {
        const int n = rng.between(2, 30);
        std::vector<Dir> mv(static_cast<std::size_t>(n - 1));
        for (auto& d : mv) d = static_cast<Dir>(rng.between(1, 6));
        expect(decode(mv, n).valid == distinct_points(mv, n), "decode acceptance");
    }

    // energy = -|contacts|, degree bounds, rotation invariance
    for (int it = 0; it < 300; ++it) {
        const int n = rng.between(2, 24);
        Rng walk(rng.next_u64());
        const Conformation conf = galsts::random_conformation(n, walk);
        std::string letters;
        for (int i = 0; i < n; ++i) letters.push_back(rng.below(2) ? 'H' : 'P');
        const HpSequence seq = HpSequence::parse(letters);
        const auto contacts = hh_contacts(seq, conf);
        expect(contact_energy(seq, conf) == -static_cast<Energy>(contacts.size()), "energy identity");

        std::vector<int> degree(static_cast<std::size_t>(n + 1), 0);
        for (const auto& [i, j] : contacts) {
            ++degree[static_cast<std::size_t>(i)];
            ++degree[static_cast<std::size_t>(j)];
        }
        for (int r = 1; r <= n; ++r)
            expect(degree[static_cast<std::size_t>(r)] <= ((r == 1 || r == n) ? 5 : 4), "degree bound");

        const int rot = rng.between(1, 5);
        std::vector<Dir> relabeled = conf.moves;
        for (Dir& d : relabeled) d = rotated(d, rot);
        const DecodeResult turned = decode(relabeled, n);
        expect(turned.valid, "rotation keeps validity");
        if (turned.valid)
            expect(contact_energy(seq, turned.conf) == contact_energy(seq, conf), "rotation keeps energy");
    }

    // monotone best-ever traces from the desk-scale bench
    for (const auto& rec : bench_result.records)
        for (std::size_t g = 1; g < rec.best_by_generation.size(); ++g)
            expect(rec.best_by_generation[g] <= rec.best_by_generation[g - 1], "monotone best-ever");

    // per-call tabu non-repetition
    const HpSequence seq2 = HpSequence::parse("H^2P^2(HP^2)^6H^2");
    for (int it = 0; it < 50; ++it) {
        Rng walk(rng.next_u64());
        const Conformation c1 = galsts::random_conformation(24, walk);
        const Conformation c2 = galsts::random_conformation(24, walk);
        galsts::GaParams params;
        params.reproduction_budget = 72;
        params.ls_budget = 24;
        galsts::ReproduceStats stats;
        const galsts::Individual p1{c1, contact_energy(seq2, c1)};
        const galsts::Individual p2{c2, contact_energy(seq2, c2)};
        galsts::reproduce(seq2, p1, p2, params, walk, &stats);
        std::set<int> unique(stats.cuts_crossed.begin(), stats.cuts_crossed.end());
        expect(unique.size() == stats.cuts_crossed.size(), "tabu non-repetition");
    }

    // bit-identical rerun under a fixed seed (timing excluded)
    galsts::GaParams params;
    params.population = 30;
    params.max_generations = 10;
    params.seed = 2718;
    const galsts::RunRecord a = galsts::run(seq2, params, "2");
    const galsts::RunRecord b = galsts::run(seq2, params, "2");
    expect(a.same_outcome(b), "bit-identical rerun");

    report(6, ok, ok ? "decode equivalence, energy identity, degree bounds, rotation invariance, "
                       "monotone traces, tabu uniqueness, seeded rerun identity"
                     : "first failing property: " + first_bad);
}

// ---------------------------------------------------------------- criterion 7
void parallel_determinism() {
    bench::BenchRequest req;
    req.ids = {"1", "2"};
    req.runs = 8;
    req.base.population = 30;
    req.base.max_generations = 6;
    req.base.seed = 11;

    req.jobs = 1;
    const bench::BenchResult serial = bench::run_bench(req);
    req.jobs = 8;
    const bench::BenchResult parallel = bench::run_bench(req);

    bool ok = bench::summaries_to_jsonl(serial) == bench::summaries_to_jsonl(parallel);
    for (std::size_t i = 0; ok && i < serial.records.size(); ++i)
        ok = serial.records[i].same_outcome(parallel.records[i]);
    report(7, ok, "serial and 8-thread execution of one seed list give byte-identical summaries");
}

} // namespace

int main() {
    std::printf("acceptance suite: %u hardware threads\n", std::thread::hardware_concurrency());
    energy_ground_truth();
    oracle_equivalence();
    ilp_consistency();
    const bench::BenchResult desk = desk_scale_bench();
    benchmark_reproduction(desk);
    stability_analogue(desk);
    property_suites(desk);
    parallel_determinism();
    if (failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", failures);
    return 1;
}
