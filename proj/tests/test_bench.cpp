#include <doctest.h>

#include <fstream>
#include <sstream>

#include "hpfold/bench.hpp"

using namespace hpfold;
using namespace hpfold::bench;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

} // namespace

TEST_CASE("instance table expands to the declared lengths (one known mismatch)") {
    for (const Instance& inst : table_instances()) {
        const HpSequence seq = HpSequence::parse(inst.compact);
        if (inst.id == "5") {
            CHECK(inst.declared_length == 40);
            CHECK(seq.size() == 48); // the table label disagrees with its own string
        } else {
            CHECK(static_cast<int>(seq.size()) == inst.declared_length);
        }
    }
    CHECK(table_instances().size() == 10);
    CHECK(find_instance("7") != nullptr);
    CHECK(find_instance("11") == nullptr);
}

TEST_CASE("reference data keeps absent entries absent") {
    const Reference* r6 = reference_for("6");
    REQUIRE(r6 != nullptr);
    CHECK(r6->galsts_best == -40);
    CHECK(r6->best_known == -41);
    CHECK_FALSE(r6->ts.has_value()); // published as NA

    const Reference* r7 = reference_for("7");
    REQUIRE(r7 != nullptr);
    CHECK_FALSE(r7->best_known.has_value());
    CHECK(r7->galsts_mean == doctest::Approx(-68.26));

    const Reference* r9 = reference_for("9");
    REQUIRE(r9 != nullptr);
    CHECK(r9->galsts_best == -98);
    CHECK_FALSE(r9->galsts_mean.has_value());
}

TEST_CASE("shipped data files agree with the embedded tables") {
    const std::string base = HPFOLD_SOURCE_DIR;
    const auto entries = parse_sequence_file(slurp(base + "/data/benchmark_instances.tsv"));
    REQUIRE(entries.size() == table_instances().size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        CHECK(entries[i].id == table_instances()[i].id);
        CHECK(entries[i].compact == table_instances()[i].compact);
    }

    // reference file: one data row per instance, NA kept as text
    std::istringstream refs(slurp(base + "/data/reference_energies.tsv"));
    std::string line;
    int rows = 0;
    while (std::getline(refs, line))
        if (!line.empty() && line[0] != '#') ++rows;
    CHECK(rows == 10);
}

TEST_CASE("resolve_sequence handles ids and literals") {
    const ResolvedSequence by_id = resolve_sequence("3");
    CHECK(by_id.seq.size() == 25);
    CHECK(by_id.instance != nullptr);

    const ResolvedSequence literal = resolve_sequence("HPH");
    CHECK(literal.seq.size() == 3);
    CHECK(literal.instance == nullptr);

    CHECK_THROWS(resolve_sequence("Q"));
}

TEST_CASE("run records round-trip through JSONL") {
    const HpSequence seq = HpSequence::parse("HPHHPH");
    galsts::GaParams params;
    params.population = 8;
    params.max_generations = 3;
    params.seed = 99;
    const galsts::RunRecord rec = galsts::run(seq, params, "t1");
    const galsts::RunRecord back = record_from_jsonl(record_to_jsonl(rec));
    CHECK(rec.same_outcome(back));

    const auto many = records_from_jsonl(records_to_jsonl({rec, rec}));
    CHECK(many.size() == 2);
    CHECK(many[1].same_outcome(rec));
}

TEST_CASE("bench harness: canonical ordering, summaries, parallel determinism") {
    BenchRequest req;
    req.ids = {"1", "2"};
    req.runs = 3;
    req.jobs = 1;
    req.base.population = 10;
    req.base.max_generations = 2;
    req.base.ls_budget = 10;
    req.base.seed = 5;

    const BenchResult serial = run_bench(req);
    REQUIRE(serial.records.size() == 6);
    REQUIRE(serial.summaries.size() == 2);

    for (const SequenceSummary& s : serial.summaries) {
        CHECK(s.best <= s.mean);
        CHECK(s.mean <= s.worst);
        Energy best = 0;
        long long total = 0;
        for (std::size_t r = 0; r < s.energies.size(); ++r) {
            best = std::min(best, s.energies[r]);
            total += s.energies[r];
        }
        CHECK(s.best == best);
        CHECK(s.mean == doctest::Approx(static_cast<double>(total) / s.runs));
    }

    // per-run seeds are base + run index
    CHECK(serial.records[0].seed == 5);
    CHECK(serial.records[1].seed == 6);
    CHECK(serial.records[2].seed == 7);
    CHECK(serial.records[3].seed == 5); // next instance restarts the seed ladder

    req.jobs = 4;
    const BenchResult parallel = run_bench(req);
    REQUIRE(parallel.records.size() == serial.records.size());
    for (std::size_t i = 0; i < serial.records.size(); ++i)
        CHECK(serial.records[i].same_outcome(parallel.records[i]));
    CHECK(summaries_to_jsonl(serial) == summaries_to_jsonl(parallel));

    const std::string text = summaries_to_text(serial);
    CHECK(text.find("ref.best") != std::string::npos);

    // single run: best == mean == worst
    BenchRequest single;
    single.ids = {"1"};
    single.runs = 1;
    single.base = req.base;
    const BenchResult one = run_bench(single);
    CHECK(one.summaries[0].best == one.summaries[0].worst);
    CHECK(one.summaries[0].mean == doctest::Approx(one.summaries[0].best));

    CHECK_THROWS(run_bench(BenchRequest{{"77"}, 1, 1, {}}));
}
