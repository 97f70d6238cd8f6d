#include <doctest.h>

#include <sstream>

#include "hpfold/galsts.hpp"
#include "hpfold/ilp.hpp"
#include "hpfold/rng.hpp"

using namespace hpfold;
using namespace hpfold::ilp;

namespace {

Assignment embed_random(const IlpModel& model, const HpSequence& seq, Rng& rng, Energy* energy_out) {
    Rng walk(rng.next_u64());
    const Conformation conf = galsts::random_conformation(model.n(), walk);
    *energy_out = contact_energy(seq, conf);
    return assignment_from_conformation(model, conf);
}

// Minimal LP reader: counts "name:" rows inside Subject To and names listed
// under Binary. Independent of the writer's internals.
struct LpCounts {
    int constraints = 0;
    int binaries = 0;
    bool has_maximize = false, has_end = false;
};

LpCounts scan_lp(const std::string& text) {
    LpCounts counts;
    std::istringstream in(text);
    std::string line;
    enum { preamble, objective, subject_to, binary, done } section = preamble;
    while (std::getline(in, line)) {
        if (line.rfind("\\", 0) == 0) continue;
        if (line == "Maximize") { counts.has_maximize = true; section = objective; continue; }
        if (line == "Subject To") { section = subject_to; continue; }
        if (line == "Binary") { section = binary; continue; }
        if (line == "End") { counts.has_end = true; section = done; continue; }
        if (section == subject_to && line.find(':') != std::string::npos && line.rfind(" ", 0) == 0 &&
            line[1] != ' ')
            ++counts.constraints;
        if (section == binary && !line.empty()) ++counts.binaries;
    }
    return counts;
}

} // namespace

TEST_CASE("bridge table is a consistent lattice embedding") {
    for (int d = 1; d <= 6; ++d) {
        const GridDelta g = dir_grid_delta(static_cast<Dir>(d));
        const GridDelta o = dir_grid_delta(opposite(static_cast<Dir>(d)));
        CHECK(g.di == -o.di);
        CHECK(g.dj == -o.dj);
        bool in_set = false;
        for (const GridDelta& a : axial_grid_deltas())
            if (a.di == g.di && a.dj == g.dj) in_set = true;
        CHECK(in_set);
    }
    // linearity: delta(3) = delta(2) - delta(1), matching e3 = e2 - e1
    const GridDelta d1 = dir_grid_delta(1), d2 = dir_grid_delta(2), d3 = dir_grid_delta(3);
    CHECK(d3.di == d2.di - d1.di);
    CHECK(d3.dj == d2.dj - d1.dj);
}

TEST_CASE("two-residue models") {
    const IlpModel hh(HpSequence::parse("HH"));
    CHECK(hh.n() == 2);
    CHECK(hh.y_count() == 32);
    CHECK(hh.product_count() == expected_product_count(2, 2, false));
    CHECK(hh.objective_constant() == 1);

    const DecodeResult chain = decode({1}, 2);
    const Assignment asg = assignment_from_conformation(hh, chain.conf);
    const Evaluation ev = evaluate_assignment(hh, asg);
    CHECK(ev.feasible);
    CHECK(ev.objective == 0); // the single adjacency is consecutive

    const IlpModel hp(HpSequence::parse("HP"));
    CHECK(hp.product_count() == 0);
    CHECK(hp.objective_constant() == 0);
    const Evaluation ev2 = evaluate_assignment(hp, assignment_from_conformation(hp, chain.conf));
    CHECK(ev2.feasible);
    CHECK(ev2.objective == 0);
}

TEST_CASE("straight HHH chain scores zero") {
    const IlpModel model(HpSequence::parse("HHH"));
    const DecodeResult chain = decode({1, 1}, 3);
    const Evaluation ev = evaluate_assignment(model, assignment_from_conformation(model, chain.conf));
    CHECK(ev.feasible);
    CHECK(ev.objective == 0);
}

TEST_CASE("all-zero assignment violates the start fixing") {
    const IlpModel model(HpSequence::parse("HH"));
    Assignment zeros(static_cast<std::size_t>(model.variable_count()), 0);
    const Evaluation ev = evaluate_assignment(model, zeros);
    CHECK_FALSE(ev.feasible);
    CHECK(ev.first_violation == "start");
}

TEST_CASE("missing variables are an error") {
    const IlpModel model(HpSequence::parse("HH"));
    Assignment missing(static_cast<std::size_t>(model.variable_count()), kMissingAssignment);
    CHECK_THROWS_AS(evaluate_assignment(model, missing), std::invalid_argument);
    Assignment short_asg(3, 0);
    CHECK_THROWS_AS(evaluate_assignment(model, short_asg), std::invalid_argument);
}

TEST_CASE("objective equals minus the contact energy on random embeddings") {
    Rng rng(5);
    for (int it = 0; it < 60; ++it) {
        const int n = rng.between(2, 9);
        std::string letters;
        for (int i = 0; i < n; ++i) letters.push_back(rng.below(2) ? 'H' : 'P');
        const HpSequence seq = HpSequence::parse(letters);
        const IlpModel model(seq);
        Energy e = 0;
        const Assignment asg = embed_random(model, seq, rng, &e);
        const Evaluation ev = evaluate_assignment(model, asg);
        CHECK(ev.feasible);
        CHECK(ev.objective == -e);
    }
}

TEST_CASE("duplicated cell occupancy is caught by the cell constraint") {
    const HpSequence seq = HpSequence::parse("HHHH");
    const IlpModel model(seq);
    const DecodeResult chain = decode({1, 2, 4}, 4);
    REQUIRE(chain.valid);
    Assignment asg = assignment_from_conformation(model, chain.conf);
    // move rank 4 onto rank 2's cell
    const int n = model.n();
    GridCell c2{n, n}, c4{n, n};
    GridCell at{n, n};
    for (int k = 1; k < n; ++k) {
        const GridDelta d = dir_grid_delta(chain.conf.moves[static_cast<std::size_t>(k - 1)]);
        at = {at.i + d.di, at.j + d.dj};
        if (k == 1) c2 = at;
        if (k == 3) c4 = at;
    }
    asg[static_cast<std::size_t>(model.y_index(c4, 4))] = 0;
    asg[static_cast<std::size_t>(model.y_index(c2, 4))] = 1;
    const Evaluation ev = evaluate_assignment(model, asg);
    CHECK_FALSE(ev.feasible);
    CHECK(ev.first_violation.rfind("cell_", 0) == 0);
}

TEST_CASE("counts match the closed forms, and the repair adds n equalities") {
    for (const char* text : {"HHHHH", "HPHPH", "PPPPP"}) {
        const HpSequence seq = HpSequence::parse(text);
        int h = 0;
        for (std::size_t i = 0; i < seq.size(); ++i)
            if (seq.is_h(i)) ++h;

        const IlpModel fixed(seq);
        CHECK(fixed.y_count() == expected_y_count(5));
        CHECK(fixed.product_count() == expected_product_count(5, h, false));
        CHECK(fixed.constraint_count() == expected_constraint_count(5, h, false));

        const IlpModel literal(seq, {.paper_faithful = true});
        CHECK(literal.product_count() == expected_product_count(5, h, true));
        CHECK(literal.constraint_count() == expected_constraint_count(5, h, true));
        CHECK(literal.constraint_count() < fixed.constraint_count());
    }
    // n=2 arithmetic, fully by hand: 33 adjacent pairs, 2 ordered H pairs
    CHECK(expected_adjacent_pair_count(2, false) == 33);
    CHECK(expected_adjacent_pair_count(2, true) == 30);
    CHECK(expected_product_count(2, 2, false) == 66);
    CHECK(expected_constraint_count(2, 2, false) == 2 + 16 + 16 + 2 + 198);
}

TEST_CASE("size cap rejects long chains") {
    CHECK_THROWS_AS(IlpModel(HpSequence::parse("H^25"), {.paper_faithful = false, .max_n = 24}),
                    std::invalid_argument);
    CHECK_THROWS_AS(IlpModel(HpSequence::parse("H")), std::invalid_argument);
}

TEST_CASE("LP text structure and parse-back") {
    const IlpModel model(HpSequence::parse("HH"));
    const std::string text = write_model(model, ModelFormat::lp);
    const LpCounts counts = scan_lp(text);
    CHECK(counts.has_maximize);
    CHECK(counts.has_end);
    CHECK(counts.constraints == model.constraint_count());
    CHECK(counts.binaries == model.variable_count());
    CHECK(text.find("y_2_2_1 = 1") != std::string::npos);
    CHECK(text.find("sequence: HH") != std::string::npos);

    const IlpModel literal(HpSequence::parse("HH"), {.paper_faithful = true});
    const std::string lit_text = write_model(literal, ModelFormat::lp);
    CHECK(scan_lp(lit_text).constraints == literal.constraint_count());
    CHECK(lit_text.find("rank_1") == std::string::npos);
}

TEST_CASE("MPS text structure") {
    const IlpModel model(HpSequence::parse("HPH"));
    const std::string text = write_model(model, ModelFormat::mps);
    CHECK(text.find("NAME") != std::string::npos);
    CHECK(text.find("ROWS") != std::string::npos);
    CHECK(text.find("COLUMNS") != std::string::npos);
    CHECK(text.find("RHS") != std::string::npos);
    CHECK(text.find("BOUNDS") != std::string::npos);
    CHECK(text.find("ENDATA") != std::string::npos);

    // one row declaration per constraint plus the objective row
    std::istringstream in(text);
    std::string line;
    int rows = 0;
    bool in_rows = false;
    while (std::getline(in, line)) {
        if (line == "ROWS") { in_rows = true; continue; }
        if (line == "COLUMNS") break;
        if (in_rows && !line.empty()) ++rows;
    }
    CHECK(rows == model.constraint_count() + 1);
}
