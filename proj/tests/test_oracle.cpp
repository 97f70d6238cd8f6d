#include <doctest.h>

#include "hpfold/oracle.hpp"
#include "hpfold/rng.hpp"

using namespace hpfold;

TEST_CASE("single residue enumerates to the empty walk") {
    const auto res = oracle::enumerate_optimal(HpSequence::parse("H"), false);
    CHECK(res.optimal_energy == 0);
    CHECK(res.total_valid == 1);
    CHECK(res.optimal_count == 1);
}

TEST_CASE("three residues: 30 walks, sharp bends give the only contact") {
    // Hand count: 6 first moves x 5 non-reversing second moves = 30 walks;
    // the 2 sharp turns per first move put ranks 1,3 adjacent -> 12 optima.
    for (bool reduce : {false, true}) {
        const auto all_h = oracle::enumerate_optimal(HpSequence::parse("HHH"), reduce);
        CHECK(all_h.total_valid == 30);
        CHECK(all_h.optimal_energy == -1);
        CHECK(all_h.optimal_count == 12);

        const auto hph = oracle::enumerate_optimal(HpSequence::parse("HPH"), reduce);
        CHECK(hph.optimal_energy == -1);
        CHECK(hph.total_valid == 30);
    }
}

TEST_CASE("four H residues: optimum -2 (no K4 on the lattice)") {
    const auto res = oracle::enumerate_optimal(HpSequence::parse("HHHH"), true);
    CHECK(res.optimal_energy == -2);
}

TEST_CASE("verify_best") {
    CHECK(oracle::verify_best(HpSequence::parse("HPH"), -1));
    CHECK_FALSE(oracle::verify_best(HpSequence::parse("HPH"), -2));
    CHECK_FALSE(oracle::verify_best(HpSequence::parse("HPH"), 0));
}

TEST_CASE("cap violations throw") {
    CHECK_THROWS_AS(oracle::enumerate_optimal(HpSequence::parse("H^17"), true),
                    oracle::CapExceededError);
    CHECK_NOTHROW(oracle::enumerate_optimal(HpSequence::parse("H^17"), true, 17));
}

TEST_CASE("reduced and full enumeration agree exactly") {
    for (const char* text : {"HHHH", "HPHP", "HPPHH", "PHPHPH", "H^7", "HPHPPHP"}) {
        const HpSequence seq = HpSequence::parse(text);
        const auto full = oracle::enumerate_optimal(seq, false);
        const auto reduced = oracle::enumerate_optimal(seq, true);
        CHECK(full.optimal_energy == reduced.optimal_energy);
        CHECK(full.total_valid == reduced.total_valid);
        CHECK(full.optimal_count == reduced.optimal_count);
    }
}

TEST_CASE("enumerated energies match the model energy function") {
    const HpSequence seq = HpSequence::parse("HPHHPHPH");
    const int n = static_cast<int>(seq.size());
    Rng rng(7);
    int checked = 0;
    oracle::for_each_conformation(seq, false, [&](const std::vector<Dir>& mv, Energy e) {
        if (rng.below(40) == 0 && checked < 1000) {
            const DecodeResult dec = decode(mv, n);
            REQUIRE(dec.valid);
            CHECK(contact_energy(seq, dec.conf) == e);
            ++checked;
        }
        return true;
    });
    CHECK(checked == 1000);
}

TEST_CASE("sample_optimal_moves returns an optimal conformation") {
    const HpSequence seq = HpSequence::parse("HHPHH");
    const auto res = oracle::enumerate_optimal(seq, true);
    const std::vector<Dir> mv = oracle::sample_optimal_moves(seq);
    const DecodeResult dec = decode(mv, static_cast<int>(seq.size()));
    REQUIRE(dec.valid);
    CHECK(contact_energy(seq, dec.conf) == res.optimal_energy);
}
