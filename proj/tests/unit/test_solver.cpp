#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gridmatch/instance.hpp"
#include "gridmatch/solver.hpp"
#include "test_support.hpp"

using namespace gridmatch;
using testsupport::mat;
using testsupport::path;
using testsupport::seq;

namespace {

const std::string kPaperMatrixText =
    "101101\n011120\n000111\n103000\n111031\n251011\n240000\n";
const std::string kPaperSequence = "1011010111110010010111000011101000";

std::vector<SolverConfig> pruning_combinations() {
    std::vector<SolverConfig> out;
    for (bool counts : {false, true})
        for (bool conn : {false, true}) {
            SolverConfig cfg;
            cfg.pruning_counts = counts;
            cfg.pruning_connectivity = conn;
            out.push_back(cfg);
        }
    return out;
}

}  // namespace

TEST_CASE("solve finds a witness for the worked 7x6 example") {
    const DigitMatrix m = parse_matrix(kPaperMatrixText);
    const BitSequence s = seq(kPaperSequence);
    const SolveOutcome out = solve(m, s);
    REQUIRE(out.status == SolveStatus::solved);
    REQUIRE(out.path.has_value());
    CHECK(out.path->size() == 34);
    CHECK(verify_path(m, s, *out.path));
}

TEST_CASE("solve trivial cases") {
    CHECK(solve(mat("0"), seq("1")).status == SolveStatus::unsolvable);
    CHECK(solve(mat("0"), seq("0")).status == SolveStatus::solved);

    const SolveOutcome empty = solve(mat("1"), seq(""));
    REQUIRE(empty.status == SolveStatus::solved);
    CHECK(empty.path->empty());
}

TEST_CASE("brute force spec cases") {
    const SolveOutcome diag = brute_force_solve(mat("10/01"), seq("11"));
    REQUIRE(diag.status == SolveStatus::solved);
    CHECK(verify_path(mat("10/01"), seq("11"), *diag.path));

    CHECK(brute_force_solve(mat("22"), seq("1")).status == SolveStatus::unsolvable);
    CHECK(brute_force_solve(mat("22"), seq("0")).status == SolveStatus::unsolvable);
}

TEST_CASE("solve agrees with the oracle on the exhaustive 2x2 family") {
    const auto matrices = testsupport::all_matrices(2, 2, "012");
    const auto sequences = testsupport::all_sequences(1, 4);
    REQUIRE(matrices.size() == 81);
    REQUIRE(sequences.size() == 30);
    const auto combos = pruning_combinations();

    int checked = 0;
    for (const DigitMatrix& m : matrices)
        for (const BitSequence& s : sequences) {
            const bool expected = brute_force_solve(m, s).solvable();
            for (const SolverConfig& cfg : combos) {
                const SolveOutcome out = solve(m, s, cfg);
                REQUIRE(out.status != SolveStatus::unknown);
                if (out.solvable() != expected) {
                    CAPTURE(m.to_text(), s.str(), cfg.pruning_counts, cfg.pruning_connectivity);
                    REQUIRE(out.solvable() == expected);
                }
                if (out.path) CHECK(verify_path(m, s, *out.path));
            }
            ++checked;
        }
    CHECK(checked == 2430);
}

TEST_CASE("solve agrees with the oracle on sampled 3x3 and 4x4 instances") {
    std::mt19937_64 rng(8001);
    for (int trial = 0; trial < 150; ++trial) {
        const int side = trial % 2 == 0 ? 3 : 4;
        const DigitMatrix m = testsupport::random_matrix(rng, side, side, 0.2);
        const BitSequence s = testsupport::random_sequence(rng, 9);
        if (!validate_instance(m, s).ok) continue;
        const SolveOutcome expected = brute_force_solve(m, s);
        const SolveOutcome got = solve(m, s);
        CHECK(got.status == expected.status);
        if (got.path) CHECK(verify_path(m, s, *got.path));
        // count strengthens the yes/no answer
        const std::uint64_t count = count_matching_paths(m, s);
        CHECK((count >= 1) == expected.solvable());
    }
}

TEST_CASE("count_matching_paths spec cases") {
    CHECK(count_matching_paths(mat("01"), seq("01")) == 1);
    // all four cells of a 2x2 board are mutually king-adjacent: 4*3 ordered pairs
    CHECK(count_matching_paths(mat("00/00"), seq("00")) == 12);
    CHECK(count_matching_paths(mat("0"), seq("1")) == 0);
    CHECK(count_matching_paths(mat("2"), seq("")) == 1);
}

TEST_CASE("pruning never changes the answer, only the node count") {
    std::mt19937_64 rng(8002);
    for (int trial = 0; trial < 60; ++trial) {
        const int side = trial % 2 == 0 ? 3 : 4;
        const DigitMatrix m = testsupport::random_matrix(rng, side, side, 0.15);
        const BitSequence s = testsupport::random_sequence(rng, 8);
        if (!validate_instance(m, s).ok) continue;

        SolverConfig none;
        none.pruning_counts = false;
        none.pruning_connectivity = false;
        SolverConfig counts;
        counts.pruning_counts = true;
        counts.pruning_connectivity = false;
        SolverConfig full;
        full.pruning_counts = true;
        full.pruning_connectivity = true;

        const SolveOutcome o_none = solve(m, s, none);
        const SolveOutcome o_counts = solve(m, s, counts);
        const SolveOutcome o_full = solve(m, s, full);
        CHECK(o_none.status == o_counts.status);
        CHECK(o_none.status == o_full.status);
        CHECK(o_counts.nodes_expanded <= o_none.nodes_expanded);
        CHECK(o_full.nodes_expanded <= o_counts.nodes_expanded);
    }
}

TEST_CASE("deterministic runs return the identical witness") {
    const DigitMatrix m = parse_matrix(kPaperMatrixText);
    const BitSequence s = seq(kPaperSequence);
    const SolveOutcome first = solve(m, s);
    const SolveOutcome second = solve(m, s);
    REQUIRE(first.path.has_value());
    CHECK(first.path == second.path);

    SolverConfig parallel;
    parallel.parallel = true;
    const SolveOutcome par = solve(m, s, parallel);
    CHECK(par.path == first.path);
}

TEST_CASE("reversal symmetry of solvability") {
    std::mt19937_64 rng(8003);
    for (int trial = 0; trial < 60; ++trial) {
        const DigitMatrix m = testsupport::random_matrix(rng, 3, 3, 0.2);
        const BitSequence s = testsupport::random_sequence(rng, 7);
        if (!validate_instance(m, s).ok) continue;
        CHECK(brute_force_solve(m, s).solvable() ==
              brute_force_solve(m, s.reversed()).solvable());
    }
}

TEST_CASE("node budget yields unknown, never a wrong answer") {
    // 4x4 of zeros with a sequence ending in '1': unsolvable, and with all
    // pruning off the search is large enough to exhaust a tiny budget.
    const DigitMatrix m = mat("0000/0000/0000/0000");
    const BitSequence s = seq("000000000000001");
    REQUIRE(validate_instance(m, s).ok);

    SolverConfig tiny;
    tiny.pruning_counts = false;
    tiny.node_budget = 10;
    const SolveOutcome capped = solve(m, s, tiny);
    CHECK(capped.status == SolveStatus::unknown);
    CHECK_FALSE(capped.path.has_value());

    SolverConfig ample;
    ample.node_budget = 50'000'000;
    const SolveOutcome decided = solve(m, s, ample);
    CHECK(decided.status == SolveStatus::unsolvable);

    // a budget large enough to find the witness reports solved
    SolverConfig enough;
    enough.node_budget = 50'000'000;
    const SolveOutcome found = solve(m, seq("0000"), enough);
    CHECK(found.status == SolveStatus::solved);
}

TEST_CASE("run permutation solves the two-run example") {
    const DigitMatrix m = mat("01/01");
    const RunPermutationOutcome out = solve_run_permutation(m, seq("0011"));
    REQUIRE(out.status == SolveStatus::solved);
    REQUIRE(out.permuted_sequence.has_value());
    REQUIRE(out.path.has_value());
    CHECK(verify_path(m, *out.permuted_sequence, *out.path));
    // identity order already works, and it is tried first
    CHECK(out.run_order == std::vector<std::size_t>{0, 1});
    CHECK(out.permuted_sequence->str() == "0011");
}

TEST_CASE("run permutation equals solve for single-run sequences") {
    std::mt19937_64 rng(8004);
    for (int trial = 0; trial < 20; ++trial) {
        const DigitMatrix m = testsupport::random_matrix(rng, 3, 3, 0.2);
        const std::size_t len = 1 + rng() % 4;
        const std::string bits(len, rng() % 2 ? '1' : '0');
        const BitSequence s = seq(bits);
        if (!validate_instance(m, s).ok) continue;
        CHECK(solve_run_permutation(m, s).status == solve(m, s).status);
    }
}

TEST_CASE("run permutation reorders when needed") {
    const DigitMatrix m = mat("01");
    const RunPermutationOutcome out = solve_run_permutation(m, seq("10"));
    REQUIRE(out.status == SolveStatus::solved);
    CHECK(verify_path(m, *out.permuted_sequence, *out.path));
}

TEST_CASE("run permutation witness reorders runs, not symbols") {
    // "0011" has runs 00,11; matrix forces the 1s first
    const DigitMatrix m = mat("1100");
    const BitSequence s = seq("0011");
    const RunPermutationOutcome out = solve_run_permutation(m, s);
    REQUIRE(out.status == SolveStatus::solved);
    CHECK(out.permuted_sequence->str() == "1100");
    CHECK(out.run_order == std::vector<std::size_t>{1, 0});

    // concatenating the runs in the reported order reproduces the sequence
    const std::vector<std::string> runs = sequence_runs(s);
    std::string rebuilt;
    for (std::size_t i : out.run_order) rebuilt += runs[i];
    CHECK(rebuilt == out.permuted_sequence->str());
}

TEST_CASE("run permutation guard") {
    const DigitMatrix m = mat("01010/10101");
    const BitSequence nine_runs = seq("101010101");
    CHECK(sequence_runs(nine_runs).size() == 9);
    CHECK_THROWS_AS(solve_run_permutation(m, nine_runs), TooManyRuns);
    CHECK_NOTHROW(solve_run_permutation(m, nine_runs, SolverConfig{}, 9));

    // empty sequence: zero runs, one (empty) permutation
    const RunPermutationOutcome empty = solve_run_permutation(m, seq(""));
    CHECK(empty.status == SolveStatus::solved);
    CHECK(empty.run_order.empty());
}

TEST_CASE("every returned witness verifies under every configuration") {
    std::mt19937_64 rng(8005);
    for (int trial = 0; trial < 40; ++trial) {
        const DigitMatrix m = testsupport::random_matrix(rng, 3, 4, 0.2);
        const BitSequence s = testsupport::random_sequence(rng, 8);
        if (!validate_instance(m, s).ok) continue;
        for (const SolverConfig& cfg : pruning_combinations()) {
            const SolveOutcome out = solve(m, s, cfg);
            if (out.path) CHECK(verify_path(m, s, *out.path));
        }
    }
}
