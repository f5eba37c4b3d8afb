#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "gridmatch/instance.hpp"
#include "gridmatch/solver.hpp"
#include "test_support.hpp"

using namespace gridmatch;
using testsupport::mat;
using testsupport::path;
using testsupport::seq;

namespace {

const std::string kPaperMatrixText =
    "101101\n"
    "011120\n"
    "000111\n"
    "103000\n"
    "111031\n"
    "251011\n"
    "240000\n";

}  // namespace

TEST_CASE("parse_matrix reads a small block") {
    const DigitMatrix m = parse_matrix("10\n01");
    REQUIRE(m.rows() == 2);
    REQUIRE(m.cols() == 2);
    CHECK(m.at(0, 0).kind == CellKind::one);
    CHECK(m.at(0, 1).kind == CellKind::zero);
    CHECK(m.at(1, 0).kind == CellKind::zero);
    CHECK(m.at(1, 1).kind == CellKind::one);
    CHECK(m.count_zero() == 2);
    CHECK(m.count_one() == 2);
}

TEST_CASE("parse_matrix reads the worked 7x6 example") {
    const DigitMatrix m = parse_matrix(kPaperMatrixText);
    REQUIRE(m.rows() == 7);
    REQUIRE(m.cols() == 6);
    CHECK(m.count_zero() == 17);
    CHECK(m.count_one() == 18);

    std::set<std::pair<int, int>> blocked;
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (!m.at(r, c).visitable()) blocked.insert({r, c});
    const std::set<std::pair<int, int>> expected = {{1, 4}, {3, 2}, {4, 4}, {5, 0},
                                                    {5, 1}, {6, 0}, {6, 1}};
    CHECK(blocked == expected);
}

TEST_CASE("parse_matrix rejects malformed input") {
    CHECK_THROWS_AS(parse_matrix("1a"), InvalidCharacter);
    CHECK_THROWS_AS(parse_matrix(""), EmptyInput);
    CHECK_THROWS_AS(parse_matrix("\n"), EmptyInput);
    CHECK_THROWS_AS(parse_matrix("10\n0"), RaggedRows);
    CHECK_THROWS_AS(parse_matrix("10\n011"), RaggedRows);
}

TEST_CASE("matrix counts stay consistent with cells") {
    std::mt19937_64 rng(7001);
    for (int trial = 0; trial < 50; ++trial) {
        const DigitMatrix m = testsupport::random_matrix(rng, 1 + int(rng() % 5),
                                                         1 + int(rng() % 5), 0.3);
        int zero = 0, one = 0, blocked = 0;
        for (const Cell& c : m.cells()) {
            if (c.kind == CellKind::zero) ++zero;
            if (c.kind == CellKind::one) ++one;
            if (c.kind == CellKind::blocked) ++blocked;
        }
        CHECK(zero == m.count_zero());
        CHECK(one == m.count_one());
        CHECK(zero + one + blocked == m.rows() * m.cols());
    }
}

TEST_CASE("parse_sequence basics") {
    const BitSequence s = parse_sequence("0101");
    REQUIRE(s.size() == 4);
    CHECK(s.bit(0) == 0);
    CHECK(s.bit(1) == 1);
    CHECK(parse_sequence("").empty());
    CHECK_THROWS_AS(parse_sequence("012"), InvalidCharacter);
}

TEST_CASE("neighbors uses the fixed N,NE,E,SE,S,SW,W,NW order") {
    const DigitMatrix m3 = mat("000/000/000");
    const std::vector<Coord> center = neighbors(m3, {1, 1});
    const std::vector<Coord> expected = {{0, 1}, {0, 2}, {1, 2}, {2, 2},
                                         {2, 1}, {2, 0}, {1, 0}, {0, 0}};
    CHECK(center == expected);

    const std::vector<Coord> corner = neighbors(m3, {0, 0});
    const std::vector<Coord> corner_expected = {{0, 1}, {1, 1}, {1, 0}};
    CHECK(corner == corner_expected);

    CHECK(neighbors(mat("0"), {0, 0}).empty());
    CHECK_THROWS_AS(neighbors(m3, {3, 0}), OutOfBounds);
}

TEST_CASE("neighbors includes blocked cells") {
    const DigitMatrix m = mat("02/22");
    CHECK(neighbors(m, {0, 0}).size() == 3);
}

TEST_CASE("verify_path spec cases") {
    CHECK(verify_path(mat("0"), seq("0"), path({{0, 0}})));
    CHECK(verify_path(mat("01"), seq("01"), path({{0, 0}, {0, 1}})));
    CHECK_FALSE(verify_path(mat("01"), seq("01"), path({{0, 0}, {0, 0}})));
    // a diagonal step is legal in the general problem
    CHECK(verify_path(mat("10/01"), seq("11"), path({{0, 0}, {1, 1}})));
    // empty path matches empty sequence
    CHECK(verify_path(mat("2"), seq(""), CellPath{}));
}

TEST_CASE("verify_path rejects each malformation independently") {
    std::mt19937_64 rng(7002);
    int exercised = 0;
    for (int trial = 0; trial < 200 && exercised < 60; ++trial) {
        const DigitMatrix m = testsupport::random_matrix(rng, 2 + int(rng() % 3),
                                                         2 + int(rng() % 3), 0.2);
        const BitSequence s = testsupport::random_sequence(rng, 6);
        if (s.size() < 2 || !validate_instance(m, s).ok) continue;
        const SolveOutcome witness = brute_force_solve(m, s);
        if (!witness.solvable()) continue;
        ++exercised;
        CellPath good = *witness.path;
        REQUIRE(verify_path(m, s, good));

        // wrong length
        CellPath truncated = good;
        truncated.steps.pop_back();
        CHECK_FALSE(verify_path(m, s, truncated));

        // revisit
        CellPath revisit = good;
        revisit.steps.back() = revisit.steps.front();
        CHECK_FALSE(verify_path(m, s, revisit));

        // out of bounds
        CellPath escaped = good;
        escaped.steps.back() = {m.rows(), m.cols()};
        CHECK_FALSE(verify_path(m, s, escaped));

        // non-adjacent jump: duplicate-free teleport far outside king range
        if (m.rows() >= 3 || m.cols() >= 3) {
            CellPath teleport = good;
            for (int r = 0; r < m.rows(); ++r)
                for (int c = 0; c < m.cols(); ++c) {
                    const Coord cand{r, c};
                    const Coord prev = teleport.steps[teleport.steps.size() - 2];
                    const bool used =
                        std::find(good.steps.begin(), good.steps.end(), cand) != good.steps.end();
                    if (!used && std::max(std::abs(cand.row - prev.row),
                                          std::abs(cand.col - prev.col)) > 1) {
                        teleport.steps.back() = cand;
                        CHECK_FALSE(verify_path(m, s, teleport));
                        r = m.rows();
                        break;
                    }
                }
        }
    }
    REQUIRE(exercised >= 20);
}

TEST_CASE("verify_path refuses blocked cells") {
    const DigitMatrix m = mat("012");
    // (0,2) holds '2': not visitable whatever the sequence asks for
    CellPath p = path({{0, 1}, {0, 2}});
    CHECK_FALSE(verify_path(m, seq("11"), p));
    CHECK_FALSE(verify_path(m, seq("10"), p));
}

TEST_CASE("validate_instance length bound") {
    const DigitMatrix paper = parse_matrix(kPaperMatrixText);
    const BitSequence s34 = seq("1011010111110010010111000011101000");
    REQUIRE(s34.size() == 34);
    const ValidationReport ok = validate_instance(paper, s34);
    CHECK(ok.ok);
    CHECK(ok.count_zero == 17);
    CHECK(ok.count_one == 18);

    const ValidationReport bad = validate_instance(mat("0"), seq("00"));
    CHECK_FALSE(bad.ok);
    CHECK(bad.sequence_length == 2);

    CHECK(validate_instance(mat("2"), seq("")).ok);
}

TEST_CASE("pad_to_square examples") {
    const DigitMatrix paper = parse_matrix(kPaperMatrixText);
    const DigitMatrix padded = pad_to_square(paper);
    REQUIRE(padded.rows() == 7);
    REQUIRE(padded.cols() == 7);
    CHECK(padded.count_zero() == paper.count_zero());
    CHECK(padded.count_one() == paper.count_one());
    for (int r = 0; r < 7; ++r) CHECK(padded.at(r, 6).digit == '2');
    for (int r = 0; r < 7; ++r)
        for (int c = 0; c < 6; ++c) CHECK(padded.at(r, c) == paper.at(r, c));

    const DigitMatrix square = mat("10/01");
    CHECK(pad_to_square(square) == square);

    CHECK(pad_to_square(mat("010")).to_text() == "010\n222\n222\n");
}

TEST_CASE("pad_to_square preserves verification and solvability") {
    std::mt19937_64 rng(7003);
    int solvable_seen = 0;
    for (int trial = 0; trial < 60; ++trial) {
        int rows = 1 + int(rng() % 4);
        int cols = 1 + int(rng() % 4);
        if (rows == cols) cols = cols % 4 + 1;
        if (rows == cols) continue;
        const DigitMatrix m = testsupport::random_matrix(rng, rows, cols, 0.25);
        const BitSequence s = testsupport::random_sequence(rng, 7);
        if (!validate_instance(m, s).ok) continue;
        const DigitMatrix padded = pad_to_square(m);
        const SolveOutcome plain = brute_force_solve(m, s);
        const SolveOutcome square = brute_force_solve(padded, s);
        CHECK(plain.status == square.status);
        if (plain.solvable()) {
            ++solvable_seen;
            CHECK(verify_path(padded, s, *plain.path));  // footprint paths survive padding
        }
    }
    REQUIRE(solvable_seen >= 10);
}

TEST_CASE("matrix text round trip") {
    CHECK(parse_matrix(kPaperMatrixText).to_text() == kPaperMatrixText);
    std::mt19937_64 rng(7004);
    for (int trial = 0; trial < 30; ++trial) {
        const DigitMatrix m = testsupport::random_matrix(rng, 1 + int(rng() % 6),
                                                         1 + int(rng() % 6), 0.3);
        CHECK(parse_matrix(m.to_text()) == m);
    }
}

TEST_CASE("path format round trip") {
    const CellPath p = path({{0, 0}, {1, 1}, {1, 2}});
    CHECK(format_path(p) == "0,0;1,1;1,2");
    CHECK(parse_path("0,0;1,1;1,2") == p);
    CHECK(parse_path("0,0;1,1;1,2;") == p);
    CHECK(parse_path("").steps.empty());
    CHECK(parse_path("\n").steps.empty());
    CHECK_THROWS_AS(parse_path("0,0;x"), InvalidCharacter);
    CHECK_THROWS_AS(parse_path("0;1"), InvalidCharacter);

    std::mt19937_64 rng(7005);
    for (int trial = 0; trial < 20; ++trial) {
        CellPath random;
        const std::size_t len = rng() % 8;
        for (std::size_t i = 0; i < len; ++i)
            random.steps.push_back({int(rng() % 10), int(rng() % 10)});
        CHECK(parse_path(format_path(random)) == random);
    }
}
