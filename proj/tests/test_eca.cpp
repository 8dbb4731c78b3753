#include <doctest.h>

#include <cstdlib>

#include "helpers.hpp"
#include "proglab/eca.hpp"
#include "proglab/error.hpp"

using namespace proglab;
using proglab::testing::random_tape;

namespace {

// Cells at signed offsets from the center of an odd-width row.
bool offsets_match(const BitRow& row, std::initializer_list<int> set_offsets) {
    const std::int64_t c = row.width() / 2;
    BitRow expected(row.width());
    for (int o : set_offsets)
        expected.set(static_cast<std::uint32_t>(c + o), true);
    return row == expected;
}

} // namespace

TEST_CASE("identity and zero rules") {
    Xoshiro256StarStar rng(3);
    const BitRow tape = random_tape(33, rng);
    CHECK(step(rule_from_code(204, 1), tape) == tape);
    CHECK(step(rule_from_code(0, 1), tape).popcount() == 0);
    CHECK(step(rule_from_code(255, 1), tape).popcount() == 33);
}

TEST_CASE("rule 30 first rows from a single 1") {
    const RuleTable r30 = rule_from_code(30, 1);
    const BitRow row1 = step(r30, single_one(11));
    CHECK(offsets_match(row1, {-1, 0, 1}));

    const SpaceTimeDiagram d = evolve(r30, single_one(11), 2);
    CHECK(offsets_match(d.rows[1], {-1, 0, 1}));
    CHECK(offsets_match(d.rows[2], {-2, -1, 2}));  // 1,1,0,0,1 at -2..+2
}

TEST_CASE("rule 22 second row from a single 1") {
    const SpaceTimeDiagram d = evolve(rule_from_code(22, 1), single_one(11), 2);
    CHECK(offsets_match(d.rows[1], {-1, 0, 1}));
    CHECK(offsets_match(d.rows[2], {-2, 2}));  // 1,0,0,0,1 at -2..+2
}

TEST_CASE("zero steps keeps only the initial row") {
    const BitRow tape = random_tape(16, 5);
    const SpaceTimeDiagram d = evolve(rule_from_code(110, 1), tape, 0);
    CHECK(d.rows.size() == 1);
    CHECK(d.rows[0] == tape);
}

TEST_CASE("center column examples") {
    CHECK(center_column(evolve(rule_from_code(0, 1), single_one(7), 3)) ==
          std::vector<std::uint8_t>{1, 0, 0, 0});
    CHECK(center_column(evolve(rule_from_code(204, 1), single_one(7), 3)) ==
          std::vector<std::uint8_t>{1, 1, 1, 1});
    CHECK(center_column(evolve(rule_from_code(30, 1), single_one(11), 4)) ==
          std::vector<std::uint8_t>{1, 1, 0, 1, 1});
}

TEST_CASE("center column rejects even widths") {
    const SpaceTimeDiagram d = evolve(rule_from_code(30, 1), random_tape(8, 1), 2);
    CHECK_THROWS_AS(center_column(d), ValidationError);
    CHECK(column(d, 3).size() == 3);
    CHECK_THROWS_AS(column(d, 8), ValidationError);
}

TEST_CASE("width below 2r+1 is rejected") {
    CHECK_THROWS_AS(step(rule_from_code(30, 1), BitRow(2)), ValidationError);
    CHECK_THROWS_AS(step(rule_from_code(7, 2), BitRow(4)), ValidationError);
}

TEST_CASE("packed kernel agrees with the reference, radius 1") {
    Xoshiro256StarStar rng(17);
    for (std::uint64_t code = 0; code < 256; ++code) {
        const RuleTable rule = rule_from_code(code, 1);
        for (std::uint32_t width : {3u, 9u, 64u, 100u, 200u}) {
            const BitRow tape = random_tape(width, rng);
            CHECK(step(rule, tape) == step_reference(rule, tape));
        }
    }
}

TEST_CASE("packed kernel agrees with the reference, radius 2") {
    Xoshiro256StarStar rng(19);
    for (int trial = 0; trial < 50; ++trial) {
        const RuleTable rule = rule_from_code(rng.next() & 0xFFFFFFFF, 2);
        const BitRow tape = random_tape(5 + (rng.next() % 120), rng);
        CHECK(step(rule, tape) == step_reference(rule, tape));
    }
}

TEST_CASE("determinism") {
    const RuleTable rule = rule_from_code(110, 1);
    const BitRow tape = random_tape(301, 23);
    const SpaceTimeDiagram a = evolve(rule, tape, 64);
    const SpaceTimeDiagram b = evolve(rule, tape, 64);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t t = 0; t < a.rows.size(); ++t)
        CHECK(a.rows[t] == b.rows[t]);
}

TEST_CASE("locality: one flipped cell stays inside the light cone") {
    Xoshiro256StarStar rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        const RuleTable rule = rule_from_code(rng.next() & 0xFF, 1);
        const std::uint32_t width = 101;
        const std::uint32_t steps = 12;
        const BitRow tape = random_tape(width, rng);
        const std::uint32_t site =
            static_cast<std::uint32_t>(rng.next() % width);
        BitRow flipped = tape;
        flipped.set(site, !flipped.get(site));
        const SpaceTimeDiagram a = evolve(rule, tape, steps);
        const SpaceTimeDiagram b = evolve(rule, flipped, steps);
        for (std::uint32_t t = 0; t <= steps; ++t) {
            const BitRow diff = a.rows[t] ^ b.rows[t];
            for (std::uint32_t x = 0; x < width; ++x) {
                if (!diff.get(x)) continue;
                std::int64_t off =
                    (static_cast<std::int64_t>(x) - site + width) % width;
                if (off > width / 2) off -= width;
                CHECK(std::abs(off) <= static_cast<std::int64_t>(t));
            }
        }
    }
}

TEST_CASE("symmetry commutation over all 256 rules") {
    Xoshiro256StarStar rng(31);
    for (std::uint64_t code = 0; code < 256; ++code) {
        const RuleTable rule = rule_from_code(code, 1);
        const BitRow tape = random_tape(9, rng);
        const SpaceTimeDiagram base = evolve(rule, tape, 8);

        const SpaceTimeDiagram mirrored =
            evolve(mirror(rule), tape.reversed(), 8);
        const SpaceTimeDiagram complemented =
            evolve(complement(rule), tape.complemented(), 8);
        for (std::size_t t = 0; t < base.rows.size(); ++t) {
            CHECK(mirrored.rows[t] == base.rows[t].reversed());
            CHECK(complemented.rows[t] == base.rows[t].complemented());
        }
    }
}
