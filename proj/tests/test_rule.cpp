#include <doctest.h>

#include "proglab/error.hpp"
#include "proglab/rule.hpp"

using namespace proglab;

TEST_CASE("rule 30 table is the binary expansion of 30") {
    const RuleTable rule = rule_from_code(30, 1);
    // indices 7..0
    const int expected[8] = {0, 0, 0, 1, 1, 1, 1, 0};
    for (int i = 0; i < 8; ++i) CHECK(rule.table[7 - i] == expected[i]);
}

TEST_CASE("rule 0 is all zero") {
    const RuleTable rule = rule_from_code(0, 1);
    for (auto bit : rule.table) CHECK(bit == 0);
}

TEST_CASE("rule 204 outputs the center cell of every neighborhood") {
    const RuleTable rule = rule_from_code(204, 1);
    for (std::uint32_t idx = 0; idx < 8; ++idx)
        CHECK(rule.table[idx] == ((idx >> 1) & 1));
}

TEST_CASE("code round trip, all radius-1 rules and sampled radius-2 codes") {
    for (std::uint64_t code = 0; code < 256; ++code) {
        const RuleTable rule = rule_from_code(code, 1);
        CHECK(code_of(rule.table) == code);
    }
    for (std::uint64_t code : {0ULL, 1ULL, 0xDEADBEEFULL, 0xFFFFFFFFULL}) {
        const RuleTable rule = rule_from_code(code, 2);
        CHECK(rule.table.size() == 32);
        CHECK(code_of(rule.table) == code);
    }
}

TEST_CASE("validation errors name the bound") {
    CHECK_THROWS_WITH_AS(rule_from_code(256, 1),
                         doctest::Contains("2^8"), ValidationError);
    CHECK_THROWS_AS(rule_from_code(0x100000000ULL, 2), ValidationError);
    CHECK_THROWS_AS(rule_from_code(0, 3), ValidationError);
    CHECK_THROWS_AS(rule_from_code(0, 0), ValidationError);
}

TEST_CASE("mirror and complement of rule 30") {
    const RuleTable r30 = rule_from_code(30, 1);
    CHECK(mirror(r30).code == 86);
    CHECK(complement(r30).code == 135);
    CHECK(mirror(rule_from_code(204, 1)).code == 204);
}

TEST_CASE("mirror matches independent relabeling on all 256 rules") {
    for (std::uint64_t code = 0; code < 256; ++code) {
        const RuleTable rule = rule_from_code(code, 1);
        const RuleTable m = mirror(rule);
        for (std::uint32_t l = 0; l < 2; ++l)
            for (std::uint32_t c = 0; c < 2; ++c)
                for (std::uint32_t r = 0; r < 2; ++r)
                    CHECK(m.table[4 * l + 2 * c + r] ==
                          rule.table[4 * r + 2 * c + l]);
        // both transforms are involutions
        CHECK(mirror(m).code == code);
        CHECK(complement(complement(rule)).code == code);
    }
}
