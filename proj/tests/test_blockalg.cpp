#include <doctest.h>

#include <cstdint>
#include <stdexcept>

#include "expgraph/bigint.hpp"
#include "expgraph/blockalg.hpp"

using namespace expgraph;

namespace {

IntMatrix scalar(int64_t v) {
    IntMatrix m(1);
    m.at(0, 0) = v;
    return m;
}

}  // namespace

TEST_SUITE("blockalg") {

TEST_CASE("assemble_block_constant") {
    const BlockFamily single{1, 1, {scalar(2)}};
    const IntMatrix m1 = assemble_block_constant(single);
    CHECK(m1.side() == 1);
    CHECK(m1.at(0, 0) == 2);

    const BlockFamily pair{2, 1, {scalar(2), scalar(3)}};
    const IntMatrix m2 = assemble_block_constant(pair);
    REQUIRE(m2.side() == 2);
    CHECK(m2.at(0, 0) == 2);
    CHECK(m2.at(0, 1) == 3);
    CHECK(m2.at(1, 0) == 2);
    CHECK(m2.at(1, 1) == 3);

    const BlockFamily identities{2, 2, {IntMatrix::identity(2), IntMatrix::identity(2)}};
    const IntMatrix m4 = assemble_block_constant(identities);
    REQUIRE(m4.side() == 4);
    for (uint64_t block_row = 0; block_row < 2; ++block_row) {
        for (uint64_t block_col = 0; block_col < 2; ++block_col) {
            for (uint64_t i = 0; i < 2; ++i) {
                for (uint64_t j = 0; j < 2; ++j) {
                    CHECK(m4.at(block_row * 2 + i, block_col * 2 + j) == (i == j ? 1 : 0));
                }
            }
        }
    }
}

TEST_CASE("block_trace") {
    const BlockFamily pair{2, 1, {scalar(2), scalar(3)}};
    const IntMatrix m = assemble_block_constant(pair);
    CHECK(block_trace(m, 1).at(0, 0) == 5);

    const IntMatrix twice_identity = block_trace(IntMatrix::identity(4), 2);
    CHECK(twice_identity.at(0, 0) == 2);
    CHECK(twice_identity.at(1, 1) == 2);
    CHECK(twice_identity.at(0, 1) == 0);

    // M^2 = [[10,15],[10,15]]: diagonal sum 10 + 15 = 25
    CHECK(block_trace(m.pow(2), 1).at(0, 0) == 25);

    CHECK_THROWS_AS(block_trace(IntMatrix::identity(4), 3), std::invalid_argument);
}

TEST_CASE("verify_lemma1") {
    const BlockFamily pair{2, 1, {scalar(2), scalar(3)}};
    CHECK(verify_lemma1(pair, 2));  // trace 25 = (2+3)^2

    SUBCASE("k = 1 is the diagonal-block sum") {
        for (uint64_t seed : {0ull, 1ull, 2ull}) {
            CHECK(verify_lemma1(random_block_family(seed, 3, 2, 4), 1));
        }
    }

    SUBCASE("seeded random families, both sides computed independently") {
        CHECK(verify_lemma1(random_block_family(7, 3, 2, 5), 4));
        for (uint64_t seed = 0; seed < 20; ++seed) {
            for (uint64_t r : {1ull, 2ull, 5ull}) {
                for (uint64_t d : {1ull, 3ull}) {
                    for (uint64_t k = 1; k <= 4; ++k) {
                        CAPTURE(seed);
                        CAPTURE(r);
                        CAPTURE(d);
                        CAPTURE(k);
                        CHECK(verify_lemma1(random_block_family(seed, r, d, 5), k));
                    }
                }
            }
        }
    }
}

TEST_CASE("random_block_family determinism and shape") {
    const BlockFamily zero = random_block_family(0, 1, 1, 0);
    CHECK(zero.blocks[0].at(0, 0) == 0);

    const BlockFamily a = random_block_family(42, 2, 2, 3);
    const BlockFamily b = random_block_family(42, 2, 2, 3);
    REQUIRE(a.blocks.size() == b.blocks.size());
    for (uint64_t i = 0; i < a.blocks.size(); ++i) CHECK(a.blocks[i] == b.blocks[i]);

    for (const auto& block : a.blocks) {
        for (uint64_t i = 0; i < block.side(); ++i) {
            for (uint64_t j = 0; j < block.side(); ++j) {
                CHECK(block.at(i, j) >= -3);
                CHECK(block.at(i, j) <= 3);
            }
        }
    }

    CHECK_THROWS_AS(random_block_family(0, 0, 1, 1), std::invalid_argument);
}

TEST_CASE("noncommuting pairs show up in the seeded stream") {
    uint64_t found = 0;
    for (uint64_t seed = 0; seed < 50; ++seed) {
        if (has_noncommuting_pair(random_block_family(seed, 2, 2, 5))) ++found;
    }
    CHECK(found >= 1);

    // and the identity still holds on a specifically noncommuting pair
    for (uint64_t seed = 0; seed < 50; ++seed) {
        const BlockFamily family = random_block_family(seed, 2, 2, 5);
        if (!has_noncommuting_pair(family)) continue;
        for (uint64_t k = 1; k <= 6; ++k) CHECK(verify_lemma1(family, k));
        break;
    }
}

TEST_CASE("pow by squaring agrees with naive iterated multiplication") {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        const BlockFamily family = random_block_family(seed, 2, 3, 5);
        const IntMatrix m = assemble_block_constant(family);
        for (uint64_t k = 1; k <= 6; ++k) {
            CHECK(m.pow(k) == m.pow_naive(k));
        }
    }
    CHECK(IntMatrix::identity(3).pow(0) == IntMatrix::identity(3));
}

}  // TEST_SUITE
