#include <doctest.h>

#include "bayergrad/types.hpp"

using namespace bayergrad;

TEST_CASE("channel_at is 2-periodic in both axes for every pattern") {
    for (auto p : {CfaPattern::RGGB, CfaPattern::GRBG, CfaPattern::GBRG, CfaPattern::BGGR}) {
        for (int r = 0; r < 6; ++r)
            for (int c = 0; c < 6; ++c) {
                CHECK(channel_at(p, r, c) == channel_at(p, r + 2, c));
                CHECK(channel_at(p, r, c) == channel_at(p, r, c + 2));
                CHECK(channel_at(p, r, c) == channel_at(p, r + 4, c + 6));
            }
    }
}

TEST_CASE("every 2x2 tile holds one R, one B, two G") {
    for (auto p : {CfaPattern::RGGB, CfaPattern::GRBG, CfaPattern::GBRG, CfaPattern::BGGR}) {
        int r_count = 0, g_count = 0, b_count = 0;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                switch (channel_at(p, r, c)) {
                    case Channel::R: ++r_count; break;
                    case Channel::G: ++g_count; break;
                    case Channel::B: ++b_count; break;
                }
            }
        CHECK(r_count == 1);
        CHECK(g_count == 2);
        CHECK(b_count == 1);
    }
}

TEST_CASE("tile layout names the green sharing a row with red g1") {
    for (auto p : {CfaPattern::RGGB, CfaPattern::GRBG, CfaPattern::GBRG, CfaPattern::BGGR}) {
        const TileLayout t = tile_layout(p);
        CHECK(channel_at(p, t.r_row, t.r_col) == Channel::R);
        CHECK(channel_at(p, t.b_row, t.b_col) == Channel::B);
        CHECK(channel_at(p, t.g1_row, t.g1_col) == Channel::G);
        CHECK(channel_at(p, t.g2_row, t.g2_col) == Channel::G);
        CHECK(t.r_row != t.b_row);  // red and blue never share a row
    }
}

TEST_CASE("pattern names round-trip") {
    for (auto p : {CfaPattern::RGGB, CfaPattern::GRBG, CfaPattern::GBRG, CfaPattern::BGGR})
        CHECK(parse_cfa_pattern(to_string(p)) == p);
    CHECK_THROWS_AS(parse_cfa_pattern("rgbw"), InvariantError);
}

TEST_CASE("image shape validation") {
    CHECK_THROWS_AS(PlanarImage(0, 4, 1), InvariantError);
    CHECK_THROWS_AS(PlanarImage(4, 4, 2), InvariantError);
    CHECK_NOTHROW(PlanarImage(4, 4, 3));
    CHECK_NOTHROW(BayerImage(4, 4, CfaPattern::RGGB));
}
