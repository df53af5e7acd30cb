// Copyright (c) 2026 The bayergrad Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bayergrad/types.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace bayergrad {

namespace {
// 2x2 tiles in row-major order: {(0,0), (0,1), (1,0), (1,1)}
constexpr std::array<std::array<Channel, 4>, 4> kTiles = {{
    {Channel::R, Channel::G, Channel::G, Channel::B},  // RGGB
    {Channel::G, Channel::R, Channel::B, Channel::G},  // GRBG
    {Channel::G, Channel::B, Channel::R, Channel::G},  // GBRG
    {Channel::B, Channel::G, Channel::G, Channel::R},  // BGGR
}};
}  // namespace

Channel channel_at(CfaPattern pattern, int row, int col) {
    const int phase = ((row & 1) << 1) | (col & 1);
    return kTiles[static_cast<int>(pattern)][phase];
}

TileLayout tile_layout(CfaPattern pattern) {
    TileLayout t{};
    const auto& tile = kTiles[static_cast<int>(pattern)];
    bool first_green = true;
    for (int phase = 0; phase < 4; ++phase) {
        const int row = phase >> 1, col = phase & 1;
        switch (tile[phase]) {
            case Channel::R: t.r_row = row; t.r_col = col; break;
            case Channel::B: t.b_row = row; t.b_col = col; break;
            case Channel::G:
                if (first_green) {
                    t.g1_row = row; t.g1_col = col;
                    first_green = false;
                } else {
                    t.g2_row = row; t.g2_col = col;
                }
                break;
        }
    }
    return t;
}

const char* to_string(CfaPattern pattern) {
    switch (pattern) {
        case CfaPattern::RGGB: return "rggb";
        case CfaPattern::GRBG: return "grbg";
        case CfaPattern::GBRG: return "gbrg";
        case CfaPattern::BGGR: return "bggr";
    }
    return "rggb";
}

CfaPattern parse_cfa_pattern(const std::string& name) {
    std::string s(name);
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char ch) { return std::tolower(ch); });
    if (s == "rggb") return CfaPattern::RGGB;
    if (s == "grbg") return CfaPattern::GRBG;
    if (s == "gbrg") return CfaPattern::GBRG;
    if (s == "bggr") return CfaPattern::BGGR;
    throw InvariantError("unknown CFA pattern: " + name);
}

PlanarImage PlanarImage::extract_channel(int c) const {
    PlanarImage out(width, height, 1);
    auto src = plane(c);
    std::copy(src.begin(), src.end(), out.samples.begin());
    return out;
}

}  // namespace bayergrad
