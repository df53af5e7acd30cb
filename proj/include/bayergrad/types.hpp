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

#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bayergrad {

/// Raised when an argument violates a documented precondition or when an
/// internal invariant fails. Mapped to exit code 3 by the CLI.
struct InvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised on file-format or filesystem failures. Mapped to exit code 2.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Channel : std::uint8_t { R = 0, G = 1, B = 2 };

/// The four 2x2-periodic Bayer arrangements, named by their top-left tile
/// read in row-major order.
enum class CfaPattern : std::uint8_t { RGGB = 0, GRBG = 1, GBRG = 2, BGGR = 3 };

/// Channel sampled at (row, col). Fully determined by the parities of the
/// coordinates and the pattern.
Channel channel_at(CfaPattern pattern, int row, int col);

/// Offsets of the four plane origins inside a 2x2 tile. g1 is the green
/// sample sharing a row with red, g2 the one sharing a row with blue.
struct TileLayout {
    int r_row, r_col;
    int g1_row, g1_col;
    int g2_row, g2_col;
    int b_row, b_col;
};
TileLayout tile_layout(CfaPattern pattern);

const char* to_string(CfaPattern pattern);
CfaPattern parse_cfa_pattern(const std::string& name);

/// One- or three-channel float raster, channel-planar, row-major within a
/// plane. Intensities are normalized to [0,1]; difference images may hold
/// values in [-1,1] and gradient rasters are signed.
struct PlanarImage {
    int width = 0;
    int height = 0;
    int channels = 1;
    std::vector<float> samples;

    PlanarImage() = default;
    PlanarImage(int w, int h, int c, float fill = 0.0f)
        : width(w), height(h), channels(c),
          samples(static_cast<std::size_t>(w) * h * c, fill) {
        if (w <= 0 || h <= 0 || (c != 1 && c != 3))
            throw InvariantError("PlanarImage: bad shape " + std::to_string(w) + "x" +
                                 std::to_string(h) + "x" + std::to_string(c));
    }

    std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }

    float at(int c, int row, int col) const {
        return samples[static_cast<std::size_t>(c) * pixel_count() +
                       static_cast<std::size_t>(row) * width + col];
    }
    float& at(int c, int row, int col) {
        return samples[static_cast<std::size_t>(c) * pixel_count() +
                       static_cast<std::size_t>(row) * width + col];
    }

    std::span<const float> plane(int c) const {
        return {samples.data() + static_cast<std::size_t>(c) * pixel_count(), pixel_count()};
    }
    std::span<float> plane(int c) {
        return {samples.data() + static_cast<std::size_t>(c) * pixel_count(), pixel_count()};
    }

    /// Copy of channel c as a standalone single-channel image.
    PlanarImage extract_channel(int c) const;

    bool same_shape(const PlanarImage& o) const {
        return width == o.width && height == o.height && channels == o.channels;
    }
};

/// Single-channel CFA mosaic: exactly one intensity per pixel location,
/// tagged with the pattern that tells which channel each sample belongs to.
struct BayerImage {
    int width = 0;
    int height = 0;
    CfaPattern pattern = CfaPattern::RGGB;
    std::vector<float> samples;

    BayerImage() = default;
    BayerImage(int w, int h, CfaPattern p, float fill = 0.0f)
        : width(w), height(h), pattern(p),
          samples(static_cast<std::size_t>(w) * h, fill) {
        if (w <= 0 || h <= 0)
            throw InvariantError("BayerImage: bad shape");
    }

    float at(int row, int col) const {
        return samples[static_cast<std::size_t>(row) * width + col];
    }
    float& at(int row, int col) {
        return samples[static_cast<std::size_t>(row) * width + col];
    }
    Channel channel(int row, int col) const { return channel_at(pattern, row, col); }

    /// The mosaic reinterpreted as a plain single-channel raster. The
    /// gradient operators rely on this: no demosaicing, same code path
    /// as a gray image.
    PlanarImage as_planar() const {
        PlanarImage out(width, height, 1);
        out.samples = samples;
        return out;
    }
};

/// The four co-registered quarter-resolution planes of a mosaic. A
/// super-pixel is one complete 2x2 Bayer tile; operating per plane keeps
/// the mosaic structure intact. Planes are materialized copies;
/// reassemble() reproduces the source samples bit-exactly.
struct SuperPixelView {
    int sp_width = 0;
    int sp_height = 0;
    CfaPattern pattern = CfaPattern::RGGB;
    PlanarImage r, g1, g2, b;

    PlanarImage& plane(int i) {
        switch (i) {
            case 0: return r;
            case 1: return g1;
            case 2: return g2;
            default: return b;
        }
    }
    const PlanarImage& plane(int i) const {
        return const_cast<SuperPixelView*>(this)->plane(i);
    }
};

}  // namespace bayergrad
