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

#include "bayergrad/image_ops.hpp"

#include <cmath>

namespace bayergrad {

namespace {
constexpr double kPi = 3.14159265358979323846;

void require_even(int w, int h, const char* what) {
    if ((w & 1) || (h & 1))
        throw InvariantError(std::string(what) + ": dimensions must be even, got " +
                             std::to_string(w) + "x" + std::to_string(h));
}

// Bilinear sample with zero fill outside the frame.
float sample_bilinear_zero(const PlanarImage& img, double x, double y) {
    const int x0 = static_cast<int>(std::floor(x));
    const int y0 = static_cast<int>(std::floor(y));
    const double fx = x - x0, fy = y - y0;
    auto pick = [&](int yy, int xx) -> double {
        if (xx < 0 || xx >= img.width || yy < 0 || yy >= img.height) return 0.0;
        return img.at(0, yy, xx);
    };
    const double top = pick(y0, x0) * (1.0 - fx) + pick(y0, x0 + 1) * fx;
    const double bot = pick(y0 + 1, x0) * (1.0 - fx) + pick(y0 + 1, x0 + 1) * fx;
    return static_cast<float>(top * (1.0 - fy) + bot * fy);
}

PlanarImage rotate_plane(const PlanarImage& img, double theta_deg) {
    const double t = theta_deg * kPi / 180.0;
    const double c = std::cos(t), s = std::sin(t);
    const double cx = (img.width - 1) / 2.0, cy = (img.height - 1) / 2.0;
    PlanarImage out(img.width, img.height, 1);
    for (int row = 0; row < img.height; ++row) {
        for (int col = 0; col < img.width; ++col) {
            // inverse of the forward map (x,y) -> (x c + y s, -x s + y c)
            const double dx = col - cx, dy = row - cy;
            const double sx = dx * c - dy * s + cx;
            const double sy = dx * s + dy * c + cy;
            out.at(0, row, col) = sample_bilinear_zero(img, sx, sy);
        }
    }
    return out;
}
}  // namespace

PlanarImage rgb_to_gray(const PlanarImage& img) {
    if (img.channels != 3)
        throw InvariantError("rgb_to_gray: expected 3 channels, got " +
                             std::to_string(img.channels));
    PlanarImage out(img.width, img.height, 1);
    auto r = img.plane(0), g = img.plane(1), b = img.plane(2);
    for (std::size_t i = 0; i < out.samples.size(); ++i)
        out.samples[i] = b[i] + 0.299f * (r[i] - b[i]) + 0.587f * (g[i] - b[i]);
    return out;
}

BayerImage mosaic(const PlanarImage& img, CfaPattern pattern) {
    if (img.channels != 3) throw InvariantError("mosaic: expected 3 channels");
    require_even(img.width, img.height, "mosaic");
    BayerImage out(img.width, img.height, pattern);
    for (int row = 0; row < img.height; ++row)
        for (int col = 0; col < img.width; ++col)
            out.at(row, col) =
                img.at(static_cast<int>(channel_at(pattern, row, col)), row, col);
    return out;
}

SuperPixelView superpixel_view(const BayerImage& img) {
    require_even(img.width, img.height, "superpixel_view");
    SuperPixelView v;
    v.sp_width = img.width / 2;
    v.sp_height = img.height / 2;
    v.pattern = img.pattern;
    const TileLayout t = tile_layout(img.pattern);
    v.r = PlanarImage(v.sp_width, v.sp_height, 1);
    v.g1 = PlanarImage(v.sp_width, v.sp_height, 1);
    v.g2 = PlanarImage(v.sp_width, v.sp_height, 1);
    v.b = PlanarImage(v.sp_width, v.sp_height, 1);
    for (int row = 0; row < v.sp_height; ++row) {
        for (int col = 0; col < v.sp_width; ++col) {
            v.r.at(0, row, col) = img.at(2 * row + t.r_row, 2 * col + t.r_col);
            v.g1.at(0, row, col) = img.at(2 * row + t.g1_row, 2 * col + t.g1_col);
            v.g2.at(0, row, col) = img.at(2 * row + t.g2_row, 2 * col + t.g2_col);
            v.b.at(0, row, col) = img.at(2 * row + t.b_row, 2 * col + t.b_col);
        }
    }
    return v;
}

BayerImage reassemble(const SuperPixelView& view) {
    BayerImage out(view.sp_width * 2, view.sp_height * 2, view.pattern);
    const TileLayout t = tile_layout(view.pattern);
    for (int row = 0; row < view.sp_height; ++row) {
        for (int col = 0; col < view.sp_width; ++col) {
            out.at(2 * row + t.r_row, 2 * col + t.r_col) = view.r.at(0, row, col);
            out.at(2 * row + t.g1_row, 2 * col + t.g1_col) = view.g1.at(0, row, col);
            out.at(2 * row + t.g2_row, 2 * col + t.g2_col) = view.g2.at(0, row, col);
            out.at(2 * row + t.b_row, 2 * col + t.b_col) = view.b.at(0, row, col);
        }
    }
    return out;
}

PlanarImage rotate_planar(const PlanarImage& img, double theta_deg) {
    PlanarImage out(img.width, img.height, img.channels);
    for (int c = 0; c < img.channels; ++c) {
        PlanarImage rotated = rotate_plane(img.extract_channel(c), theta_deg);
        std::copy(rotated.samples.begin(), rotated.samples.end(),
                  out.plane(c).begin());
    }
    return out;
}

BayerImage rotate_bayer(const BayerImage& img, double theta_deg) {
    SuperPixelView v = superpixel_view(img);
    for (int i = 0; i < 4; ++i) v.plane(i) = rotate_plane(v.plane(i), theta_deg);
    return reassemble(v);
}

PlanarImage make_square_scene(const std::array<float, 3>& bg,
                              const std::array<float, 3>& fg, int size) {
    if (size < 2) throw InvariantError("make_square_scene: size too small");
    PlanarImage out(size, size, 3);
    const int side = size / 2;
    const int lo = (size - side) / 2, hi = lo + side;
    for (int c = 0; c < 3; ++c)
        for (int row = 0; row < size; ++row)
            for (int col = 0; col < size; ++col) {
                const bool inside = row >= lo && row < hi && col >= lo && col < hi;
                out.at(c, row, col) = inside ? fg[c] : bg[c];
            }
    return out;
}

namespace {
float gamma_sample(float v, float scale, float exponent) {
    const float x = scale * v;
    const float y = std::pow(std::max(x, 0.0f), exponent);
    return std::min(std::max(y, 0.0f), 1.0f);
}
}  // namespace

PlanarImage gamma_compress(const PlanarImage& img, float scale, float exponent) {
    PlanarImage out = img;
    for (auto& v : out.samples) v = gamma_sample(v, scale, exponent);
    return out;
}

BayerImage gamma_compress(const BayerImage& img, float scale, float exponent) {
    BayerImage out = img;
    for (auto& v : out.samples) v = gamma_sample(v, scale, exponent);
    return out;
}

PlanarImage crop(const PlanarImage& img, int x, int y, int w, int h) {
    if (x < 0 || y < 0 || w <= 0 || h <= 0 || x + w > img.width || y + h > img.height)
        throw InvariantError("crop: region out of bounds");
    PlanarImage out(w, h, img.channels);
    for (int c = 0; c < img.channels; ++c)
        for (int row = 0; row < h; ++row)
            for (int col = 0; col < w; ++col)
                out.at(c, row, col) = img.at(c, y + row, x + col);
    return out;
}

BayerImage crop_bayer(const BayerImage& img, int x, int y, int w, int h) {
    if ((x & 1) || (y & 1))
        throw InvariantError("crop_bayer: offsets must be even to keep the CFA phase");
    if (x < 0 || y < 0 || w <= 0 || h <= 0 || x + w > img.width || y + h > img.height)
        throw InvariantError("crop_bayer: region out of bounds");
    BayerImage out(w, h, img.pattern);
    for (int row = 0; row < h; ++row)
        for (int col = 0; col < w; ++col) out.at(row, col) = img.at(y + row, x + col);
    return out;
}

PlanarImage flip_horizontal(const PlanarImage& img) {
    PlanarImage out(img.width, img.height, img.channels);
    for (int c = 0; c < img.channels; ++c)
        for (int row = 0; row < img.height; ++row)
            for (int col = 0; col < img.width; ++col)
                out.at(c, row, col) = img.at(c, row, img.width - 1 - col);
    return out;
}

}  // namespace bayergrad
