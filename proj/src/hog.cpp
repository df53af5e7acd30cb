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

#include "bayergrad/hog.hpp"

#include <cmath>

namespace bayergrad {

namespace {
void check_window(const GradientField& f, const HogConfig& cfg) {
    if (cfg.cell < 1 || cfg.block < 1 || cfg.bins < 1 || cfg.block_stride < 1)
        throw InvariantError("hog: bad config");
    if (f.width() % cfg.cell || f.height() % cfg.cell)
        throw InvariantError("hog: window dimensions must be divisible by the cell size");
    if (f.width() / cfg.cell < cfg.block || f.height() / cfg.cell < cfg.block)
        throw InvariantError("hog: block larger than window");
}
}  // namespace

std::vector<std::vector<double>> hog_cell_histograms(const GradientField& field,
                                                     const HogConfig& cfg) {
    check_window(field, cfg);
    const int cells_x = field.width() / cfg.cell;
    const int cells_y = field.height() / cfg.cell;
    std::vector<std::vector<double>> hists(
        static_cast<std::size_t>(cells_x) * cells_y, std::vector<double>(cfg.bins, 0.0));
    const double bin_width = 180.0 / cfg.bins;
    for (int r = 0; r < field.height(); ++r) {
        for (int c = 0; c < field.width(); ++c) {
            const double gx = field.gx.at(0, r, c);
            const double gy = field.gy.at(0, r, c);
            const double mag = std::sqrt(gx * gx + gy * gy);
            if (mag == 0.0) continue;
            double ang = std::atan2(gy, gx) * 180.0 / 3.14159265358979323846;
            if (ang < 0.0) ang += 360.0;
            if (ang >= 180.0) ang -= 180.0;  // unsigned fold
            // bin centers at k * bin_width; linear split between neighbors
            const double pos = ang / bin_width;
            int b0 = static_cast<int>(std::floor(pos));
            const double frac = pos - b0;
            b0 %= cfg.bins;
            const int b1 = (b0 + 1) % cfg.bins;
            auto& hist = hists[static_cast<std::size_t>(r / cfg.cell) * cells_x + c / cfg.cell];
            hist[b0] += mag * (1.0 - frac);
            hist[b1] += mag * frac;
        }
    }
    return hists;
}

HogDescriptor hog(const GradientField& field, const HogConfig& cfg) {
    const auto hists = hog_cell_histograms(field, cfg);
    const int cells_x = field.width() / cfg.cell;
    const int cells_y = field.height() / cfg.cell;
    const int blocks_x = (cells_x - cfg.block) / cfg.block_stride + 1;
    const int blocks_y = (cells_y - cfg.block) / cfg.block_stride + 1;

    HogDescriptor d;
    d.window_w = field.width();
    d.window_h = field.height();
    d.values.reserve(static_cast<std::size_t>(blocks_x) * blocks_y * cfg.block * cfg.block * cfg.bins);

    std::vector<double> block(static_cast<std::size_t>(cfg.block) * cfg.block * cfg.bins);
    for (int by = 0; by < blocks_y; ++by) {
        for (int bx = 0; bx < blocks_x; ++bx) {
            std::size_t k = 0;
            for (int cy = 0; cy < cfg.block; ++cy)
                for (int cx = 0; cx < cfg.block; ++cx) {
                    const auto& h = hists[static_cast<std::size_t>(by * cfg.block_stride + cy) * cells_x +
                                          bx * cfg.block_stride + cx];
                    for (int b = 0; b < cfg.bins; ++b) block[k++] = h[b];
                }
            // L2-Hys: normalize, clip, renormalize
            double ss = 0.0;
            for (double v : block) ss += v * v;
            double norm = std::sqrt(ss);
            if (norm > 0.0)
                for (auto& v : block) v = std::min(v / norm, static_cast<double>(cfg.clip));
            ss = 0.0;
            for (double v : block) ss += v * v;
            norm = std::sqrt(ss);
            for (double v : block)
                d.values.push_back(norm > 0.0 ? static_cast<float>(v / norm) : 0.0f);
        }
    }
    return d;
}

double hog_distance(const HogDescriptor& a, const HogDescriptor& b) {
    if (a.values.size() != b.values.size())
        throw InvariantError("hog_distance: descriptor length mismatch");
    double ss = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        const double d = static_cast<double>(a.values[i]) - b.values[i];
        ss += d * d;
    }
    return std::sqrt(ss);
}

PlanarImage hog_glyphs(const GradientField& field, const HogConfig& cfg, int glyph_size) {
    const auto hists = hog_cell_histograms(field, cfg);
    const int cells_x = field.width() / cfg.cell;
    const int cells_y = field.height() / cfg.cell;
    PlanarImage out(cells_x * glyph_size, cells_y * glyph_size, 1);
    double peak = 0.0;
    for (const auto& h : hists)
        for (double v : h) peak = std::max(peak, v);
    if (peak <= 0.0) return out;

    const double bin_width = 180.0 / cfg.bins;
    for (int cy = 0; cy < cells_y; ++cy)
        for (int cx = 0; cx < cells_x; ++cx) {
            const auto& h = hists[static_cast<std::size_t>(cy) * cells_x + cx];
            const double ccx = cx * glyph_size + glyph_size / 2.0;
            const double ccy = cy * glyph_size + glyph_size / 2.0;
            for (int b = 0; b < cfg.bins; ++b) {
                const double strength = h[b] / peak;
                if (strength <= 0.0) continue;
                // draw the edge direction (perpendicular to the gradient bin)
                const double ang = (b * bin_width + 90.0) * 3.14159265358979323846 / 180.0;
                const double len = strength * (glyph_size / 2.0 - 1.0);
                const int steps = glyph_size;
                for (int s = -steps; s <= steps; ++s) {
                    const double f = static_cast<double>(s) / steps;
                    const int x = static_cast<int>(std::lround(ccx + f * len * std::cos(ang)));
                    const int y = static_cast<int>(std::lround(ccy - f * len * std::sin(ang)));
                    if (x >= 0 && x < out.width && y >= 0 && y < out.height) {
                        float& px = out.at(0, y, x);
                        px = std::max(px, static_cast<float>(strength));
                    }
                }
            }
        }
    return out;
}

}  // namespace bayergrad
