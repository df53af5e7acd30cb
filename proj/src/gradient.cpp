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

#include "bayergrad/gradient.hpp"

#include <algorithm>
#include <cmath>

#include "bayergrad/image_ops.hpp"
#include "bayergrad/quality.hpp"

namespace bayergrad {

const char* to_string(GradientOperator op) {
    return op == GradientOperator::CentralDifference ? "central" : "sobel";
}

GradientOperator parse_gradient_operator(const std::string& name) {
    if (name == "central") return GradientOperator::CentralDifference;
    if (name == "sobel") return GradientOperator::Sobel;
    throw InvariantError("unknown gradient operator: " + name);
}

GradientField gradients(const PlanarImage& img, GradientOperator op) {
    if (img.channels != 1)
        throw InvariantError("gradients: single-channel raster expected");
    if (img.width < 3 || img.height < 3)
        throw InvariantError("gradients: image must be at least 3x3");
    const int w = img.width, h = img.height;
    GradientField f{PlanarImage(w, h, 1), PlanarImage(w, h, 1)};
    auto px = [&](int r, int c) -> float {
        return img.at(0, reflect101(r, h), reflect101(c, w));
    };
    if (op == GradientOperator::CentralDifference) {
        for (int r = 0; r < h; ++r)
            for (int c = 0; c < w; ++c) {
                f.gx.at(0, r, c) = px(r, c + 1) - px(r, c - 1);
                f.gy.at(0, r, c) = px(r + 1, c) - px(r - 1, c);
            }
    } else {
        for (int r = 0; r < h; ++r)
            for (int c = 0; c < w; ++c) {
                f.gx.at(0, r, c) = (px(r - 1, c + 1) - px(r - 1, c - 1)) +
                                   2.0f * (px(r, c + 1) - px(r, c - 1)) +
                                   (px(r + 1, c + 1) - px(r + 1, c - 1));
                f.gy.at(0, r, c) = (px(r + 1, c - 1) - px(r - 1, c - 1)) +
                                   2.0f * (px(r + 1, c) - px(r - 1, c)) +
                                   (px(r + 1, c + 1) - px(r - 1, c + 1));
            }
    }
    return f;
}

GradientField gradients(const BayerImage& img, GradientOperator op) {
    return gradients(img.as_planar(), op);
}

GradientField gradients_gray(const PlanarImage& img, GradientOperator op) {
    return gradients(rgb_to_gray(img), op);
}

GradientField gradients_channel(const PlanarImage& img, int channel, GradientOperator op) {
    return gradients(img.extract_channel(channel), op);
}

GradientField gradients_color_max(const PlanarImage& img, GradientOperator op) {
    if (img.channels != 3)
        throw InvariantError("gradients_color_max: 3-channel input expected");
    GradientField out{PlanarImage(img.width, img.height, 1),
                      PlanarImage(img.width, img.height, 1)};
    for (int c = 0; c < 3; ++c) {
        GradientField f = gradients_channel(img, c, op);
        for (std::size_t i = 0; i < out.gx.samples.size(); ++i) {
            const double cur = static_cast<double>(out.gx.samples[i]) * out.gx.samples[i] +
                               static_cast<double>(out.gy.samples[i]) * out.gy.samples[i];
            const double cand = static_cast<double>(f.gx.samples[i]) * f.gx.samples[i] +
                                static_cast<double>(f.gy.samples[i]) * f.gy.samples[i];
            if (c == 0 || cand > cur) {
                out.gx.samples[i] = f.gx.samples[i];
                out.gy.samples[i] = f.gy.samples[i];
            }
        }
    }
    return out;
}

PlanarImage magnitude(const GradientField& f) {
    PlanarImage out(f.width(), f.height(), 1);
    for (std::size_t i = 0; i < out.samples.size(); ++i)
        out.samples[i] = static_cast<float>(
            std::sqrt(static_cast<double>(f.gx.samples[i]) * f.gx.samples[i] +
                      static_cast<double>(f.gy.samples[i]) * f.gy.samples[i]));
    return out;
}

PlanarImage orientation_deg(const GradientField& f, bool signed_range) {
    PlanarImage out(f.width(), f.height(), 1);
    for (std::size_t i = 0; i < out.samples.size(); ++i) {
        double deg = std::atan2(static_cast<double>(f.gy.samples[i]),
                                static_cast<double>(f.gx.samples[i])) *
                     180.0 / 3.14159265358979323846;
        if (deg < 0.0) deg += 360.0;
        if (deg >= 360.0) deg -= 360.0;
        if (!signed_range && deg >= 180.0) deg -= 180.0;
        out.samples[i] = static_cast<float>(deg);
    }
    return out;
}

ChannelDiffDiagnostics channel_difference_diagnostics(const PlanarImage& img) {
    if (img.channels != 3)
        throw InvariantError("channel_difference_diagnostics: 3-channel input expected");
    ChannelDiffDiagnostics d;
    d.diff_gr = PlanarImage(img.width, img.height, 1);
    d.diff_gb = PlanarImage(img.width, img.height, 1);
    auto r = img.plane(0), g = img.plane(1), b = img.plane(2);
    for (std::size_t i = 0; i < d.diff_gr.samples.size(); ++i) {
        d.diff_gr.samples[i] = g[i] - r[i];
        d.diff_gb.samples[i] = g[i] - b[i];
    }
    d.grad_gr = magnitude(gradients(d.diff_gr, GradientOperator::CentralDifference));
    d.grad_gb = magnitude(gradients(d.diff_gb, GradientOperator::CentralDifference));
    d.hist_diff_gr = gray_histogram(d.diff_gr);
    d.hist_diff_gb = gray_histogram(d.diff_gb);
    d.hist_grad_gr = gray_histogram(d.grad_gr);
    d.hist_grad_gb = gray_histogram(d.grad_gb);
    return d;
}

}  // namespace bayergrad
