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
#include <vector>

#include "bayergrad/types.hpp"

namespace bayergrad {

/// Unnormalized difference templates. Central difference taps are +/-1 two
/// pixels apart in each axis; on a Bayer mosaic both taps therefore always
/// land on the same color channel, which is what makes the mosaic usable
/// as a plain raster here.
enum class GradientOperator : std::uint8_t { CentralDifference, Sobel };

const char* to_string(GradientOperator op);
GradientOperator parse_gradient_operator(const std::string& name);

/// Signed horizontal/vertical derivative rasters, same shape as the source.
struct GradientField {
    PlanarImage gx;
    PlanarImage gy;
    int width() const { return gx.width; }
    int height() const { return gx.height; }
};

/// Convolve the operator templates with a single-channel raster. Borders
/// use mirror extension (constant areas stay zero there too). Requires at
/// least 3x3.
GradientField gradients(const PlanarImage& img, GradientOperator op);

/// The mosaic is treated as an ordinary single-channel raster; no
/// demosaicing happens anywhere on this path.
GradientField gradients(const BayerImage& img, GradientOperator op);

/// Gradient of the gray conversion of a 3-channel image.
GradientField gradients_gray(const PlanarImage& img, GradientOperator op);

/// Gradient of one channel of a 3-channel image.
GradientField gradients_channel(const PlanarImage& img, int channel, GradientOperator op);

/// Per-pixel gradient of the channel with the largest magnitude.
GradientField gradients_color_max(const PlanarImage& img, GradientOperator op);

/// Per-pixel sqrt(gx^2 + gy^2).
PlanarImage magnitude(const GradientField& f);

/// Per-pixel atan2(gy, gx) in degrees; [0,360) when signed_range, else
/// folded to [0,180).
PlanarImage orientation_deg(const GradientField& f, bool signed_range);

/// Difference-image diagnostics for a 3-channel image: G-R and G-B
/// difference images, the central-difference gradient magnitudes of those
/// difference images, and 256-bin histograms of all four rasters.
struct ChannelDiffDiagnostics {
    PlanarImage diff_gr, diff_gb;
    PlanarImage grad_gr, grad_gb;
    std::vector<std::int64_t> hist_diff_gr, hist_diff_gb;
    std::vector<std::int64_t> hist_grad_gr, hist_grad_gb;
};
ChannelDiffDiagnostics channel_difference_diagnostics(const PlanarImage& img);

}  // namespace bayergrad
