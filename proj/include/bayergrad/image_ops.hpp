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

#include <array>

#include "bayergrad/types.hpp"

namespace bayergrad {

/// Mirror index without edge repetition: ... 2 1 | 0 1 2 ... n-1 | n-2 n-3 ...
inline int reflect101(int i, int n) {
    if (n == 1) return 0;
    while (i < 0 || i >= n) {
        if (i < 0) i = -i;
        if (i >= n) i = 2 * n - 2 - i;
    }
    return i;
}

/// BT.601 luma. Written as b + wr*(r-b) + wg*(g-b) so that images with
/// R == G == B pass through bit-exactly; the Bayer mosaic of such an image
/// is then bit-identical to its gray conversion.
PlanarImage rgb_to_gray(const PlanarImage& img);

/// Resample a 3-channel image onto a CFA lattice. Each output sample equals
/// the input channel selected by channel_at(row, col). Requires even dims.
BayerImage mosaic(const PlanarImage& img, CfaPattern pattern);

/// Extract the four quarter-resolution planes; requires even dimensions.
SuperPixelView superpixel_view(const BayerImage& img);

/// Inverse of superpixel_view; bit-exact round trip.
BayerImage reassemble(const SuperPixelView& view);

/// Rotate a raster about its center by theta degrees, bilinear sampling,
/// out-of-frame zero fill. Positive theta maps (1,0) towards (cos t, -sin t)
/// relative to the center (the rotation_homography convention).
PlanarImage rotate_planar(const PlanarImage& img, double theta_deg);

/// Rotate each of the four sub-planes about its own center and reassemble
/// under the original pattern; keeps the CFA phase intact. Only used to
/// generate experiment inputs.
BayerImage rotate_bayer(const BayerImage& img, double theta_deg);

/// Uniform background with a centered square foreground of side size/2.
/// With suitable color pairs this reproduces the conforming and sign-flip
/// color-transition test cases.
PlanarImage make_square_scene(const std::array<float, 3>& bg,
                              const std::array<float, 3>& fg, int size);

/// out = (scale * in)^exponent, clamped to [0,1]. Contrast lift for
/// low-bit-width inputs ahead of descriptor extraction.
PlanarImage gamma_compress(const PlanarImage& img, float scale = 2.0f,
                           float exponent = 0.5f);
BayerImage gamma_compress(const BayerImage& img, float scale = 2.0f,
                          float exponent = 0.5f);

PlanarImage crop(const PlanarImage& img, int x, int y, int w, int h);

/// Crop a mosaic; x and y must be even so the CFA phase is preserved.
BayerImage crop_bayer(const BayerImage& img, int x, int y, int w, int h);

PlanarImage flip_horizontal(const PlanarImage& img);

}  // namespace bayergrad
