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

#include <vector>

#include "bayergrad/types.hpp"

namespace bayergrad {

/// sigma = 0.3 * ((a - 1) * 0.5 - 1) + 0.8 for an odd kernel size a.
double sigma_for_kernel(int size);

/// Separable symmetric Gaussian taps, normalized to sum 1 (within 1e-12).
struct GaussianKernel {
    int size = 0;
    double sigma = 0.0;
    std::vector<double> taps;

    /// Kernel of the given odd size with sigma from sigma_for_kernel.
    static GaussianKernel make(int size);
    static GaussianKernel make(int size, double sigma);
    /// Smallest odd kernel covering roughly +/-3 sigma (never below 3 taps).
    static GaussianKernel for_sigma(double sigma);
};

/// Separable convolution per channel, mirror borders.
PlanarImage blur(const PlanarImage& img, const GaussianKernel& kernel);

/// Blur each of the four super-pixel planes independently and reassemble;
/// the CFA pattern survives untouched. The kernel acts on the super-pixel
/// lattice, so its footprint spans twice as many source pixels as the same
/// kernel on a gray image.
BayerImage blur_bayer(const BayerImage& img, const GaussianKernel& kernel);

/// Bilinear resampling with pixel-center alignment:
/// src = (dst + 0.5) / scale - 0.5, clamped to the frame.
PlanarImage resize(const PlanarImage& img, double scale);
PlanarImage resize(const PlanarImage& img, int out_width, int out_height);

/// Bilinear resampling of each super-pixel plane, reassembled. Output
/// dimensions are always even.
BayerImage resize_bayer(const BayerImage& img, double scale);

enum class ScaleSpaceDomain { Gray, BayerSuperPixel };

/// Gaussian + DoG pyramid. Levels are stored as plain rasters; in the
/// Bayer domain every level is a full-resolution mosaic blurred through
/// the super-pixel structure, so the gradient and extremum machinery can
/// treat both domains identically (the detector widens its in-plane
/// window to 5x5 on mosaics).
struct ScaleSpaceOctave {
    std::vector<PlanarImage> gauss;  // s + 3 levels
    std::vector<PlanarImage> dog;    // s + 2 levels, dog[i] = gauss[i+1] - gauss[i]
    int width = 0;
    int height = 0;
};

struct ScaleSpace {
    ScaleSpaceDomain domain = ScaleSpaceDomain::Gray;
    CfaPattern pattern = CfaPattern::RGGB;  // meaningful in the Bayer domain
    int scales = 3;                         // s
    double base_sigma = 1.6;
    std::vector<ScaleSpaceOctave> octaves;

    /// Octave-relative sigma of level i: base_sigma * 2^(i/s).
    double level_sigma(int level) const;
    /// Absolute sigma in input-pixel units: level_sigma(i) * 2^octave.
    double absolute_sigma(int octave, int level) const;
};

/// Gray pyramid: the base level is the input brought up to base_sigma
/// (assumed input blur 0.5), successive levels add incremental blurs, and
/// each new octave decimates the level whose relative sigma is 2*base.
/// Requires min dimension >= 8 at the top octave.
ScaleSpace build_scale_space(const PlanarImage& gray, int scales, int octave_count,
                             double base_sigma = 1.6);

/// Bayer pyramid: identical ladder, but blurs act per super-pixel plane
/// with sigma/2 (the plane lattice is half-resolution) and octaves
/// downsample by super-pixel half-scale. base_sigma stays in pixel units
/// so keypoint scales are comparable across domains.
ScaleSpace build_scale_space(const BayerImage& bayer, int scales, int octave_count,
                             double base_sigma = 1.6);

/// Largest octave count such that the top octave keeps min dimension >= 8.
int max_octaves(int width, int height);

}  // namespace bayergrad
