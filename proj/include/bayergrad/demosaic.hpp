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

#include <string>

#include "bayergrad/types.hpp"

namespace bayergrad {

/// Baseline interpolators, from cheapest to best reconstruction quality:
///   NearestNeighbor    copy from the closest sample of each channel
///   Bilinear           per-channel neighbor averaging
///   Bicubic            Catmull-Rom midpoints per channel plane
///   AdaptiveColorPlane Hamilton-Adams gradient-directed green, then R/B
///                      through color differences
///   Hybrid             Malvar-He-Cutler fixed 5x5 gradient-corrected
///                      linear filters
enum class DemosaicMethod { NearestNeighbor, Bilinear, Bicubic, AdaptiveColorPlane, Hybrid };

const char* to_string(DemosaicMethod m);
DemosaicMethod parse_demosaic_method(const std::string& name);

/// Reconstruct a full 3-channel raster. The sampled channel passes through
/// unchanged at every CFA position; outputs are clamped to [0,1]. Borders
/// use mirror extension, which preserves the CFA phase because reflection
/// about index 0 or n-1 keeps coordinate parity (even dimensions).
PlanarImage demosaic(const BayerImage& img, DemosaicMethod method);

/// Mosaic the truth image, demosaic it, and score the reconstruction:
/// MSSIM and PSNR channel-averaged on intensities, GMSD between
/// central-difference gradient magnitudes of the gray conversions.
struct DemosaicQuality {
    double mssim = 0.0;
    double psnr_db = 0.0;
    double gmsd = 0.0;
};
DemosaicQuality demosaic_quality(const PlanarImage& truth, DemosaicMethod method,
                                 CfaPattern pattern = CfaPattern::RGGB);

}  // namespace bayergrad
