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

/// Per-pixel gradient magnitude similarity, its mean and population
/// standard deviation. gmsd == 0 iff the two magnitude maps are
/// pointwise identical.
struct GmsResult {
    PlanarImage gms_map;  // values in (0,1]
    double gmsm = 0.0;
    double gmsd = 0.0;
};

/// GMS(x,y) = (2 m1 m2 + c) / (m1^2 + m2^2 + c). Inputs are nonnegative
/// gradient magnitudes of [0,1]-scaled images from the unnormalized
/// operators; c defaults to 0.0026 and is not rescaled.
GmsResult gms(const PlanarImage& m1, const PlanarImage& m2, double c = 0.0026);

/// MSE on (2^n - 1)-scaled sample values; averaged over all samples.
double mse(const PlanarImage& a, const PlanarImage& b, int bit_depth = 8);

/// 10 log10((2^n-1)^2 / MSE) per channel, averaged over channels. Returns
/// +infinity when every channel is exact (and when any channel is exact,
/// the average is +infinity as well).
double psnr(const PlanarImage& a, const PlanarImage& b, int bit_depth = 8);

/// Windowed SSIM: 11x11 Gaussian window (sigma 1.5), K1=0.01, K2=0.03,
/// dynamic range 1.0. The map covers positions where the full window fits;
/// mssim is its mean. Single-channel inputs; min dimension must be >= 11.
struct SsimResult {
    PlanarImage ssim_map;
    double mssim = 0.0;
};
SsimResult ssim(const PlanarImage& a, const PlanarImage& b);

/// Channel-averaged mean SSIM for 1- or 3-channel images.
double mssim(const PlanarImage& a, const PlanarImage& b);

/// Histogram with the bin range auto-selected as [min,max] of the data
/// (difference images with negative values are fine). Counts sum to the
/// sample count. A constant image lands entirely in bin 0.
std::vector<std::int64_t> gray_histogram(const PlanarImage& img, int bins = 256);

}  // namespace bayergrad
