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

#include "bayergrad/gradient.hpp"
#include "bayergrad/types.hpp"

namespace bayergrad {

/// Classic descriptor layout: 8x8-pixel cells, 9 unsigned orientation bins
/// over [0,180), 2x2-cell blocks sliding one cell at a time, L2-Hys block
/// normalization with clipping at 0.2.
struct HogConfig {
    int cell = 8;          // pixels per cell side
    int block = 2;         // cells per block side
    int bins = 9;
    int block_stride = 1;  // cells
    float clip = 0.2f;
};

struct HogDescriptor {
    int window_w = 0;
    int window_h = 0;
    std::vector<float> values;
};

/// Descriptor of a gradient field whose dimensions equal the detection
/// window (the caller crops or slides). Each pixel votes its magnitude
/// into the two nearest orientation bins by linear interpolation; votes
/// stay within the cell containing the pixel.
HogDescriptor hog(const GradientField& field, const HogConfig& cfg = {});

/// Raw 9-bin cell histograms before block grouping and normalization;
/// cells row-major. Useful for inspection and for the voting oracle.
std::vector<std::vector<double>> hog_cell_histograms(const GradientField& field,
                                                     const HogConfig& cfg = {});

/// Euclidean distance between equal-length descriptors.
double hog_distance(const HogDescriptor& a, const HogDescriptor& b);

/// Star-glyph rendering of per-cell orientation energy, one cell per
/// descriptor cell, white on black.
PlanarImage hog_glyphs(const GradientField& field, const HogConfig& cfg = {},
                       int glyph_size = 16);

}  // namespace bayergrad
