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

#include <filesystem>
#include <string>
#include <vector>

#include "bayergrad/types.hpp"

namespace bayergrad {

/// Decoded raster plus the source bit depth. n-bit integer samples map to
/// [0,1] by dividing by 2^n - 1.
struct LoadedImage {
    PlanarImage image;
    int bit_depth = 8;
};

/// PNG, PPM (P6) or PGM (P5), chosen by content/extension.
LoadedImage load_image(const std::filesystem::path& path);

/// Reinterpret a single-channel raster as a mosaic with a declared pattern.
/// Rejects odd dimensions and multi-channel inputs.
BayerImage as_bayer(const PlanarImage& img, CfaPattern pattern);

/// Writers quantize with rounding at the requested depth (8 or 16) and
/// clamp to [0,1] first. Format chosen by extension: .png/.ppm/.pgm.
void save_image(const std::filesystem::path& path, const PlanarImage& img,
                int bit_depth = 8);
void save_image(const std::filesystem::path& path, const BayerImage& img,
                int bit_depth = 8);

/// Gradient-map convention: values clamped to [0,1] and written as 1 - v,
/// so zero gradient shows as white.
void save_inverse_video(const std::filesystem::path& path, const PlanarImage& img);

/// Row-major float32 little-endian dump with two little-endian uint32
/// header words (width, height).
void save_float_raw(const std::filesystem::path& path, const PlanarImage& img);
PlanarImage load_float_raw(const std::filesystem::path& path);

/// RFC-4180-style CSV with a header row. Fields containing commas, quotes
/// or newlines are quoted; embedded quotes are doubled.
void write_csv(const std::filesystem::path& path,
               const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};
CsvTable read_csv(const std::filesystem::path& path);

/// Fixed-precision numeric formatting used in CSV outputs so repeated runs
/// produce identical bytes.
std::string format_double(double v, int precision = 6);

}  // namespace bayergrad
