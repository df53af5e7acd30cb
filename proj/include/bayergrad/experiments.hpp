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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bayergrad/demosaic.hpp"
#include "bayergrad/gradient.hpp"
#include "bayergrad/types.hpp"

namespace bayergrad {

/// Two ways from a mosaic to a gradient magnitude map:
///   Pipeline1  blur + resize on the super-pixel structure, gradients
///              straight off the mosaic; no demosaicing anywhere.
///   Pipeline2  demosaic first, blur + resize each channel, convert to
///              gray, then take gradients.
struct PipelineSpec {
    enum class Kind { Pipeline1, Pipeline2 };
    Kind kind = Kind::Pipeline1;
    DemosaicMethod method = DemosaicMethod::Bilinear;  // Pipeline2 only
    int blur_kernel = 3;      // Bayer-side size; Pipeline2 uses the paired 2a+1
    double resize_scale = 0.5;

    static PipelineSpec pipeline1(int blur_kernel = 3, double scale = 0.5);
    static PipelineSpec pipeline2(DemosaicMethod m, int blur_kernel = 3, double scale = 0.5);
    std::string label() const;
};

struct PipelineResult {
    PlanarImage magnitude;
    double wall_ms = 0.0;
    std::size_t peak_bytes = 0;
};

/// Run one pipeline over one mosaic, instrumented for wall time and peak
/// transient allocation.
PipelineResult run_pipeline(const BayerImage& img, const PipelineSpec& spec);

struct BenchRow {
    std::string label;
    double time_ms = 0.0;        // sum over the suite of per-image medians
    std::size_t peak_bytes = 0;  // max over the suite
    double time_ratio = 0.0;     // vs the Pipeline1 row
    double mem_ratio = 0.0;
};

/// A named dataset image, cropped so width and height are multiples of 4
/// (half-scale super-pixel grids stay even).
struct DatasetImage {
    std::string name;
    PlanarImage image;
};

/// Load every readable PNG/PPM in the directory, sorted by filename.
/// Unreadable files are skipped with a warning on stderr.
std::vector<DatasetImage> load_dataset(const std::filesystem::path& dir);

// ---- experiment runners -------------------------------------------------
// Each writes one CSV (per-image rows plus an `average` row) and any
// figure PNGs into out_dir, and returns the summary the acceptance suite
// asserts on. `jobs` parallelizes over images; benchmarks ignore it and
// run serially.

/// Gray-path vs Bayer-path gradient magnitude comparison per image:
/// MSSIM / PSNR / GMSD between the two magnitude maps.
struct GradientCompareRow {
    std::string name;
    double mssim = 0.0, psnr_db = 0.0, gmsd = 0.0;
};
struct GradientCompareSummary {
    std::vector<GradientCompareRow> rows;
    double avg_mssim = 0.0, avg_psnr_db = 0.0, avg_gmsd = 0.0;
};
GradientCompareSummary run_table2(const std::vector<DatasetImage>& suite,
                                  const std::filesystem::path& out_dir,
                                  GradientOperator op = GradientOperator::CentralDifference,
                                  CfaPattern pattern = CfaPattern::RGGB, int jobs = 1);

/// Per-image GMSD for both operators plus gradient-map/GMS-map PNGs.
struct OperatorCompareRow {
    std::string name;
    double gmsd_central = 0.0, gmsd_sobel = 0.0;
};
std::vector<OperatorCompareRow> run_fig6(const std::vector<DatasetImage>& suite,
                                         const std::filesystem::path& out_dir,
                                         CfaPattern pattern = CfaPattern::RGGB, int jobs = 1);

/// Demosaicing ladder: reconstruction quality per method, averaged.
struct DemosaicLadderSummary {
    std::vector<DemosaicMethod> methods;
    // avg[i] is the suite average for methods[i]
    std::vector<DemosaicQuality> avg;
};
DemosaicLadderSummary run_table3(const std::vector<DatasetImage>& suite,
                                 const std::filesystem::path& out_dir,
                                 CfaPattern pattern = CfaPattern::RGGB, int jobs = 1);

/// Super-pixel blur/resize vs color-path blur/resize, compared in the
/// Bayer domain (both sides end as mosaics).
struct MultiscalePairingSummary {
    std::vector<std::string> settings;  // e.g. "blur_b3_c7", "resize_0.5"
    std::vector<double> avg_mssim;
    std::vector<double> avg_mse;
    std::vector<double> avg_psnr;
    double setting_mssim(const std::string& name) const;
};
MultiscalePairingSummary run_table5(const std::vector<DatasetImage>& suite,
                                    const std::filesystem::path& out_dir,
                                    CfaPattern pattern = CfaPattern::RGGB, int jobs = 1);

/// Pipeline benchmark; serial, median of `repeats` runs per image.
std::vector<BenchRow> run_table6(const std::vector<DatasetImage>& suite,
                                 const std::filesystem::path& out_dir, int repeats = 5,
                                 CfaPattern pattern = CfaPattern::RGGB);

/// The four synthetic two-tone scenes: difference images, their gradient
/// maps, the peak gradient magnitude of each difference image, and the
/// per-axis difference amplitude (the magnitude peak reaches sqrt(2) at
/// square corners where both axes jump at once).
struct SceneDiagnosticsRow {
    std::string name;
    double max_grad_gr = 0.0;
    double max_grad_gb = 0.0;
    double edge_amp_gr = 0.0;  // max |d/dx| of the G-R difference image
    double edge_amp_gb = 0.0;
};
std::vector<SceneDiagnosticsRow> run_fig5(const std::filesystem::path& out_dir, int size = 128);

/// SIFT repeatability under blur / scale / rotation for the color and
/// Bayer paths.
struct RepeatabilityRow {
    std::string transform;  // "blur", "scale", "rotate"
    std::string setting;    // e.g. "3", "0.5", "20"
    double avg_color = 0.0;
    double avg_bayer = 0.0;
    double avg_abs_diff = 0.0;  // mean over images of |color - bayer|
};
std::vector<RepeatabilityRow> run_fig16(const std::vector<DatasetImage>& suite,
                                        const std::filesystem::path& out_dir,
                                        CfaPattern pattern = CfaPattern::RGGB, int jobs = 1,
                                        int scales = 3, double t = 3.0);

/// Flat key = value file; '#' starts a comment. Later keys win.
std::map<std::string, std::string> parse_config_file(const std::filesystem::path& path);

}  // namespace bayergrad
