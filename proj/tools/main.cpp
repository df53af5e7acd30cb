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

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "bayergrad/experiments.hpp"
#include "bayergrad/hog.hpp"
#include "bayergrad/image_ops.hpp"
#include "bayergrad/io.hpp"
#include "bayergrad/multiscale.hpp"
#include "bayergrad/noise.hpp"
#include "bayergrad/quality.hpp"
#include "bayergrad/sift.hpp"

namespace fs = std::filesystem;
using namespace bayergrad;

namespace {

// After parsing, fill any option the user did not pass from a flat
// key = value config file. Flags always win over the file.
void apply_config(CLI::App* app, const std::string& config_path) {
    if (config_path.empty()) return;
    const auto cfg = parse_config_file(config_path);
    for (auto* opt : app->get_options()) {
        if (opt->count() > 0) continue;
        const std::string name = opt->get_single_name();
        const auto it = cfg.find(name);
        if (it != cfg.end()) opt->add_result(it->second)->run_callback();
    }
}

struct CommonOpts {
    std::string pattern = "rggb";
    std::string op = "central";
    std::string out = ".";
    std::string config;
    std::uint64_t seed = 0;
    int jobs = 1;
};

void add_common(CLI::App* sub, CommonOpts& c, bool with_operator = false) {
    sub->add_option("--pattern", c.pattern, "CFA pattern: rggb, grbg, gbrg, bggr");
    if (with_operator) sub->add_option("--operator", c.op, "gradient operator: central, sobel");
    sub->add_option("--out", c.out, "output directory");
    sub->add_option("--config", c.config, "flat key = value config file; flags override");
    sub->add_option("--seed", c.seed, "random seed");
    sub->add_option("--jobs", c.jobs, "parallel workers for per-image experiments");
}

PlanarImage to_gray_raster(const PlanarImage& img, bool treat_bayer) {
    if (img.channels == 3 && !treat_bayer) return rgb_to_gray(img);
    return img.channels == 3 ? rgb_to_gray(img) : img;
}

// side-by-side match rendering with connecting lines
void draw_line(PlanarImage& img, double x0, double y0, double x1, double y1, float v) {
    const int steps = static_cast<int>(std::max(std::abs(x1 - x0), std::abs(y1 - y0))) + 1;
    for (int i = 0; i <= steps; ++i) {
        const double f = static_cast<double>(i) / steps;
        const int x = static_cast<int>(std::lround(x0 + f * (x1 - x0)));
        const int y = static_cast<int>(std::lround(y0 + f * (y1 - y0)));
        if (x >= 0 && x < img.width && y >= 0 && y < img.height) img.at(0, y, x) = v;
    }
}

void draw_cross(PlanarImage& img, double x, double y, float v) {
    for (int d = -2; d <= 2; ++d) {
        const int xi = static_cast<int>(std::lround(x)), yi = static_cast<int>(std::lround(y));
        if (xi + d >= 0 && xi + d < img.width && yi >= 0 && yi < img.height)
            img.at(0, yi, xi + d) = v;
        if (yi + d >= 0 && yi + d < img.height && xi >= 0 && xi < img.width)
            img.at(0, yi + d, xi) = v;
    }
}

PlanarImage side_by_side(const PlanarImage& a, const PlanarImage& b) {
    PlanarImage out(a.width + b.width, std::max(a.height, b.height), 1);
    for (int r = 0; r < a.height; ++r)
        for (int c = 0; c < a.width; ++c) out.at(0, r, c) = a.at(0, r, c);
    for (int r = 0; r < b.height; ++r)
        for (int c = 0; c < b.width; ++c) out.at(0, r, c + a.width) = b.at(0, r, c);
    return out;
}

ScaleSpace build_space(const PlanarImage& img, bool bayer_mode, CfaPattern pattern,
                       int scales, int octaves, double sigma) {
    if (bayer_mode) {
        const BayerImage bay = img.channels == 1 ? as_bayer(img, pattern)
                                                 : mosaic(img, pattern);
        const int octs = octaves > 0 ? octaves
                                     : std::min(4, max_octaves(bay.width, bay.height));
        return build_scale_space(bay, scales, octs, sigma);
    }
    const PlanarImage gray = img.channels == 3 ? rgb_to_gray(img) : img;
    const int octs = octaves > 0 ? octaves : std::min(4, max_octaves(gray.width, gray.height));
    return build_scale_space(gray, scales, octs, sigma);
}

void write_keypoints_csv(const fs::path& path, const std::vector<SiftDescriptor>& descs) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& d : descs) {
        const auto& k = d.keypoint;
        rows.push_back({format_double(k.x, 3), format_double(k.y, 3),
                        format_double(k.scale, 4), format_double(k.orientation, 2),
                        format_double(k.response, 6)});
    }
    write_csv(path, {"x", "y", "scale", "orientation", "response"}, rows);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gradient feature extraction from raw Bayer mosaics"};
    app.require_subcommand(1);

    // ------------------------------------------------------------ demosaic
    auto* sub_dem = app.add_subcommand("demosaic", "reconstruct a color image from a mosaic");
    CommonOpts dem_c;
    std::string dem_in, dem_method = "bilinear", dem_out_file = "demosaiced.png";
    sub_dem->add_option("input", dem_in, "single-channel mosaic (PNG/PGM)")->required();
    sub_dem->add_option("--method", dem_method, "nearest, bilinear, bicubic, acpi, hybrid");
    sub_dem->add_option("--output", dem_out_file, "output image file");
    add_common(sub_dem, dem_c);

    // ----------------------------------------------------------------- grad
    auto* sub_grad = app.add_subcommand("grad", "gradient magnitude map of an image or mosaic");
    CommonOpts grad_c;
    std::string grad_in, grad_out_file = "magnitude.png", grad_dump, grad_mode = "gray";
    bool grad_bayer = false;
    sub_grad->add_option("input", grad_in)->required();
    sub_grad->add_flag("--bayer", grad_bayer,
                       "treat a single-channel input as a mosaic, or mosaic a color input first");
    sub_grad->add_option("--color-mode", grad_mode,
                         "3-channel handling: gray, max (strongest channel per pixel), r, g, b");
    sub_grad->add_option("--output", grad_out_file, "inverse-video magnitude PNG");
    sub_grad->add_option("--dump-float", grad_dump, "optional raw float32 dump");
    add_common(sub_grad, grad_c, true);

    // -------------------------------------------------------------- compare
    auto* sub_cmp = app.add_subcommand("compare", "full-reference quality metrics of two images");
    CommonOpts cmp_c;
    std::string cmp_a, cmp_b, cmp_out_file;
    sub_cmp->add_option("first", cmp_a)->required();
    sub_cmp->add_option("second", cmp_b)->required();
    sub_cmp->add_option("--output", cmp_out_file, "CSV file (default: print to stdout)");
    add_common(sub_cmp, cmp_c);

    // -------------------------------------------------------------- pyramid
    auto* sub_pyr = app.add_subcommand("pyramid", "Gaussian/DoG scale space dump");
    CommonOpts pyr_c;
    std::string pyr_in;
    bool pyr_bayer = false;
    int pyr_scales = 3, pyr_octaves = 0;
    double pyr_sigma = 1.6;
    sub_pyr->add_option("input", pyr_in)->required();
    sub_pyr->add_flag("--bayer", pyr_bayer, "build the mosaic-domain pyramid");
    sub_pyr->add_option("--scales", pyr_scales);
    sub_pyr->add_option("--octaves", pyr_octaves, "0 = auto");
    sub_pyr->add_option("--sigma", pyr_sigma, "base sigma in pixel units");
    add_common(sub_pyr, pyr_c);

    // ------------------------------------------------------------------ hog
    auto* sub_hog = app.add_subcommand("hog", "HOG descriptor of a window");
    CommonOpts hog_c;
    std::string hog_in;
    bool hog_bayer = false, hog_gamma = false;
    std::vector<int> hog_crop;
    HogConfig hog_cfg;
    sub_hog->add_option("input", hog_in)->required();
    sub_hog->add_flag("--bayer", hog_bayer, "extract from the mosaic instead of gray");
    sub_hog->add_flag("--gamma", hog_gamma, "gamma compression pre-step (scale 2, exponent 0.5)");
    sub_hog->add_option("--crop", hog_crop, "window: X Y W H")->expected(4);
    sub_hog->add_option("--cell", hog_cfg.cell);
    sub_hog->add_option("--bins", hog_cfg.bins);
    sub_hog->add_option("--clip", hog_cfg.clip);
    add_common(sub_hog, hog_c, true);

    // ----------------------------------------------------------------- sift
    auto* sub_sift = app.add_subcommand("sift", "keypoint detection, matching, repeatability");
    sub_sift->require_subcommand(1);
    CommonOpts sift_c;
    bool sift_bayer = false;
    int sift_scales = 3, sift_octaves = 0;
    double sift_sigma = 1.6, sift_contrast = 0.03, sift_edge = 10.0, sift_t = 3.0;

    auto* sift_detect = sub_sift->add_subcommand("detect", "detect and describe keypoints");
    std::string sd_in;
    sift_detect->add_option("input", sd_in)->required();

    auto* sift_match = sub_sift->add_subcommand("match", "match two images");
    std::string sm_a, sm_b;
    sift_match->add_option("first", sm_a)->required();
    sift_match->add_option("second", sm_b)->required();

    auto* sift_repeat = sub_sift->add_subcommand("repeat", "repeatability under a transform");
    std::string sr_in, sr_transform = "rotate";
    double sr_param = 20.0;
    sift_repeat->add_option("input", sr_in)->required();
    sift_repeat->add_option("--transform", sr_transform, "blur, scale, rotate");
    sift_repeat->add_option("--param", sr_param, "kernel size / scale factor / degrees");
    sift_repeat->add_option("--t", sift_t, "match tolerance in pixels");

    for (auto* s : {sift_detect, sift_match, sift_repeat}) {
        s->add_flag("--bayer", sift_bayer, "Bayer-domain pyramid (5x5 extremum window)");
        s->add_option("--scales", sift_scales);
        s->add_option("--octaves", sift_octaves, "0 = auto");
        s->add_option("--sigma", sift_sigma);
        s->add_option("--contrast", sift_contrast);
        s->add_option("--edge-ratio", sift_edge);
        add_common(s, sift_c);
    }

    // ---------------------------------------------------------------- noise
    auto* sub_noise = app.add_subcommand("noise", "signal-dependent noise injection");
    CommonOpts noise_c;
    std::string noise_in, noise_out_file = "noisy.png", noise_preset_name;
    double noise_a = -1.0, noise_b = -1.0;
    sub_noise->add_option("input", noise_in)->required();
    sub_noise->add_option("--a", noise_a, "signal-dependent variance gain");
    sub_noise->add_option("--b", noise_b, "variance floor");
    sub_noise->add_option("--preset", noise_preset_name, "light, mid, heavy");
    sub_noise->add_option("--output", noise_out_file);
    add_common(sub_noise, noise_c);

    // ---------------------------------------------------------------- bench
    auto* sub_bench = app.add_subcommand("bench", "pipeline benchmark (serial)");
    CommonOpts bench_c;
    std::string bench_dataset;
    int bench_repeats = 5;
    sub_bench->add_option("--dataset", bench_dataset)->required();
    sub_bench->add_option("--repeats", bench_repeats, "runs per image (median taken)");
    add_common(sub_bench, bench_c);

    // ---------------------------------------------------------------- table
    auto* sub_table = app.add_subcommand("table", "experiment runner");
    CommonOpts table_c;
    std::string table_exp, table_dataset;
    sub_table->add_option("--experiment", table_exp,
                          "table2, table3, table5, table6, fig5, fig6, fig16")
        ->required();
    sub_table->add_option("--dataset", table_dataset, "required except for fig5");
    add_common(sub_table, table_c, true);

    try {
        app.parse(argc, argv);

        if (*sub_dem) {
            apply_config(sub_dem, dem_c.config);
            fs::create_directories(dem_c.out);
            const BayerImage bay =
                as_bayer(load_image(dem_in).image, parse_cfa_pattern(dem_c.pattern));
            save_image(fs::path(dem_c.out) / dem_out_file,
                       demosaic(bay, parse_demosaic_method(dem_method)));
        } else if (*sub_grad) {
            apply_config(sub_grad, grad_c.config);
            fs::create_directories(grad_c.out);
            const LoadedImage li = load_image(grad_in);
            const GradientOperator op = parse_gradient_operator(grad_c.op);
            GradientField f;
            if (grad_bayer) {
                const CfaPattern pat = parse_cfa_pattern(grad_c.pattern);
                const BayerImage bay =
                    li.image.channels == 1 ? as_bayer(li.image, pat) : mosaic(li.image, pat);
                f = gradients(bay, op);
            } else if (li.image.channels == 1 || grad_mode == "gray") {
                f = gradients(to_gray_raster(li.image, false), op);
            } else if (grad_mode == "max") {
                f = gradients_color_max(li.image, op);
            } else if (grad_mode == "r" || grad_mode == "g" || grad_mode == "b") {
                const int ch = grad_mode == "r" ? 0 : (grad_mode == "g" ? 1 : 2);
                f = gradients_channel(li.image, ch, op);
            } else {
                throw InvariantError("unknown color mode: " + grad_mode);
            }
            const PlanarImage mag = magnitude(f);
            save_inverse_video(fs::path(grad_c.out) / grad_out_file, mag);
            if (!grad_dump.empty()) save_float_raw(fs::path(grad_c.out) / grad_dump, mag);
        } else if (*sub_cmp) {
            apply_config(sub_cmp, cmp_c.config);
            if (!cmp_out_file.empty()) fs::create_directories(cmp_c.out);
            const PlanarImage a = load_image(cmp_a).image;
            const PlanarImage b = load_image(cmp_b).image;
            const PlanarImage ga = a.channels == 3 ? rgb_to_gray(a) : a;
            const PlanarImage gb = b.channels == 3 ? rgb_to_gray(b) : b;
            const double ms = mssim(a, b);
            const double ps = psnr(a, b);
            const double gd =
                gms(magnitude(gradients(ga, GradientOperator::CentralDifference)),
                    magnitude(gradients(gb, GradientOperator::CentralDifference)))
                    .gmsd;
            if (cmp_out_file.empty()) {
                std::cout << "image,mssim,psnr_db,gmsd\n"
                          << fs::path(cmp_a).stem().string() << "," << format_double(ms) << ","
                          << format_double(ps) << "," << format_double(gd) << "\n";
            } else {
                write_csv(fs::path(cmp_c.out) / cmp_out_file, {"image", "mssim", "psnr_db", "gmsd"},
                          {{fs::path(cmp_a).stem().string(), format_double(ms),
                            format_double(ps), format_double(gd)}});
            }
        } else if (*sub_pyr) {
            apply_config(sub_pyr, pyr_c.config);
            const LoadedImage li = load_image(pyr_in);
            const ScaleSpace sp = build_space(li.image, pyr_bayer,
                                              parse_cfa_pattern(pyr_c.pattern), pyr_scales,
                                              pyr_octaves, pyr_sigma);
            fs::create_directories(pyr_c.out);
            std::vector<std::vector<std::string>> manifest;
            for (std::size_t o = 0; o < sp.octaves.size(); ++o)
                for (std::size_t l = 0; l < sp.octaves[o].gauss.size(); ++l) {
                    const std::string name =
                        "oct" + std::to_string(o) + "_level" + std::to_string(l) + ".png";
                    save_image(fs::path(pyr_c.out) / name, sp.octaves[o].gauss[l]);
                    manifest.push_back({std::to_string(o), std::to_string(l),
                                        format_double(sp.absolute_sigma(static_cast<int>(o),
                                                                        static_cast<int>(l)))});
                }
            write_csv(fs::path(pyr_c.out) / "manifest.csv", {"octave", "level", "sigma"},
                      manifest);
        } else if (*sub_hog) {
            apply_config(sub_hog, hog_c.config);
            LoadedImage li = load_image(hog_in);
            PlanarImage raster;
            if (hog_bayer) {
                const CfaPattern pat = parse_cfa_pattern(hog_c.pattern);
                BayerImage bay =
                    li.image.channels == 1 ? as_bayer(li.image, pat) : mosaic(li.image, pat);
                if (hog_gamma) bay = gamma_compress(bay);
                raster = bay.as_planar();
            } else {
                raster = li.image.channels == 3 ? rgb_to_gray(li.image) : li.image;
                if (hog_gamma) raster = gamma_compress(raster);
            }
            if (!hog_crop.empty())
                raster = crop(raster, hog_crop[0], hog_crop[1], hog_crop[2], hog_crop[3]);
            const GradientField f = gradients(raster, parse_gradient_operator(hog_c.op));
            const HogDescriptor d = hog(f, hog_cfg);
            fs::create_directories(hog_c.out);
            std::vector<std::string> row;
            for (float v : d.values) row.push_back(format_double(v));
            std::vector<std::string> header(row.size());
            for (std::size_t i = 0; i < header.size(); ++i) header[i] = "v" + std::to_string(i);
            write_csv(fs::path(hog_c.out) / "descriptor.csv", header, {row});
            save_image(fs::path(hog_c.out) / "glyphs.png", hog_glyphs(f, hog_cfg));
        } else if (*sub_sift) {
            const CfaPattern pat = parse_cfa_pattern(sift_c.pattern);
            DetectParams dp;
            dp.contrast_threshold = sift_contrast;
            dp.edge_ratio = sift_edge;
            fs::create_directories(sift_c.out);
            if (*sift_detect) {
                apply_config(sift_detect, sift_c.config);
                const LoadedImage li = load_image(sd_in);
                const ScaleSpace sp = build_space(li.image, sift_bayer, pat, sift_scales,
                                                  sift_octaves, sift_sigma);
                const auto descs = extract(sp, dp);
                write_keypoints_csv(fs::path(sift_c.out) / "keypoints.csv", descs);
                std::cout << descs.size() << " keypoints\n";
            } else if (*sift_match) {
                apply_config(sift_match, sift_c.config);
                const LoadedImage la = load_image(sm_a);
                const LoadedImage lb = load_image(sm_b);
                const ScaleSpace sa = build_space(la.image, sift_bayer, pat, sift_scales,
                                                  sift_octaves, sift_sigma);
                const ScaleSpace sb = build_space(lb.image, sift_bayer, pat, sift_scales,
                                                  sift_octaves, sift_sigma);
                const auto da = extract(sa, dp);
                const auto db = extract(sb, dp);
                const MatchSet ms = match(da, db);
                std::vector<std::vector<std::string>> rows;
                for (const auto& p : ms.pairs)
                    rows.push_back({std::to_string(p.index1), std::to_string(p.index2),
                                    format_double(p.distance)});
                write_csv(fs::path(sift_c.out) / "matches.csv",
                          {"index1", "index2", "distance"}, rows);
                // visualization
                const PlanarImage ga = to_gray_raster(la.image, false);
                const PlanarImage gb = to_gray_raster(lb.image, false);
                PlanarImage vis = side_by_side(ga, gb);
                for (const auto& p : ms.pairs) {
                    const auto& k1 = da[p.index1].keypoint;
                    const auto& k2 = db[p.index2].keypoint;
                    draw_cross(vis, k1.x, k1.y, 1.0f);
                    draw_cross(vis, k2.x + ga.width, k2.y, 1.0f);
                    draw_line(vis, k1.x, k1.y, k2.x + ga.width, k2.y, 1.0f);
                }
                save_image(fs::path(sift_c.out) / "matches.png", vis);
                std::cout << ms.pairs.size() << " matches (of " << ms.n1 << " x " << ms.n2
                          << ")\n";
            } else if (*sift_repeat) {
                apply_config(sift_repeat, sift_c.config);
                const LoadedImage li = load_image(sr_in);
                const PlanarImage gray = to_gray_raster(li.image, false);
                Homography h = Homography::identity();
                PlanarImage transformed;
                std::optional<BayerImage> tb;
                std::optional<BayerImage> bay;
                if (sift_bayer)
                    bay = li.image.channels == 1 ? as_bayer(li.image, pat)
                                                 : mosaic(li.image, pat);
                if (sr_transform == "blur") {
                    // kernel applied on the native lattice of the chosen path
                    const int k = static_cast<int>(sr_param);
                    transformed = blur(gray, GaussianKernel::make(k));
                    if (bay) tb = blur_bayer(*bay, GaussianKernel::make(k));
                } else if (sr_transform == "scale") {
                    transformed = resize(gray, sr_param);
                    if (bay) tb = resize_bayer(*bay, sr_param);
                    h = scale_homography(sr_param);
                } else if (sr_transform == "rotate") {
                    transformed = rotate_planar(gray, sr_param);
                    if (bay) tb = rotate_bayer(*bay, sr_param);
                    h = rotation_homography(sr_param, (gray.width - 1) / 2.0,
                                            (gray.height - 1) / 2.0);
                } else {
                    throw InvariantError("unknown transform: " + sr_transform);
                }
                double rep;
                if (bay) {
                    const int octs = sift_octaves > 0
                                         ? sift_octaves
                                         : std::min(4, max_octaves(bay->width, bay->height));
                    rep = repeatability(
                        detect(build_scale_space(*bay, sift_scales, octs, sift_sigma), dp),
                        detect(build_scale_space(*tb, sift_scales,
                                                 std::min(octs, max_octaves(tb->width, tb->height)),
                                                 sift_sigma), dp),
                        h, sift_t);
                } else {
                    const int octs = sift_octaves > 0
                                         ? sift_octaves
                                         : std::min(4, max_octaves(gray.width, gray.height));
                    rep = repeatability(
                        detect(build_scale_space(gray, sift_scales, octs, sift_sigma), dp),
                        detect(build_scale_space(transformed, sift_scales,
                                                 std::min(octs, max_octaves(transformed.width,
                                                                            transformed.height)),
                                                 sift_sigma), dp),
                        h, sift_t);
                }
                std::cout << "repeatability," << format_double(rep, 4) << "\n";
            }
        } else if (*sub_noise) {
            apply_config(sub_noise, noise_c.config);
            NoiseParams p;
            if (!noise_preset_name.empty()) p = noise_preset(noise_preset_name, noise_c.seed);
            if (noise_a >= 0.0) p.a = noise_a;
            if (noise_b >= 0.0) p.b = noise_b;
            p.seed = noise_c.seed;
            const LoadedImage li = load_image(noise_in);
            fs::create_directories(noise_c.out);
            save_image(fs::path(noise_c.out) / noise_out_file, add_noise(li.image, p));
        } else if (*sub_bench) {
            apply_config(sub_bench, bench_c.config);
            const auto suite = load_dataset(bench_dataset);
            const auto rows = run_table6(suite, bench_c.out, bench_repeats,
                                         parse_cfa_pattern(bench_c.pattern));
            for (const auto& r : rows)
                std::cout << r.label << ": " << format_double(r.time_ms, 2) << " ms, "
                          << r.peak_bytes << " bytes (x" << format_double(r.time_ratio, 2)
                          << " time, x" << format_double(r.mem_ratio, 2) << " mem)\n";
        } else if (*sub_table) {
            apply_config(sub_table, table_c.config);
            const CfaPattern pat = parse_cfa_pattern(table_c.pattern);
            if (table_exp == "fig5") {
                run_fig5(table_c.out);
            } else {
                if (table_dataset.empty())
                    throw CLI::ValidationError("--dataset is required for " + table_exp);
                const auto suite = load_dataset(table_dataset);
                if (table_exp == "table2")
                    run_table2(suite, table_c.out, parse_gradient_operator(table_c.op), pat,
                               table_c.jobs);
                else if (table_exp == "table3")
                    run_table3(suite, table_c.out, pat, table_c.jobs);
                else if (table_exp == "table5")
                    run_table5(suite, table_c.out, pat, table_c.jobs);
                else if (table_exp == "table6")
                    run_table6(suite, table_c.out, 5, pat);
                else if (table_exp == "fig6")
                    run_fig6(suite, table_c.out, pat, table_c.jobs);
                else if (table_exp == "fig16")
                    run_fig16(suite, table_c.out, pat, table_c.jobs);
                else
                    throw CLI::ValidationError("unknown experiment: " + table_exp);
            }
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvariantError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
