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

#include "bayergrad/multiscale.hpp"

#include <algorithm>
#include <cmath>

#include "bayergrad/image_ops.hpp"

namespace bayergrad {

double sigma_for_kernel(int size) {
    if (size < 1 || (size % 2) == 0)
        throw InvariantError("sigma_for_kernel: kernel size must be odd and positive");
    return 0.3 * ((size - 1) * 0.5 - 1.0) + 0.8;
}

GaussianKernel GaussianKernel::make(int size) { return make(size, sigma_for_kernel(size)); }

GaussianKernel GaussianKernel::make(int size, double sigma) {
    if (size < 1 || (size % 2) == 0)
        throw InvariantError("GaussianKernel: size must be odd and positive");
    if (sigma <= 0.0) throw InvariantError("GaussianKernel: sigma must be positive");
    GaussianKernel k;
    k.size = size;
    k.sigma = sigma;
    k.taps.resize(size);
    const int half = size / 2;
    double sum = 0.0;
    for (int i = 0; i < size; ++i) {
        const double x = i - half;
        k.taps[i] = std::exp(-x * x / (2.0 * sigma * sigma));
        sum += k.taps[i];
    }
    for (auto& t : k.taps) t /= sum;
    return k;
}

GaussianKernel GaussianKernel::for_sigma(double sigma) {
    const int half = std::max(1, static_cast<int>(std::ceil(3.0 * sigma)));
    return make(2 * half + 1, sigma);
}

namespace {
PlanarImage blur_plane(const PlanarImage& img, const GaussianKernel& k) {
    const int w = img.width, h = img.height, half = k.size / 2;
    PlanarImage tmp(w, h, 1), out(w, h, 1);
    for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c) {
            double s = 0.0;
            for (int i = -half; i <= half; ++i)
                s += k.taps[i + half] * img.at(0, r, reflect101(c + i, w));
            tmp.at(0, r, c) = static_cast<float>(s);
        }
    for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c) {
            double s = 0.0;
            for (int i = -half; i <= half; ++i)
                s += k.taps[i + half] * tmp.at(0, reflect101(r + i, h), c);
            out.at(0, r, c) = static_cast<float>(s);
        }
    return out;
}
}  // namespace

PlanarImage blur(const PlanarImage& img, const GaussianKernel& kernel) {
    if (img.channels == 1) return blur_plane(img, kernel);
    PlanarImage out(img.width, img.height, img.channels);
    for (int c = 0; c < img.channels; ++c) {
        PlanarImage p = blur_plane(img.extract_channel(c), kernel);
        std::copy(p.samples.begin(), p.samples.end(), out.plane(c).begin());
    }
    return out;
}

BayerImage blur_bayer(const BayerImage& img, const GaussianKernel& kernel) {
    SuperPixelView v = superpixel_view(img);
    for (int i = 0; i < 4; ++i) v.plane(i) = blur_plane(v.plane(i), kernel);
    return reassemble(v);
}

PlanarImage resize(const PlanarImage& img, int out_width, int out_height) {
    if (out_width < 1 || out_height < 1)
        throw InvariantError("resize: degenerate output size");
    PlanarImage out(out_width, out_height, img.channels);
    const double sx = static_cast<double>(img.width) / out_width;
    const double sy = static_cast<double>(img.height) / out_height;
    for (int c = 0; c < img.channels; ++c)
        for (int r = 0; r < out_height; ++r)
            for (int col = 0; col < out_width; ++col) {
                const double fx = (col + 0.5) * sx - 0.5;
                const double fy = (r + 0.5) * sy - 0.5;
                int x0 = static_cast<int>(std::floor(fx));
                int y0 = static_cast<int>(std::floor(fy));
                const double ax = std::min(std::max(fx - x0, 0.0), 1.0);
                const double ay = std::min(std::max(fy - y0, 0.0), 1.0);
                x0 = std::min(std::max(x0, 0), img.width - 1);
                y0 = std::min(std::max(y0, 0), img.height - 1);
                const int x1 = std::min(x0 + 1, img.width - 1);
                const int y1 = std::min(y0 + 1, img.height - 1);
                const double top = img.at(c, y0, x0) * (1.0 - ax) + img.at(c, y0, x1) * ax;
                const double bot = img.at(c, y1, x0) * (1.0 - ax) + img.at(c, y1, x1) * ax;
                out.at(c, r, col) = static_cast<float>(top * (1.0 - ay) + bot * ay);
            }
    return out;
}

PlanarImage resize(const PlanarImage& img, double scale) {
    if (scale <= 0.0) throw InvariantError("resize: scale must be positive");
    if (scale == 1.0) return img;
    const int ow = std::max(1, static_cast<int>(std::lround(img.width * scale)));
    const int oh = std::max(1, static_cast<int>(std::lround(img.height * scale)));
    return resize(img, ow, oh);
}

BayerImage resize_bayer(const BayerImage& img, double scale) {
    if (scale <= 0.0) throw InvariantError("resize_bayer: scale must be positive");
    if (scale == 1.0) return img;
    SuperPixelView v = superpixel_view(img);
    const int ow = static_cast<int>(std::lround(v.sp_width * scale));
    const int oh = static_cast<int>(std::lround(v.sp_height * scale));
    if (ow < 1 || oh < 1) throw InvariantError("resize_bayer: degenerate super-pixel grid");
    for (int i = 0; i < 4; ++i) v.plane(i) = resize(v.plane(i), ow, oh);
    v.sp_width = ow;
    v.sp_height = oh;
    return reassemble(v);
}

double ScaleSpace::level_sigma(int level) const {
    return base_sigma * std::pow(2.0, static_cast<double>(level) / scales);
}

double ScaleSpace::absolute_sigma(int octave, int level) const {
    return level_sigma(level) * std::pow(2.0, octave);
}

int max_octaves(int width, int height) {
    int n = 0;
    int d = std::min(width, height);
    while (d >= 8) {
        ++n;
        d /= 2;
    }
    return std::max(n, 0);
}

namespace {

void check_octaves(int w, int h, int octave_count) {
    if (octave_count < 1) throw InvariantError("build_scale_space: need at least one octave");
    if (octave_count > max_octaves(w, h))
        throw InvariantError("build_scale_space: too many octaves for " + std::to_string(w) +
                             "x" + std::to_string(h) + " (max " +
                             std::to_string(max_octaves(w, h)) + ")");
}

// incremental blur that takes sigma_have to sigma_want
double sigma_step(double sigma_have, double sigma_want) {
    return std::sqrt(std::max(sigma_want * sigma_want - sigma_have * sigma_have, 1e-8));
}

PlanarImage decimate2(const PlanarImage& img) {
    PlanarImage out(std::max(1, img.width / 2), std::max(1, img.height / 2), 1);
    for (int r = 0; r < out.height; ++r)
        for (int c = 0; c < out.width; ++c) out.at(0, r, c) = img.at(0, 2 * r, 2 * c);
    return out;
}

// Zero-phase [1 2 1]/4 half-scale: output sample i sits exactly on input
// sample 2i, so pyramid coordinates map back as x * 2^octave without the
// half-sample bias a center-aligned bilinear resize would add.
PlanarImage halfscale_zero_phase(const PlanarImage& img) {
    static constexpr double w[3] = {0.25, 0.5, 0.25};
    PlanarImage out(std::max(1, img.width / 2), std::max(1, img.height / 2), 1);
    for (int r = 0; r < out.height; ++r)
        for (int c = 0; c < out.width; ++c) {
            double s = 0.0;
            for (int a = -1; a <= 1; ++a)
                for (int b = -1; b <= 1; ++b)
                    s += w[a + 1] * w[b + 1] *
                         img.at(0, reflect101(2 * r + a, img.height),
                                reflect101(2 * c + b, img.width));
            out.at(0, r, c) = static_cast<float>(s);
        }
    return out;
}

BayerImage halfscale_bayer_zero_phase(const BayerImage& img) {
    SuperPixelView v = superpixel_view(img);
    for (int i = 0; i < 4; ++i) v.plane(i) = halfscale_zero_phase(v.plane(i));
    v.sp_width = v.r.width;
    v.sp_height = v.r.height;
    return reassemble(v);
}

void fill_dogs(ScaleSpaceOctave& oct) {
    oct.dog.clear();
    for (std::size_t i = 0; i + 1 < oct.gauss.size(); ++i) {
        PlanarImage d(oct.width, oct.height, 1);
        for (std::size_t k = 0; k < d.samples.size(); ++k)
            d.samples[k] = oct.gauss[i + 1].samples[k] - oct.gauss[i].samples[k];
        oct.dog.push_back(std::move(d));
    }
}

}  // namespace

ScaleSpace build_scale_space(const PlanarImage& gray, int scales, int octave_count,
                             double base_sigma) {
    if (gray.channels != 1) throw InvariantError("build_scale_space: gray raster expected");
    if (scales < 1) throw InvariantError("build_scale_space: scales must be >= 1");
    check_octaves(gray.width, gray.height, octave_count);

    ScaleSpace space;
    space.domain = ScaleSpaceDomain::Gray;
    space.scales = scales;
    space.base_sigma = base_sigma;

    constexpr double kAssumedInputSigma = 0.5;
    PlanarImage base = blur(gray, GaussianKernel::for_sigma(sigma_step(kAssumedInputSigma, base_sigma)));
    for (int o = 0; o < octave_count; ++o) {
        ScaleSpaceOctave oct;
        oct.width = base.width;
        oct.height = base.height;
        oct.gauss.push_back(std::move(base));
        for (int i = 1; i < scales + 3; ++i) {
            const double inc = sigma_step(space.level_sigma(i - 1), space.level_sigma(i));
            oct.gauss.push_back(blur(oct.gauss.back(), GaussianKernel::for_sigma(inc)));
        }
        fill_dogs(oct);
        // level `scales` has relative sigma 2*base: decimating it restarts
        // the next octave at base_sigma
        base = decimate2(oct.gauss[scales]);
        space.octaves.push_back(std::move(oct));
    }
    return space;
}

ScaleSpace build_scale_space(const BayerImage& bayer, int scales, int octave_count,
                             double base_sigma) {
    if (scales < 1) throw InvariantError("build_scale_space: scales must be >= 1");
    check_octaves(bayer.width, bayer.height, octave_count);

    ScaleSpace space;
    space.domain = ScaleSpaceDomain::BayerSuperPixel;
    space.pattern = bayer.pattern;
    space.scales = scales;
    space.base_sigma = base_sigma;

    // Plane-lattice sigmas are half the pixel-unit sigmas.
    constexpr double kAssumedPlaneSigma = 0.25;
    BayerImage base = blur_bayer(
        bayer, GaussianKernel::for_sigma(sigma_step(kAssumedPlaneSigma, base_sigma / 2.0)));
    for (int o = 0; o < octave_count; ++o) {
        ScaleSpaceOctave oct;
        oct.width = base.width;
        oct.height = base.height;
        std::vector<BayerImage> mosaics;
        mosaics.push_back(std::move(base));
        for (int i = 1; i < scales + 3; ++i) {
            const double inc =
                sigma_step(space.level_sigma(i - 1) / 2.0, space.level_sigma(i) / 2.0);
            mosaics.push_back(blur_bayer(mosaics.back(), GaussianKernel::for_sigma(inc)));
        }
        base = halfscale_bayer_zero_phase(mosaics[scales]);
        for (auto& m : mosaics) oct.gauss.push_back(m.as_planar());
        fill_dogs(oct);
        space.octaves.push_back(std::move(oct));
    }
    return space;
}

}  // namespace bayergrad
