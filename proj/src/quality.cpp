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

#include "bayergrad/quality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bayergrad {

namespace {
void require_same_shape(const PlanarImage& a, const PlanarImage& b, const char* what) {
    if (!a.same_shape(b))
        throw InvariantError(std::string(what) + ": dimension mismatch");
}
}  // namespace

GmsResult gms(const PlanarImage& m1, const PlanarImage& m2, double c) {
    require_same_shape(m1, m2, "gms");
    if (m1.channels != 1) throw InvariantError("gms: magnitude maps are single-channel");
    GmsResult res;
    res.gms_map = PlanarImage(m1.width, m1.height, 1);
    double sum = 0.0;
    for (std::size_t i = 0; i < m1.samples.size(); ++i) {
        const double a = m1.samples[i], b = m2.samples[i];
        const double v = (2.0 * a * b + c) / (a * a + b * b + c);
        res.gms_map.samples[i] = static_cast<float>(v);
        sum += v;
    }
    const double n = static_cast<double>(m1.samples.size());
    res.gmsm = sum / n;
    double ss = 0.0;
    for (float v : res.gms_map.samples) {
        const double d = v - res.gmsm;
        ss += d * d;
    }
    res.gmsd = std::sqrt(ss / n);
    return res;
}

double mse(const PlanarImage& a, const PlanarImage& b, int bit_depth) {
    require_same_shape(a, b, "mse");
    const double peak = static_cast<double>((1 << bit_depth) - 1);
    double sum = 0.0;
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        const double d = (static_cast<double>(a.samples[i]) - b.samples[i]) * peak;
        sum += d * d;
    }
    return sum / static_cast<double>(a.samples.size());
}

double psnr(const PlanarImage& a, const PlanarImage& b, int bit_depth) {
    require_same_shape(a, b, "psnr");
    const double peak = static_cast<double>((1 << bit_depth) - 1);
    double total = 0.0;
    for (int c = 0; c < a.channels; ++c) {
        auto pa = a.plane(c), pb = b.plane(c);
        double sum = 0.0;
        for (std::size_t i = 0; i < pa.size(); ++i) {
            const double d = (static_cast<double>(pa[i]) - pb[i]) * peak;
            sum += d * d;
        }
        const double m = sum / static_cast<double>(pa.size());
        if (m == 0.0) return std::numeric_limits<double>::infinity();
        total += 10.0 * std::log10(peak * peak / m);
    }
    return total / a.channels;
}

namespace {
// 11-tap Gaussian window, sigma 1.5, normalized.
constexpr int kWin = 11;
const std::vector<double>& ssim_window() {
    static const std::vector<double> w = [] {
        std::vector<double> k(kWin);
        double s = 0.0;
        for (int i = 0; i < kWin; ++i) {
            const double x = i - (kWin - 1) / 2.0;
            k[i] = std::exp(-x * x / (2.0 * 1.5 * 1.5));
            s += k[i];
        }
        for (auto& v : k) v /= s;
        return k;
    }();
    return w;
}

// Separable weighted local mean over valid positions.
std::vector<double> windowed_mean(const std::vector<double>& img, int w, int h) {
    const auto& k = ssim_window();
    const int ow = w - kWin + 1, oh = h - kWin + 1;
    std::vector<double> tmp(static_cast<std::size_t>(ow) * h, 0.0);
    for (int r = 0; r < h; ++r)
        for (int c = 0; c < ow; ++c) {
            double s = 0.0;
            for (int i = 0; i < kWin; ++i) s += k[i] * img[static_cast<std::size_t>(r) * w + c + i];
            tmp[static_cast<std::size_t>(r) * ow + c] = s;
        }
    std::vector<double> out(static_cast<std::size_t>(ow) * oh, 0.0);
    for (int r = 0; r < oh; ++r)
        for (int c = 0; c < ow; ++c) {
            double s = 0.0;
            for (int i = 0; i < kWin; ++i) s += k[i] * tmp[static_cast<std::size_t>(r + i) * ow + c];
            out[static_cast<std::size_t>(r) * ow + c] = s;
        }
    return out;
}
}  // namespace

SsimResult ssim(const PlanarImage& a, const PlanarImage& b) {
    require_same_shape(a, b, "ssim");
    if (a.channels != 1) throw InvariantError("ssim: single-channel inputs expected");
    if (a.width < kWin || a.height < kWin)
        throw InvariantError("ssim: image smaller than the 11x11 window");
    const int w = a.width, h = a.height;
    const std::size_t n = a.samples.size();
    std::vector<double> xa(n), xb(n), aa(n), bb(n), ab(n);
    for (std::size_t i = 0; i < n; ++i) {
        xa[i] = a.samples[i];
        xb[i] = b.samples[i];
        aa[i] = xa[i] * xa[i];
        bb[i] = xb[i] * xb[i];
        ab[i] = xa[i] * xb[i];
    }
    const auto mu1 = windowed_mean(xa, w, h);
    const auto mu2 = windowed_mean(xb, w, h);
    const auto m11 = windowed_mean(aa, w, h);
    const auto m22 = windowed_mean(bb, w, h);
    const auto m12 = windowed_mean(ab, w, h);

    constexpr double C1 = 0.01 * 0.01;  // (K1 * L)^2, L = 1
    constexpr double C2 = 0.03 * 0.03;
    const int ow = w - kWin + 1, oh = h - kWin + 1;
    SsimResult res;
    res.ssim_map = PlanarImage(ow, oh, 1);
    double sum = 0.0;
    for (std::size_t i = 0; i < mu1.size(); ++i) {
        const double s11 = m11[i] - mu1[i] * mu1[i];
        const double s22 = m22[i] - mu2[i] * mu2[i];
        const double s12 = m12[i] - mu1[i] * mu2[i];
        const double v = ((2.0 * mu1[i] * mu2[i] + C1) * (2.0 * s12 + C2)) /
                         ((mu1[i] * mu1[i] + mu2[i] * mu2[i] + C1) * (s11 + s22 + C2));
        res.ssim_map.samples[i] = static_cast<float>(v);
        sum += v;
    }
    res.mssim = sum / static_cast<double>(mu1.size());
    return res;
}

double mssim(const PlanarImage& a, const PlanarImage& b) {
    require_same_shape(a, b, "mssim");
    if (a.channels == 1) return ssim(a, b).mssim;
    double total = 0.0;
    for (int c = 0; c < a.channels; ++c)
        total += ssim(a.extract_channel(c), b.extract_channel(c)).mssim;
    return total / a.channels;
}

std::vector<std::int64_t> gray_histogram(const PlanarImage& img, int bins) {
    if (bins < 1) throw InvariantError("gray_histogram: bins must be positive");
    std::vector<std::int64_t> counts(bins, 0);
    const auto [mn_it, mx_it] = std::minmax_element(img.samples.begin(), img.samples.end());
    const double mn = *mn_it, mx = *mx_it;
    if (mx <= mn) {
        counts[0] = static_cast<std::int64_t>(img.samples.size());
        return counts;
    }
    const double scale = bins / (mx - mn);
    for (float v : img.samples) {
        int bin = static_cast<int>((v - mn) * scale);
        bin = std::min(std::max(bin, 0), bins - 1);
        ++counts[bin];
    }
    return counts;
}

}  // namespace bayergrad
