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

#include "bayergrad/sift.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>
#include <numeric>

namespace bayergrad {

namespace {
constexpr double kPi = 3.14159265358979323846;

double deg_wrap360(double deg) {
    deg = std::fmod(deg, 360.0);
    if (deg < 0.0) deg += 360.0;
    return deg;
}

// 3x3 linear solve, partial pivoting. Returns false when singular.
bool solve3(std::array<std::array<double, 3>, 3> a, std::array<double, 3>& x) {
    std::array<double, 3> b = x;
    std::array<int, 3> piv = {0, 1, 2};
    for (int col = 0; col < 3; ++col) {
        int best = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::abs(a[piv[r]][col]) > std::abs(a[piv[best]][col])) best = r;
        std::swap(piv[col], piv[best]);
        const double p = a[piv[col]][col];
        if (std::abs(p) < 1e-12) return false;
        for (int r = col + 1; r < 3; ++r) {
            const double f = a[piv[r]][col] / p;
            for (int c2 = col; c2 < 3; ++c2) a[piv[r]][c2] -= f * a[piv[col]][c2];
            b[piv[r]] -= f * b[piv[col]];
        }
    }
    for (int row = 2; row >= 0; --row) {
        double s = b[piv[row]];
        for (int c2 = row + 1; c2 < 3; ++c2) s -= a[piv[row]][c2] * x[c2];
        x[row] = s / a[piv[row]][row];
    }
    return true;
}

struct LevelGradient {
    double mag;
    double ang;  // degrees [0,360)
};

LevelGradient level_gradient(const PlanarImage& img, int r, int c) {
    const int w = img.width, h = img.height;
    auto px = [&](int rr, int cc) -> double {
        rr = std::min(std::max(rr, 0), h - 1);
        cc = std::min(std::max(cc, 0), w - 1);
        return img.at(0, rr, cc);
    };
    const double gx = px(r, c + 1) - px(r, c - 1);
    const double gy = px(r + 1, c) - px(r - 1, c);
    return {std::sqrt(gx * gx + gy * gy), deg_wrap360(std::atan2(gy, gx) * 180.0 / kPi)};
}

}  // namespace

std::array<double, 2> Homography::apply(double x, double y) const {
    const double u = x * m[0][0] + y * m[1][0] + m[2][0];
    const double v = x * m[0][1] + y * m[1][1] + m[2][1];
    const double w = x * m[0][2] + y * m[1][2] + m[2][2];
    if (w == 0.0) throw InvariantError("Homography::apply: point at infinity");
    return {u / w, v / w};
}

Homography Homography::inverse() const {
    const auto& a = m;
    std::array<std::array<double, 3>, 3> adj;
    adj[0][0] = a[1][1] * a[2][2] - a[1][2] * a[2][1];
    adj[0][1] = a[0][2] * a[2][1] - a[0][1] * a[2][2];
    adj[0][2] = a[0][1] * a[1][2] - a[0][2] * a[1][1];
    adj[1][0] = a[1][2] * a[2][0] - a[1][0] * a[2][2];
    adj[1][1] = a[0][0] * a[2][2] - a[0][2] * a[2][0];
    adj[1][2] = a[0][2] * a[1][0] - a[0][0] * a[1][2];
    adj[2][0] = a[1][0] * a[2][1] - a[1][1] * a[2][0];
    adj[2][1] = a[0][1] * a[2][0] - a[0][0] * a[2][1];
    adj[2][2] = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    const double det = a[0][0] * adj[0][0] + a[0][1] * adj[1][0] + a[0][2] * adj[2][0];
    if (std::abs(det) < 1e-15) throw InvariantError("Homography::inverse: singular matrix");
    Homography out;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) out.m[r][c] = adj[r][c] / det;
    if (out.m[2][2] != 0.0) {
        const double s = out.m[2][2];
        for (auto& row : out.m)
            for (auto& v : row) v /= s;
    }
    return out;
}

namespace {
Homography hmul(const Homography& a, const Homography& b) {
    // row-vector composition: p * (a then b) = (p * a) * b
    Homography out;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += a.m[r][k] * b.m[k][c];
            out.m[r][c] = s;
        }
    return out;
}

Homography translation(double tx, double ty) {
    Homography h;
    h.m[2][0] = tx;
    h.m[2][1] = ty;
    return h;
}
}  // namespace

Homography rotation_homography(double theta_deg, double cx, double cy) {
    const double t = theta_deg * kPi / 180.0;
    Homography rot;
    rot.m = {{{std::cos(t), -std::sin(t), 0.0},
              {std::sin(t), std::cos(t), 0.0},
              {0.0, 0.0, 1.0}}};
    return hmul(hmul(translation(-cx, -cy), rot), translation(cx, cy));
}

Homography scale_homography(double s) {
    if (s <= 0.0) throw InvariantError("scale_homography: scale must be positive");
    Homography h;
    h.m[0][0] = s;
    h.m[1][1] = s;
    h.m[2][0] = (s - 1.0) / 2.0;
    h.m[2][1] = (s - 1.0) / 2.0;
    return h;
}

HomographyFit estimate_homography(const std::vector<std::array<double, 4>>& pairs) {
    if (pairs.size() < 3)
        throw InvariantError("estimate_homography: need at least 3 point pairs");
    // normal equations for A * H = B with rows (x1, y1, 1) and (x2, y2, 1)
    std::array<std::array<double, 3>, 3> ata{};
    std::array<std::array<double, 3>, 3> atb{};
    for (const auto& p : pairs) {
        const std::array<double, 3> a = {p[0], p[1], 1.0};
        const std::array<double, 3> b = {p[2], p[3], 1.0};
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                ata[r][c] += a[r] * a[c];
                atb[r][c] += a[r] * b[c];
            }
    }
    HomographyFit fit;
    for (int col = 0; col < 3; ++col) {
        std::array<double, 3> x = {atb[0][col], atb[1][col], atb[2][col]};
        if (!solve3(ata, x))
            throw InvariantError("estimate_homography: degenerate (collinear) configuration");
        for (int r = 0; r < 3; ++r) fit.h.m[r][col] = x[r];
    }
    if (std::abs(fit.h.m[2][2]) < 1e-12)
        throw InvariantError("estimate_homography: unnormalizable solution");
    const double s = fit.h.m[2][2];
    for (auto& row : fit.h.m)
        for (auto& v : row) v /= s;

    double ss = 0.0;
    for (const auto& p : pairs) {
        const auto q = fit.h.apply(p[0], p[1]);
        ss += (q[0] - p[2]) * (q[0] - p[2]) + (q[1] - p[3]) * (q[1] - p[3]);
    }
    fit.rms_residual = std::sqrt(ss / pairs.size());
    return fit;
}

// ------------------------------------------------------------- detect ---

std::vector<Keypoint> detect(const ScaleSpace& space, const DetectParams& params) {
    const bool bayer = space.domain == ScaleSpaceDomain::BayerSuperPixel;
    // On a mosaic the nearest homogeneous samples sit two pixels apart, so
    // comparisons and derivatives step across the 5x5 window on the
    // same-channel sub-lattice; mixing channels would reintroduce the
    // chroma offsets the construction avoids. A blob seen by several
    // channel planes yields near-coincident candidates, consolidated
    // afterwards to the strongest response per 5x5 neighborhood.
    const int st = bayer ? 2 : 1;    // comparison and derivative lattice step
    const int margin = 2 * st;
    const int s = space.scales;
    std::vector<Keypoint> out;

    for (int o = 0; o < static_cast<int>(space.octaves.size()); ++o) {
        const auto& oct = space.octaves[o];
        if (static_cast<int>(oct.dog.size()) < 3)
            throw InvariantError("detect: octave needs at least 3 DoG levels");
        const int w = oct.width, h = oct.height;
        const double coord_scale = std::pow(2.0, o);
        for (int lvl = 1; lvl <= s; ++lvl) {
            const auto& dm = oct.dog[lvl - 1];
            const auto& d0 = oct.dog[lvl];
            const auto& dp = oct.dog[lvl + 1];
            for (int r = margin; r < h - margin; ++r) {
                for (int c = margin; c < w - margin; ++c) {
                    // the DoG amplitude of a feature splits across the s
                    // layers of an octave, so the contrast gate applies
                    // per layer
                    const float v = d0.at(0, r, c);
                    if (std::abs(v) < 0.5f * static_cast<float>(params.contrast_threshold / s))
                        continue;
                    bool is_max = v > 0, is_min = v < 0;
                    for (int dr = -st; dr <= st && (is_max || is_min); dr += st) {
                        for (int dc = -st; dc <= st; dc += st) {
                            const float a = dm.at(0, r + dr, c + dc);
                            const float b = d0.at(0, r + dr, c + dc);
                            const float e = dp.at(0, r + dr, c + dc);
                            if (is_max &&
                                (v <= a || v <= e || (v <= b && (dr || dc)))) is_max = false;
                            if (is_min &&
                                (v >= a || v >= e || (v >= b && (dr || dc)))) is_min = false;
                            if (!is_max && !is_min) break;
                        }
                    }
                    if (!is_max && !is_min) continue;

                    // quadratic refinement on the same-channel sub-lattice
                    int rr = r, cc = c, ll = lvl;
                    std::array<double, 3> delta{};
                    std::array<double, 3> grad{};
                    bool converged = false;
                    for (int iter = 0; iter < 5; ++iter) {
                        const auto& lm = oct.dog[ll - 1];
                        const auto& l0 = oct.dog[ll];
                        const auto& lp = oct.dog[ll + 1];
                        const double cv = l0.at(0, rr, cc);
                        const double dx = (l0.at(0, rr, cc + st) - l0.at(0, rr, cc - st)) / (2.0 * st);
                        const double dy = (l0.at(0, rr + st, cc) - l0.at(0, rr - st, cc)) / (2.0 * st);
                        const double ds = (lp.at(0, rr, cc) - lm.at(0, rr, cc)) / 2.0;
                        const double dxx = (l0.at(0, rr, cc + st) + l0.at(0, rr, cc - st) - 2.0 * cv) / (st * st);
                        const double dyy = (l0.at(0, rr + st, cc) + l0.at(0, rr - st, cc) - 2.0 * cv) / (st * st);
                        const double dss = lp.at(0, rr, cc) + lm.at(0, rr, cc) - 2.0 * cv;
                        const double dxy = (l0.at(0, rr + st, cc + st) - l0.at(0, rr + st, cc - st) -
                                            l0.at(0, rr - st, cc + st) + l0.at(0, rr - st, cc - st)) /
                                           (4.0 * st * st);
                        const double dxs = (lp.at(0, rr, cc + st) - lp.at(0, rr, cc - st) -
                                            lm.at(0, rr, cc + st) + lm.at(0, rr, cc - st)) /
                                           (4.0 * st);
                        const double dys = (lp.at(0, rr + st, cc) - lp.at(0, rr - st, cc) -
                                            lm.at(0, rr + st, cc) + lm.at(0, rr - st, cc)) /
                                           (4.0 * st);
                        grad = {dx, dy, ds};
                        std::array<double, 3> x = {-dx, -dy, -ds};
                        std::array<std::array<double, 3>, 3> hess = {
                            {{dxx, dxy, dxs}, {dxy, dyy, dys}, {dxs, dys, dss}}};
                        if (!solve3(hess, x)) break;
                        delta = x;
                        if (std::abs(delta[0]) <= 0.5 * st && std::abs(delta[1]) <= 0.5 * st &&
                            std::abs(delta[2]) <= 0.5) {
                            converged = true;
                            break;
                        }
                        cc += delta[0] > 0.5 * st ? st : (delta[0] < -0.5 * st ? -st : 0);
                        rr += delta[1] > 0.5 * st ? st : (delta[1] < -0.5 * st ? -st : 0);
                        ll += delta[2] > 0.5 ? 1 : (delta[2] < -0.5 ? -1 : 0);
                        if (ll < 1 || ll > s || rr < margin || rr >= h - margin ||
                            cc < margin || cc >= w - margin)
                            break;
                    }
                    if (!converged) continue;

                    const auto& l0 = oct.dog[ll];
                    const double cv = l0.at(0, rr, cc);
                    const double refined =
                        cv + 0.5 * (grad[0] * delta[0] + grad[1] * delta[1] + grad[2] * delta[2]);
                    if (std::abs(refined) < params.contrast_threshold / s) continue;

                    // edge response: principal curvature ratio of the spatial Hessian
                    const double dxx = (l0.at(0, rr, cc + st) + l0.at(0, rr, cc - st) - 2.0 * cv) / (st * st);
                    const double dyy = (l0.at(0, rr + st, cc) + l0.at(0, rr - st, cc) - 2.0 * cv) / (st * st);
                    const double dxy = (l0.at(0, rr + st, cc + st) - l0.at(0, rr + st, cc - st) -
                                        l0.at(0, rr - st, cc + st) + l0.at(0, rr - st, cc - st)) /
                                       (4.0 * st * st);
                    const double tr = dxx + dyy;
                    const double det = dxx * dyy - dxy * dxy;
                    const double er = params.edge_ratio;
                    if (det <= 0.0 || tr * tr * er >= (er + 1.0) * (er + 1.0) * det) continue;

                    Keypoint kp;
                    kp.x = (cc + delta[0]) * coord_scale;
                    kp.y = (rr + delta[1]) * coord_scale;
                    kp.octave = o;
                    kp.level = ll;
                    kp.scale = space.absolute_sigma(o, ll) *
                               std::pow(2.0, delta[2] / space.scales);
                    kp.response = refined;
                    out.push_back(kp);
                }
            }
        }
    }
    if (bayer) {
        // keep the strongest candidate per 5x5 neighborhood and level:
        // the same blob surfaces once per channel plane
        std::sort(out.begin(), out.end(), [](const Keypoint& a, const Keypoint& b) {
            return std::abs(a.response) > std::abs(b.response);
        });
        std::vector<Keypoint> kept;
        for (const Keypoint& k : out) {
            const double radius = 2.5 * std::pow(2.0, k.octave);
            bool dominated = false;
            for (const Keypoint& q : kept) {
                if (q.octave != k.octave || q.level != k.level) continue;
                const double dx = q.x - k.x, dy = q.y - k.y;
                if (dx * dx + dy * dy < radius * radius) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated) kept.push_back(k);
        }
        out = std::move(kept);
    }
    return out;
}

// ------------------------------------------------------ orient/describe ---

std::vector<Keypoint> orient(const Keypoint& kp, const ScaleSpace& space) {
    const auto& oct = space.octaves[kp.octave];
    const int lvl = std::min(std::max(kp.level, 0), static_cast<int>(oct.gauss.size()) - 1);
    const PlanarImage& img = oct.gauss[lvl];
    const double inv = std::pow(2.0, -kp.octave);
    const double lx = kp.x * inv, ly = kp.y * inv;
    const double sigma_rel = kp.scale * inv;  // in-level pixel units
    const double sigma0 = 1.5 * sigma_rel;
    const int radius = std::max(1, static_cast<int>(std::lround(3.0 * sigma0)));
    const int cx = static_cast<int>(std::lround(lx));
    const int cy = static_cast<int>(std::lround(ly));
    if (cx - radius < 0 || cx + radius >= img.width || cy - radius < 0 ||
        cy + radius >= img.height)
        return {};

    constexpr int kBins = 36;
    std::array<double, kBins> hist{};
    const double denom = 2.0 * sigma0 * sigma0;
    for (int dy = -radius; dy <= radius; ++dy) {
        for (int dx = -radius; dx <= radius; ++dx) {
            if (dx * dx + dy * dy > radius * radius) continue;
            const auto g = level_gradient(img, cy + dy, cx + dx);
            const double w = std::exp(-(dx * dx + dy * dy) / denom);
            int bin = static_cast<int>(std::floor(g.ang / 360.0 * kBins)) % kBins;
            hist[bin] += w * g.mag;
        }
    }
    // two passes of circular [1 1 1]/3 smoothing
    for (int pass = 0; pass < 2; ++pass) {
        std::array<double, kBins> sm{};
        for (int i = 0; i < kBins; ++i)
            sm[i] = (hist[(i + kBins - 1) % kBins] + hist[i] + hist[(i + 1) % kBins]) / 3.0;
        hist = sm;
    }
    const double peak = *std::max_element(hist.begin(), hist.end());
    if (peak <= 0.0) return {};

    std::vector<Keypoint> result;
    for (int i = 0; i < kBins; ++i) {
        const double l = hist[(i + kBins - 1) % kBins];
        const double r = hist[(i + 1) % kBins];
        if (hist[i] < l || hist[i] < r || hist[i] < 0.8 * peak) continue;
        // parabolic peak interpolation
        const double denom2 = l - 2.0 * hist[i] + r;
        const double off = denom2 != 0.0 ? 0.5 * (l - r) / denom2 : 0.0;
        Keypoint k = kp;
        k.orientation = deg_wrap360((i + 0.5 + off) * (360.0 / kBins));
        result.push_back(k);
    }
    return result;
}

std::optional<SiftDescriptor> describe(const Keypoint& kp, const ScaleSpace& space) {
    constexpr int kD = 4;      // spatial cells per side
    constexpr int kOri = 8;    // orientation bins
    const auto& oct = space.octaves[kp.octave];
    const int lvl = std::min(std::max(kp.level, 0), static_cast<int>(oct.gauss.size()) - 1);
    const PlanarImage& img = oct.gauss[lvl];
    const double inv = std::pow(2.0, -kp.octave);
    const double lx = kp.x * inv, ly = kp.y * inv;
    const double sigma_rel = kp.scale * inv;
    const double hist_width = 3.0 * sigma_rel;
    const int radius =
        static_cast<int>(std::lround(hist_width * (kD + 1) * std::sqrt(2.0) / 2.0));
    const int cx = static_cast<int>(std::lround(lx));
    const int cy = static_cast<int>(std::lround(ly));
    if (cx - radius < 0 || cx + radius >= img.width || cy - radius < 0 ||
        cy + radius >= img.height)
        return std::nullopt;

    const double theta = kp.orientation * kPi / 180.0;
    const double ct = std::cos(theta), stn = std::sin(theta);
    // votes indexed (row_bin, col_bin, ori_bin) with one cell of padding
    std::array<double, (kD + 2) * (kD + 2) * kOri> votes{};
    auto vote_at = [&](int rb, int cb, int ob) -> double& {
        return votes[(static_cast<std::size_t>(rb) * (kD + 2) + cb) * kOri + ob];
    };

    for (int dy = -radius; dy <= radius; ++dy) {
        for (int dx = -radius; dx <= radius; ++dx) {
            // rotate offsets into the keypoint frame
            const double rx = (dx * ct + dy * stn) / hist_width;
            const double ry = (-dx * stn + dy * ct) / hist_width;
            const double rbin = ry + kD / 2.0 - 0.5;
            const double cbin = rx + kD / 2.0 - 0.5;
            if (rbin <= -1.0 || rbin >= kD || cbin <= -1.0 || cbin >= kD) continue;
            const auto g = level_gradient(img, cy + dy, cx + dx);
            if (g.mag == 0.0) continue;
            const double w = std::exp(-(rx * rx + ry * ry) / (0.5 * kD * kD));
            const double obin = deg_wrap360(g.ang - kp.orientation) / (360.0 / kOri);

            const int r0 = static_cast<int>(std::floor(rbin));
            const int c0 = static_cast<int>(std::floor(cbin));
            const int o0 = static_cast<int>(std::floor(obin)) % kOri;
            const double fr = rbin - r0, fc = cbin - c0, fo = obin - std::floor(obin);
            const double base = g.mag * w;
            for (int ir = 0; ir < 2; ++ir)
                for (int ic = 0; ic < 2; ++ic)
                    for (int io = 0; io < 2; ++io) {
                        const int rb = r0 + ir + 1, cb = c0 + ic + 1;
                        if (rb < 1 || rb > kD || cb < 1 || cb > kD) continue;
                        const double wv = base * (ir ? fr : 1.0 - fr) * (ic ? fc : 1.0 - fc) *
                                          (io ? fo : 1.0 - fo);
                        vote_at(rb, cb, (o0 + io) % kOri) += wv;
                    }
        }
    }

    SiftDescriptor desc;
    desc.keypoint = kp;
    std::array<double, 128> raw{};
    std::size_t k = 0;
    for (int rb = 1; rb <= kD; ++rb)
        for (int cb = 1; cb <= kD; ++cb)
            for (int ob = 0; ob < kOri; ++ob) raw[k++] = vote_at(rb, cb, ob);

    double ss = std::inner_product(raw.begin(), raw.end(), raw.begin(), 0.0);
    if (ss <= 0.0) return std::nullopt;
    double norm = std::sqrt(ss);
    for (auto& v : raw) v = std::min(v / norm, 0.2);
    ss = std::inner_product(raw.begin(), raw.end(), raw.begin(), 0.0);
    norm = std::sqrt(ss);
    for (std::size_t i = 0; i < raw.size(); ++i)
        desc.values[i] = static_cast<float>(raw[i] / norm);
    return desc;
}

std::vector<SiftDescriptor> extract(const ScaleSpace& space, const DetectParams& params) {
    std::vector<SiftDescriptor> out;
    for (const Keypoint& kp : detect(space, params))
        for (const Keypoint& ok : orient(kp, space))
            if (auto d = describe(ok, space)) out.push_back(std::move(*d));
    return out;
}

// -------------------------------------------------- match/repeatability ---

MatchSet match(const std::vector<SiftDescriptor>& a, const std::vector<SiftDescriptor>& b,
               double lowe_ratio) {
    MatchSet ms;
    ms.n1 = static_cast<int>(a.size());
    ms.n2 = static_cast<int>(b.size());
    if (a.empty() || b.empty()) return ms;

    auto dist2 = [](const SiftDescriptor& x, const SiftDescriptor& y) {
        double s = 0.0;
        for (int i = 0; i < 128; ++i) {
            const double d = static_cast<double>(x.values[i]) - y.values[i];
            s += d * d;
        }
        return s;
    };

    std::vector<int> nn_ab(a.size(), -1);
    std::vector<double> nn_ab_d(a.size(), 0.0);
    std::vector<int> nn_ba(b.size(), -1);
    std::vector<double> nn_ba_d(b.size(), std::numeric_limits<double>::infinity());

    for (std::size_t i = 0; i < a.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        double second = best;
        int best_j = -1;
        for (std::size_t j = 0; j < b.size(); ++j) {
            const double d = dist2(a[i], b[j]);
            if (d < best) {
                second = best;
                best = d;
                best_j = static_cast<int>(j);
            } else if (d < second) {
                second = d;
            }
            if (d < nn_ba_d[j]) {
                nn_ba_d[j] = d;
                nn_ba[j] = static_cast<int>(i);
            }
        }
        // distance-ratio test on squared distances
        if (b.size() < 2 || best < lowe_ratio * lowe_ratio * second) {
            nn_ab[i] = best_j;
            nn_ab_d[i] = best;
        }
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        const int j = nn_ab[i];
        if (j >= 0 && nn_ba[j] == static_cast<int>(i))
            ms.pairs.push_back({static_cast<int>(i), j, std::sqrt(nn_ab_d[i])});
    }
    return ms;
}

double repeatability(const std::vector<Keypoint>& kps1, const std::vector<Keypoint>& kps2,
                     const Homography& h, double t, const Frame& frame1, const Frame& frame2) {
    if (kps1.empty() || kps2.empty()) return 0.0;
    const Homography hinv = h.inverse();

    // restrict both sets to the region visible in both frames
    std::vector<std::array<double, 2>> pos1;
    for (const auto& k : kps1) {
        const auto fwd = h.apply(k.x, k.y);
        if (frame2.contains(fwd[0], fwd[1])) pos1.push_back({k.x, k.y});
    }
    std::vector<std::array<double, 2>> proj2;
    for (const auto& k : kps2) {
        const auto back = hinv.apply(k.x, k.y);
        if (frame1.contains(back[0], back[1])) proj2.push_back(back);
    }
    if (pos1.empty() || proj2.empty()) return 0.0;

    // bucket the projected set on a grid of cell size t so candidate
    // gathering stays near-linear for dense keypoint populations
    struct Cand {
        double d;
        int i, j;
    };
    std::unordered_map<std::int64_t, std::vector<int>> grid;
    auto cell_key = [&](double x, double y) {
        const auto cx = static_cast<std::int64_t>(std::floor(x / t));
        const auto cy = static_cast<std::int64_t>(std::floor(y / t));
        return (cx << 32) ^ (cy & 0xffffffffll);
    };
    for (std::size_t j = 0; j < proj2.size(); ++j)
        grid[cell_key(proj2[j][0], proj2[j][1])].push_back(static_cast<int>(j));
    std::vector<Cand> cands;
    for (std::size_t i = 0; i < pos1.size(); ++i) {
        for (int gy = -1; gy <= 1; ++gy)
            for (int gx = -1; gx <= 1; ++gx) {
                const auto it = grid.find(cell_key(pos1[i][0] + gx * t, pos1[i][1] + gy * t));
                if (it == grid.end()) continue;
                for (int j : it->second) {
                    const double dx = pos1[i][0] - proj2[j][0];
                    const double dy = pos1[i][1] - proj2[j][1];
                    const double d = std::sqrt(dx * dx + dy * dy);
                    if (d < t) cands.push_back({d, static_cast<int>(i), j});
                }
            }
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        if (a.d != b.d) return a.d < b.d;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    });
    std::vector<char> used1(pos1.size(), 0), used2(proj2.size(), 0);
    int m = 0;
    for (const auto& c : cands) {
        if (used1[c.i] || used2[c.j]) continue;
        used1[c.i] = used2[c.j] = 1;
        ++m;
    }
    return static_cast<double>(m) / std::min(pos1.size(), proj2.size());
}

}  // namespace bayergrad
