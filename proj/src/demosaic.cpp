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

#include "bayergrad/demosaic.hpp"

#include <algorithm>
#include <cmath>

#include "bayergrad/gradient.hpp"
#include "bayergrad/image_ops.hpp"
#include "bayergrad/quality.hpp"

namespace bayergrad {

namespace {

float clamp01(double v) { return static_cast<float>(std::min(std::max(v, 0.0), 1.0)); }

struct Mosaic {
    const BayerImage& img;
    int w, h;
    explicit Mosaic(const BayerImage& b) : img(b), w(b.width), h(b.height) {}
    // Mirror extension in full-image coordinates; keeps coordinate parity
    // (and therefore the CFA phase) for even dimensions.
    double at(int r, int c) const { return img.at(reflect101(r, h), reflect101(c, w)); }
    Channel ch(int r, int c) const {
        return channel_at(img.pattern, reflect101(r, h), reflect101(c, w));
    }
};

PlanarImage demosaic_nearest(const BayerImage& bay) {
    const TileLayout t = tile_layout(bay.pattern);
    PlanarImage out(bay.width, bay.height, 3);
    for (int r = 0; r < bay.height; ++r) {
        for (int c = 0; c < bay.width; ++c) {
            // floor to the containing tile, then the channel offset
            out.at(0, r, c) = bay.at((r & ~1) + t.r_row, (c & ~1) + t.r_col);
            out.at(2, r, c) = bay.at((r & ~1) + t.b_row, (c & ~1) + t.b_col);
            if (bay.channel(r, c) == Channel::G) {
                out.at(1, r, c) = bay.at(r, c);
            } else {
                // horizontal neighbors of R/B sites are always green
                out.at(1, r, c) = bay.at(r, c + 1 < bay.width ? c + 1 : c - 1);
            }
        }
    }
    return out;
}

PlanarImage demosaic_bilinear(const BayerImage& bay) {
    const Mosaic m(bay);
    PlanarImage out(bay.width, bay.height, 3);
    for (int r = 0; r < bay.height; ++r) {
        for (int c = 0; c < bay.width; ++c) {
            const double v = bay.at(r, c);
            const double cross = (m.at(r - 1, c) + m.at(r + 1, c) + m.at(r, c - 1) + m.at(r, c + 1)) / 4.0;
            const double diag = (m.at(r - 1, c - 1) + m.at(r - 1, c + 1) + m.at(r + 1, c - 1) + m.at(r + 1, c + 1)) / 4.0;
            const double horiz = (m.at(r, c - 1) + m.at(r, c + 1)) / 2.0;
            const double vert = (m.at(r - 1, c) + m.at(r + 1, c)) / 2.0;
            double R, G, B;
            switch (bay.channel(r, c)) {
                case Channel::R: R = v; G = cross; B = diag; break;
                case Channel::B: B = v; G = cross; R = diag; break;
                default:
                    G = v;
                    if (m.ch(r, c + 1) == Channel::R || m.ch(r, c - 1) == Channel::R) {
                        R = horiz; B = vert;
                    } else {
                        R = vert; B = horiz;
                    }
                    break;
            }
            out.at(0, r, c) = clamp01(R);
            out.at(1, r, c) = clamp01(G);
            out.at(2, r, c) = clamp01(B);
        }
    }
    return out;
}

// ---- Catmull-Rom plane interpolation -----------------------------------
//
// A chroma plane lives on the lattice (row_off + 2i, col_off + 2j). Missing
// full-resolution positions are filled with 4-tap midpoint weights
// (-1, 9, 9, -1)/16, rows first, then columns from the completed rows.

double cr_mid(double a, double b, double c, double d) {
    return (-a + 9.0 * b + 9.0 * c - d) / 16.0;
}

std::vector<double> expand_plane_cr(const BayerImage& bay, int row_off, int col_off) {
    const int w = bay.width, h = bay.height;
    const int pw = w / 2, ph = h / 2;
    auto lat = [&](int lr, int lc) -> double {
        return bay.at(row_off + 2 * reflect101(lr, ph), col_off + 2 * reflect101(lc, pw));
    };
    std::vector<double> full(static_cast<std::size_t>(w) * h, 0.0);
    auto fu = [&](int r, int c) -> double& { return full[static_cast<std::size_t>(r) * w + c]; };

    // rows containing samples
    for (int lr = 0; lr < ph; ++lr) {
        const int r = row_off + 2 * lr;
        for (int lc = 0; lc < pw; ++lc) fu(r, col_off + 2 * lc) = lat(lr, lc);
        for (int c = 1 - col_off; c < w; c += 2) {
            const int k = (c - col_off - 1) / 2;  // midpoint between lattice k and k+1
            fu(r, c) = cr_mid(lat(lr, k - 1), lat(lr, k), lat(lr, k + 1), lat(lr, k + 2));
        }
        if (col_off == 1) {
            const int k = -1;
            fu(r, 0) = cr_mid(lat(lr, k - 1), lat(lr, k), lat(lr, k + 1), lat(lr, k + 2));
        }
    }
    // remaining rows from completed rows
    auto row_at = [&](int lr, int c) -> double {
        return full[static_cast<std::size_t>(row_off + 2 * reflect101(lr, ph)) * w + c];
    };
    for (int r = 1 - row_off; r < h; r += 2) {
        const int k = (r - row_off - 1) / 2;
        for (int c = 0; c < w; ++c)
            fu(r, c) = cr_mid(row_at(k - 1, c), row_at(k, c), row_at(k + 1, c), row_at(k + 2, c));
    }
    if (row_off == 1) {
        const int k = -1;
        for (int c = 0; c < w; ++c)
            fu(0, c) = cr_mid(row_at(k - 1, c), row_at(k, c), row_at(k + 1, c), row_at(k + 2, c));
    }
    return full;
}

PlanarImage demosaic_bicubic(const BayerImage& bay) {
    const Mosaic m(bay);
    const TileLayout t = tile_layout(bay.pattern);
    const auto rfull = expand_plane_cr(bay, t.r_row, t.r_col);
    const auto bfull = expand_plane_cr(bay, t.b_row, t.b_col);
    PlanarImage out(bay.width, bay.height, 3);
    for (int r = 0; r < bay.height; ++r) {
        for (int c = 0; c < bay.width; ++c) {
            const std::size_t idx = static_cast<std::size_t>(r) * bay.width + c;
            double G;
            if (bay.channel(r, c) == Channel::G) {
                G = bay.at(r, c);
            } else {
                const double gh = cr_mid(m.at(r, c - 3), m.at(r, c - 1), m.at(r, c + 1), m.at(r, c + 3));
                const double gv = cr_mid(m.at(r - 3, c), m.at(r - 1, c), m.at(r + 1, c), m.at(r + 3, c));
                G = (gh + gv) / 2.0;
            }
            out.at(0, r, c) = clamp01(rfull[idx]);
            out.at(1, r, c) = clamp01(G);
            out.at(2, r, c) = clamp01(bfull[idx]);
        }
    }
    return out;
}

// ---- Hamilton-Adams (adaptive color plane) ------------------------------

PlanarImage demosaic_hamilton_adams(const BayerImage& bay) {
    const Mosaic m(bay);
    const int w = bay.width, h = bay.height;

    // green first: gradient-directed with same-channel Laplacian correction
    std::vector<double> G(static_cast<std::size_t>(w) * h);
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            const std::size_t idx = static_cast<std::size_t>(r) * w + c;
            const double v = bay.at(r, c);
            if (bay.channel(r, c) == Channel::G) {
                G[idx] = v;
                continue;
            }
            const double dh = std::abs(m.at(r, c - 1) - m.at(r, c + 1)) +
                              std::abs(2.0 * v - m.at(r, c - 2) - m.at(r, c + 2));
            const double dv = std::abs(m.at(r - 1, c) - m.at(r + 1, c)) +
                              std::abs(2.0 * v - m.at(r - 2, c) - m.at(r + 2, c));
            const double gh = (m.at(r, c - 1) + m.at(r, c + 1)) / 2.0 +
                              (2.0 * v - m.at(r, c - 2) - m.at(r, c + 2)) / 4.0;
            const double gv = (m.at(r - 1, c) + m.at(r + 1, c)) / 2.0 +
                              (2.0 * v - m.at(r - 2, c) - m.at(r + 2, c)) / 4.0;
            G[idx] = dh < dv ? gh : (dv < dh ? gv : (gh + gv) / 2.0);
        }
    }

    // chroma through color differences against interpolated green;
    // diff reads X - G at an X site (mirrored coordinates)
    auto diff = [&](int r, int c) -> double {
        const int rr = reflect101(r, h), cc = reflect101(c, w);
        return bay.at(rr, cc) - G[static_cast<std::size_t>(rr) * w + cc];
    };
    PlanarImage out(w, h, 3);
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            const std::size_t idx = static_cast<std::size_t>(r) * w + c;
            const double v = bay.at(r, c);
            const Channel here = bay.channel(r, c);
            double R, B;
            if (here == Channel::R) {
                R = v;
                B = G[idx] + (diff(r - 1, c - 1) + diff(r - 1, c + 1) +
                              diff(r + 1, c - 1) + diff(r + 1, c + 1)) / 4.0;
            } else if (here == Channel::B) {
                B = v;
                R = G[idx] + (diff(r - 1, c - 1) + diff(r - 1, c + 1) +
                              diff(r + 1, c - 1) + diff(r + 1, c + 1)) / 4.0;
            } else {
                const bool r_horizontal = m.ch(r, c + 1) == Channel::R || m.ch(r, c - 1) == Channel::R;
                if (r_horizontal) {
                    R = G[idx] + (diff(r, c - 1) + diff(r, c + 1)) / 2.0;
                    B = G[idx] + (diff(r - 1, c) + diff(r + 1, c)) / 2.0;
                } else {
                    R = G[idx] + (diff(r - 1, c) + diff(r + 1, c)) / 2.0;
                    B = G[idx] + (diff(r, c - 1) + diff(r, c + 1)) / 2.0;
                }
            }
            out.at(0, r, c) = clamp01(R);
            out.at(1, r, c) = clamp01(here == Channel::G ? v : G[idx]);
            out.at(2, r, c) = clamp01(B);
        }
    }
    return out;
}

// ---- Malvar-He-Cutler (hybrid, fixed 5x5 filters) ------------------------

PlanarImage demosaic_malvar(const BayerImage& bay) {
    const Mosaic m(bay);
    PlanarImage out(bay.width, bay.height, 3);
    for (int r = 0; r < bay.height; ++r) {
        for (int c = 0; c < bay.width; ++c) {
            const double v = bay.at(r, c);
            const double cross1 = m.at(r, c - 1) + m.at(r, c + 1) + m.at(r - 1, c) + m.at(r + 1, c);
            const double cross2 = m.at(r, c - 2) + m.at(r, c + 2) + m.at(r - 2, c) + m.at(r + 2, c);
            const double diag = m.at(r - 1, c - 1) + m.at(r - 1, c + 1) + m.at(r + 1, c - 1) + m.at(r + 1, c + 1);
            const double hor2 = m.at(r, c - 2) + m.at(r, c + 2);
            const double ver2 = m.at(r - 2, c) + m.at(r + 2, c);
            const double hor1 = m.at(r, c - 1) + m.at(r, c + 1);
            const double ver1 = m.at(r - 1, c) + m.at(r + 1, c);

            const double g_at_rb = (4.0 * v + 2.0 * cross1 - cross2) / 8.0;
            const double x_row = (5.0 * v + 4.0 * hor1 - hor2 + 0.5 * ver2 - diag) / 8.0;
            const double x_col = (5.0 * v + 4.0 * ver1 - ver2 + 0.5 * hor2 - diag) / 8.0;
            const double x_opp = (6.0 * v + 2.0 * diag - 1.5 * cross2) / 8.0;

            double R, G, B;
            switch (bay.channel(r, c)) {
                case Channel::R: R = v; G = g_at_rb; B = x_opp; break;
                case Channel::B: B = v; G = g_at_rb; R = x_opp; break;
                default:
                    G = v;
                    if (m.ch(r, c + 1) == Channel::R || m.ch(r, c - 1) == Channel::R) {
                        R = x_row; B = x_col;
                    } else {
                        R = x_col; B = x_row;
                    }
                    break;
            }
            out.at(0, r, c) = clamp01(R);
            out.at(1, r, c) = clamp01(G);
            out.at(2, r, c) = clamp01(B);
        }
    }
    return out;
}

}  // namespace

const char* to_string(DemosaicMethod m) {
    switch (m) {
        case DemosaicMethod::NearestNeighbor: return "nearest";
        case DemosaicMethod::Bilinear: return "bilinear";
        case DemosaicMethod::Bicubic: return "bicubic";
        case DemosaicMethod::AdaptiveColorPlane: return "acpi";
        case DemosaicMethod::Hybrid: return "hybrid";
    }
    return "nearest";
}

DemosaicMethod parse_demosaic_method(const std::string& name) {
    if (name == "nearest") return DemosaicMethod::NearestNeighbor;
    if (name == "bilinear") return DemosaicMethod::Bilinear;
    if (name == "bicubic") return DemosaicMethod::Bicubic;
    if (name == "acpi") return DemosaicMethod::AdaptiveColorPlane;
    if (name == "hybrid") return DemosaicMethod::Hybrid;
    throw InvariantError("unknown demosaic method: " + name);
}

PlanarImage demosaic(const BayerImage& img, DemosaicMethod method) {
    if ((img.width & 1) || (img.height & 1))
        throw InvariantError("demosaic: even dimensions required");
    switch (method) {
        case DemosaicMethod::NearestNeighbor: return demosaic_nearest(img);
        case DemosaicMethod::Bilinear: return demosaic_bilinear(img);
        case DemosaicMethod::Bicubic: return demosaic_bicubic(img);
        case DemosaicMethod::AdaptiveColorPlane: return demosaic_hamilton_adams(img);
        case DemosaicMethod::Hybrid: return demosaic_malvar(img);
    }
    throw InvariantError("demosaic: unknown method");
}

DemosaicQuality demosaic_quality(const PlanarImage& truth, DemosaicMethod method,
                                 CfaPattern pattern) {
    const PlanarImage rec = demosaic(mosaic(truth, pattern), method);
    DemosaicQuality q;
    q.mssim = mssim(truth, rec);
    q.psnr_db = psnr(truth, rec);
    const PlanarImage mt = magnitude(gradients_gray(truth, GradientOperator::CentralDifference));
    const PlanarImage mr = magnitude(gradients_gray(rec, GradientOperator::CentralDifference));
    q.gmsd = gms(mt, mr).gmsd;
    return q;
}

}  // namespace bayergrad
