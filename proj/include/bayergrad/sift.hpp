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

#include <array>
#include <optional>
#include <vector>

#include "bayergrad/multiscale.hpp"
#include "bayergrad/types.hpp"

namespace bayergrad {

/// A located, scale-tagged, oriented feature. Coordinates are sub-pixel in
/// full-resolution pixel units for both the gray and the Bayer domain, so
/// geometric verification can compare the two directly.
struct Keypoint {
    double x = 0.0;
    double y = 0.0;
    int octave = 0;
    int level = 0;          // detection DoG level inside the octave
    double scale = 0.0;     // absolute sigma in input-pixel units
    double orientation = 0.0;  // degrees in [0,360)
    double response = 0.0;  // refined DoG value at the extremum
};

struct SiftDescriptor {
    Keypoint keypoint;
    std::array<float, 128> values{};
};

struct MatchPair {
    int index1 = 0;
    int index2 = 0;
    double distance = 0.0;
};

/// One-to-one matches (no index repeats on either side).
struct MatchSet {
    std::vector<MatchPair> pairs;
    int n1 = 0;
    int n2 = 0;
};

/// Row-vector convention: (x2, y2, 1) = (x1, y1, 1) * H, bottom-right
/// entry normalized to 1.
struct Homography {
    std::array<std::array<double, 3>, 3> m{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};

    std::array<double, 2> apply(double x, double y) const;
    Homography inverse() const;
    static Homography identity() { return {}; }
};

/// Rotation by theta degrees about (cx, cy); theta=90 maps a point east of
/// the center to a point north of it ((1,0) -> (0,-1) about the origin).
Homography rotation_homography(double theta_deg, double cx = 0.0, double cy = 0.0);

/// Pixel-center-aligned uniform scaling: x2 = s*x1 + (s-1)/2.
Homography scale_homography(double s);

struct HomographyFit {
    Homography h;
    double rms_residual = 0.0;
};

/// Least-squares fit of (x1,y1,1) * H = (x2,y2,1) over N >= 3 pairs via
/// the normal equations. Throws on collinear/degenerate configurations.
/// Pairs are (x1, y1, x2, y2).
HomographyFit estimate_homography(const std::vector<std::array<double, 4>>& pairs);

struct DetectParams {
    double contrast_threshold = 0.03;  // on refined |DoG|, [0,1] image range
    double edge_ratio = 10.0;          // principal curvature ratio limit
};

/// Scale-space extrema with quadratic sub-pixel refinement and contrast /
/// edge rejection. Gray pyramids compare against the 3x3x3 neighborhood;
/// Bayer pyramids widen the in-plane window to 5x5, comparing and
/// refining on the same-channel sub-lattice inside it (the nearest
/// homogeneous mosaic samples are two pixels apart).
std::vector<Keypoint> detect(const ScaleSpace& space, const DetectParams& params = {});

/// Orientation assignment: 36-bin gradient histogram over a disc of radius
/// 3*sigma0 (sigma0 = 1.5 * keypoint scale), Gaussian-weighted; the
/// dominant peak plus any peak above 80% of it each yield a keypoint copy.
/// Returns an empty list when the region falls outside the image.
std::vector<Keypoint> orient(const Keypoint& kp, const ScaleSpace& space);

/// 4x4 spatial cells x 8 orientation bins over the rotated, scale-
/// normalized neighborhood; trilinear voting, L2-normalize, clip at 0.2,
/// renormalize. Empty for flat patches or out-of-image regions.
std::optional<SiftDescriptor> describe(const Keypoint& kp, const ScaleSpace& space);

/// detect + orient + describe.
std::vector<SiftDescriptor> extract(const ScaleSpace& space, const DetectParams& params = {});

/// Mutual nearest neighbors passing the distance-ratio test.
MatchSet match(const std::vector<SiftDescriptor>& a, const std::vector<SiftDescriptor>& b,
               double lowe_ratio = 0.8);

/// Fraction of keypoints re-found under a known transform: project kps2
/// through H^-1, greedily pair nearest-first within distance t, and return
/// matches / min(n1, n2). Zero when either set is empty.
///
/// When frame sizes are given, only keypoints whose counterpart location
/// lies inside the other frame are counted (the common scene region), so
/// content rotated or scaled out of view does not score as a miss.
struct Frame {
    int width = 0;
    int height = 0;
    bool contains(double x, double y) const {
        return width <= 0 || height <= 0 ||
               (x >= 0.0 && y >= 0.0 && x <= width - 1.0 && y <= height - 1.0);
    }
};
double repeatability(const std::vector<Keypoint>& kps1, const std::vector<Keypoint>& kps2,
                     const Homography& h, double t = 3.0, const Frame& frame1 = {},
                     const Frame& frame2 = {});

}  // namespace bayergrad
