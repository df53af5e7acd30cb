#include <doctest.h>

#include <cmath>
#include <random>

#include "bayergrad/image_ops.hpp"
#include "bayergrad/sift.hpp"
#include "helpers.hpp"

using namespace bayergrad;

namespace {
PlanarImage gaussian_blob(int size, double cx, double cy, double sigma, float amp = 0.8f) {
    PlanarImage img(size, size, 1);
    for (int r = 0; r < size; ++r)
        for (int c = 0; c < size; ++c) {
            const double d2 = (c - cx) * (c - cx) + (r - cy) * (r - cy);
            img.at(0, r, c) = amp * static_cast<float>(std::exp(-d2 / (2 * sigma * sigma)));
        }
    return img;
}

// deterministic textured scene with corners at several scales
PlanarImage textured_scene(int w, int h, std::uint64_t seed) {
    auto gen = testutil::rng(seed);
    std::uniform_real_distribution<double> ux(8.0, w - 9.0);
    std::uniform_real_distribution<double> uy(8.0, h - 9.0);
    std::uniform_real_distribution<double> us(1.5, 6.0);
    std::uniform_real_distribution<float> ua(0.3f, 0.9f);
    PlanarImage img(w, h, 1, 0.1f);
    for (int i = 0; i < 60; ++i) {
        const double cx = ux(gen), cy = uy(gen), sg = us(gen);
        const float amp = ua(gen);
        const int sign = (i & 1) ? 1 : -1;
        for (int r = std::max(0, int(cy - 3 * sg)); r < std::min(h, int(cy + 3 * sg)); ++r)
            for (int c = std::max(0, int(cx - 3 * sg)); c < std::min(w, int(cx + 3 * sg)); ++c) {
                const double d2 = (c - cx) * (c - cx) + (r - cy) * (r - cy);
                img.at(0, r, c) += sign * amp * std::exp(-d2 / (2 * sg * sg));
            }
    }
    for (auto& v : img.samples) v = std::min(std::max(v, 0.0f), 1.0f);
    return img;
}
}  // namespace

TEST_CASE("homography apply and inverse") {
    const Homography h = rotation_homography(30.0, 4.0, 7.0);
    const auto p = h.apply(10.0, 3.0);
    const auto back = h.inverse().apply(p[0], p[1]);
    CHECK(back[0] == doctest::Approx(10.0).epsilon(1e-9));
    CHECK(back[1] == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(h.m[2][2] == doctest::Approx(1.0));
}

TEST_CASE("rotation homography conventions") {
    const Homography id = rotation_homography(0.0);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) CHECK(id.m[r][c] == doctest::Approx(r == c ? 1.0 : 0.0));

    // quarter turn about the origin maps (1,0) to (0,-1)
    const Homography q = rotation_homography(90.0);
    const auto p = q.apply(1.0, 0.0);
    CHECK(p[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(p[1] == doctest::Approx(-1.0).epsilon(1e-12));

    // the center is a fixed point
    const Homography c = rotation_homography(35.0, 12.0, 5.0);
    const auto fixed = c.apply(12.0, 5.0);
    CHECK(fixed[0] == doctest::Approx(12.0).epsilon(1e-9));
    CHECK(fixed[1] == doctest::Approx(5.0).epsilon(1e-9));
}

TEST_CASE("rotation homography agrees with the resampler on grid points") {
    // rotate a delta image and check the bright pixel lands where the
    // matrix says, within half a pixel of bilinear spread
    const int n = 33;
    PlanarImage img(n, n, 1);
    img.at(0, 10, 22) = 1.0f;
    const double theta = 20.0;
    const PlanarImage rot = rotate_planar(img, theta);
    const Homography h = rotation_homography(theta, (n - 1) / 2.0, (n - 1) / 2.0);
    const auto p = h.apply(22.0, 10.0);
    // centroid of the rotated impulse
    double sx = 0, sy = 0, sw = 0;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            sw += rot.at(0, r, c);
            sx += rot.at(0, r, c) * c;
            sy += rot.at(0, r, c) * r;
        }
    REQUIRE(sw > 0.0);
    CHECK(sx / sw == doctest::Approx(p[0]).epsilon(0.05));
    CHECK(sy / sw == doctest::Approx(p[1]).epsilon(0.05));
}

TEST_CASE("estimate_homography: exact fits") {
    SUBCASE("identity pairs") {
        std::vector<std::array<double, 4>> pairs;
        for (double x : {1.0, 5.0, 2.0, 8.0})
            for (double y : {2.0, 3.0, 9.0}) pairs.push_back({x, y, x, y});
        const HomographyFit fit = estimate_homography(pairs);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                CHECK(fit.h.m[r][c] == doctest::Approx(r == c ? 1.0 : 0.0).epsilon(1e-9));
        CHECK(fit.rms_residual == doctest::Approx(0.0).epsilon(1e-9));
    }
    SUBCASE("known rotation recovered to 1e-6") {
        const Homography h = rotation_homography(20.0, 50.0, 40.0);
        std::vector<std::array<double, 4>> pairs;
        for (double x : {3.0, 20.0, 77.0, 10.0, 95.0})
            for (double y : {5.0, 33.0, 61.0, 88.0}) {
                const auto p = h.apply(x, y);
                pairs.push_back({x, y, p[0], p[1]});
            }
        const HomographyFit fit = estimate_homography(pairs);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                CHECK(fit.h.m[r][c] == doctest::Approx(h.m[r][c]).epsilon(1e-6));
    }
    SUBCASE("collinear points are rejected") {
        std::vector<std::array<double, 4>> pairs = {
            {0, 0, 0, 0}, {1, 1, 1, 1}, {2, 2, 2, 2}, {3, 3, 3, 3}};
        CHECK_THROWS_AS(estimate_homography(pairs), InvariantError);
    }
}

TEST_CASE("noisy rotation recovery: angle error under a degree") {
    const double theta = 20.0;
    const Homography h = rotation_homography(theta, 0.0, 0.0);
    std::mt19937_64 gen(99);
    std::normal_distribution<double> noise(0.0, 0.5);
    std::uniform_real_distribution<double> coord(-100.0, 100.0);
    std::vector<std::array<double, 4>> pairs;
    for (int i = 0; i < 20; ++i) {
        const double x = coord(gen), y = coord(gen);
        const auto p = h.apply(x, y);
        pairs.push_back({x, y, p[0] + noise(gen), p[1] + noise(gen)});
    }
    const HomographyFit fit = estimate_homography(pairs);
    const double angle = std::atan2(fit.h.m[1][0], fit.h.m[0][0]) * 180.0 / 3.14159265358979;
    CHECK(std::abs(angle - theta) <= 1.0);
}

TEST_CASE("constant image produces no keypoints") {
    PlanarImage img(64, 64, 1, 0.5f);
    const ScaleSpace sp = build_scale_space(img, 3, 3, 1.6);
    CHECK(detect(sp).empty());
}

TEST_CASE("isolated gaussian blob is detected near its center and scale") {
    const int n = 96;
    const PlanarImage img = gaussian_blob(n, 48.0, 48.0, 4.0);
    const ScaleSpace sp = build_scale_space(img, 3, 3, 1.6);
    const auto kps = detect(sp);
    REQUIRE(!kps.empty());
    bool found = false;
    for (const auto& k : kps) {
        const double d = std::hypot(k.x - 48.0, k.y - 48.0);
        if (d <= 2.0 && k.scale >= 4.0 / 1.6 && k.scale <= 4.0 * 1.6) found = true;
    }
    CHECK(found);
}

TEST_CASE("orientation of a linear ramp points along the gradient") {
    const int n = 64;
    PlanarImage img(n, n, 1);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) img.at(0, r, c) = c / static_cast<float>(n);
    const ScaleSpace sp = build_scale_space(img, 3, 2, 1.6);
    Keypoint kp;
    kp.x = 32;
    kp.y = 32;
    kp.octave = 0;
    kp.level = 1;
    kp.scale = 2.0;
    const auto oriented = orient(kp, sp);
    REQUIRE(!oriented.empty());
    // gradient due east => dominant orientation near 0 degrees
    const double a = oriented.front().orientation;
    CHECK((a <= 5.0 || a >= 355.0));
}

TEST_CASE("two equal orthogonal gradient populations emit two orientations") {
    const int n = 64;
    PlanarImage img(n, n, 1);
    // superposed orthogonal sinusoids: equal gradient mass along both axes
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            img.at(0, r, c) =
                0.5f + 0.2f * std::sin(2.0 * 3.14159265 * c / 8.0) +
                0.2f * std::sin(2.0 * 3.14159265 * r / 8.0);
    const ScaleSpace sp = build_scale_space(img, 3, 2, 1.6);
    Keypoint kp;
    kp.x = n / 2 - 0.5;
    kp.y = n / 2 - 0.5;
    kp.octave = 0;
    kp.level = 1;
    kp.scale = 3.0;
    const auto oriented = orient(kp, sp);
    CHECK(oriented.size() >= 2);
}

TEST_CASE("identical patches give identical descriptors at distance zero") {
    const PlanarImage img = textured_scene(96, 96, 7);
    const ScaleSpace sp = build_scale_space(img, 3, 2, 1.6);
    const auto descs = extract(sp);
    REQUIRE(!descs.empty());
    const MatchSet ms = match(descs, descs);
    CHECK(ms.pairs.size() == descs.size());
    for (const auto& p : ms.pairs) {
        CHECK(p.index1 == p.index2);
        CHECK(p.distance == doctest::Approx(0.0).epsilon(1e-9));
    }
}

TEST_CASE("descriptors are unit length") {
    const PlanarImage img = textured_scene(96, 96, 11);
    const ScaleSpace sp = build_scale_space(img, 3, 2, 1.6);
    for (const auto& d : extract(sp)) {
        double ss = 0.0;
        for (float v : d.values) {
            CHECK(v >= 0.0f);
            ss += static_cast<double>(v) * v;
        }
        CHECK(std::sqrt(ss) == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("matching is one-to-one") {
    const PlanarImage a = textured_scene(96, 96, 13);
    const PlanarImage b = textured_scene(96, 96, 17);
    const auto da = extract(build_scale_space(a, 3, 2, 1.6));
    const auto db = extract(build_scale_space(b, 3, 2, 1.6));
    const MatchSet ms = match(da, db);
    std::vector<int> seen1, seen2;
    for (const auto& p : ms.pairs) {
        CHECK(std::find(seen1.begin(), seen1.end(), p.index1) == seen1.end());
        CHECK(std::find(seen2.begin(), seen2.end(), p.index2) == seen2.end());
        seen1.push_back(p.index1);
        seen2.push_back(p.index2);
    }
}

TEST_CASE("random descriptor sets match far below saturation") {
    std::mt19937_64 gen(21);
    std::uniform_real_distribution<float> u(0.0f, 1.0f);
    auto random_descs = [&](int n) {
        std::vector<SiftDescriptor> out(n);
        for (auto& d : out) {
            double ss = 0.0;
            for (auto& v : d.values) {
                v = u(gen);
                ss += static_cast<double>(v) * v;
            }
            for (auto& v : d.values) v = static_cast<float>(v / std::sqrt(ss));
        }
        return out;
    };
    const auto a = random_descs(60);
    const auto b = random_descs(60);
    const MatchSet ms = match(a, b);
    CHECK(ms.pairs.size() * 4 < std::min(a.size(), b.size()));
}

TEST_CASE("repeatability identities") {
    std::vector<Keypoint> kps;
    std::mt19937_64 gen(31);
    std::uniform_real_distribution<double> u(10.0, 90.0);
    for (int i = 0; i < 25; ++i) {
        Keypoint k;
        k.x = u(gen);
        k.y = u(gen);
        kps.push_back(k);
    }
    const Homography h = rotation_homography(25.0, 50.0, 50.0);
    std::vector<Keypoint> projected;
    for (const auto& k : kps) {
        const auto p = h.apply(k.x, k.y);
        Keypoint q;
        q.x = p[0];
        q.y = p[1];
        projected.push_back(q);
    }
    CHECK(repeatability(kps, projected, h) == doctest::Approx(1.0));
    CHECK(repeatability(kps, {}, h) == 0.0);
    CHECK(repeatability({}, projected, h) == 0.0);

    // symmetric under swapping sets with the inverse transform
    std::vector<Keypoint> jittered = projected;
    jittered.resize(18);
    const double fwd = repeatability(kps, jittered, h);
    const double bwd = repeatability(jittered, kps, h.inverse());
    CHECK(fwd == doctest::Approx(bwd).epsilon(1e-12));
}

TEST_CASE("bayer detector: CFA-phase-preserving shift moves keypoints with it") {
    const PlanarImage scene = textured_scene(128, 128, 41);
    PlanarImage color(128, 128, 3);
    for (int c = 0; c < 3; ++c)
        std::copy(scene.samples.begin(), scene.samples.end(), color.plane(c).begin());
    // add mild chroma so the mosaic is not trivially gray
    for (int r = 0; r < 128; ++r)
        for (int cc = 0; cc < 128; ++cc) color.at(0, r, cc) *= 0.9f;
    const BayerImage bay = mosaic(color, CfaPattern::RGGB);

    const int shift = 8;  // even: preserves the CFA phase
    PlanarImage shifted_color(128, 128, 3);
    for (int c = 0; c < 3; ++c)
        for (int r = 0; r < 128; ++r)
            for (int col = 0; col < 128; ++col) {
                const int sr = r - shift, sc = col - shift;
                shifted_color.at(c, r, col) =
                    (sr >= 0 && sc >= 0) ? color.at(c, sr, sc) : 0.0f;
            }
    const BayerImage shifted = mosaic(shifted_color, CfaPattern::RGGB);

    const auto k1 = detect(build_scale_space(bay, 3, 2, 1.6));
    const auto k2 = detect(build_scale_space(shifted, 3, 2, 1.6));
    REQUIRE(!k1.empty());
    REQUIRE(!k2.empty());
    int moved = 0;
    for (const auto& a : k1) {
        if (a.x > 100 || a.y > 100) continue;  // shifted out or near border
        for (const auto& b : k2)
            if (std::hypot(b.x - (a.x + shift), b.y - (a.y + shift)) <= 0.5) {
                ++moved;
                break;
            }
    }
    // most interior keypoints reappear at the shifted location
    CHECK(moved >= static_cast<int>(0.6 * k1.size()) - 4);
}

TEST_CASE("orientation follows a 30-degree image rotation") {
    const PlanarImage img = textured_scene(128, 128, 57);
    const ScaleSpace sp0 = build_scale_space(img, 3, 2, 1.6);
    const double theta = 30.0;
    const PlanarImage rot = rotate_planar(img, theta);
    const ScaleSpace sp1 = build_scale_space(rot, 3, 2, 1.6);
    const Homography h =
        rotation_homography(theta, (img.width - 1) / 2.0, (img.height - 1) / 2.0);

    // probe a few well-interior keypoints of the original
    int checked = 0;
    double worst = 0.0;
    for (const Keypoint& kp : detect(sp0)) {
        if (kp.octave != 0) continue;
        const auto p = h.apply(kp.x, kp.y);
        if (p[0] < 40 || p[0] > 88 || p[1] < 40 || p[1] > 88) continue;
        const auto o0 = orient(kp, sp0);
        Keypoint moved = kp;
        moved.x = p[0];
        moved.y = p[1];
        const auto o1 = orient(moved, sp1);
        if (o0.empty() || o1.empty()) continue;
        // gradient directions rotate by -theta under the forward map
        double best = 360.0;
        for (const auto& b : o1) {
            double d = std::fmod(b.orientation - (o0.front().orientation - theta) + 720.0, 360.0);
            if (d > 180.0) d = 360.0 - d;
            best = std::min(best, d);
        }
        worst = std::max(worst, best);
        ++checked;
        if (checked >= 5) break;
    }
    REQUIRE(checked >= 3);
    CHECK(worst <= 5.0);
}

TEST_CASE("orientation assignment makes descriptors rotation-tolerant") {
    const PlanarImage img = textured_scene(128, 128, 61);
    const ScaleSpace sp0 = build_scale_space(img, 3, 2, 1.6);
    const double theta = 90.0;
    const PlanarImage rot = rotate_planar(img, theta);
    const ScaleSpace sp1 = build_scale_space(rot, 3, 2, 1.6);
    const Homography h =
        rotation_homography(theta, (img.width - 1) / 2.0, (img.height - 1) / 2.0);

    int compared = 0;
    double oriented_total = 0.0, unoriented_total = 0.0;
    for (const Keypoint& kp : detect(sp0)) {
        if (kp.octave != 0) continue;
        const auto p = h.apply(kp.x, kp.y);
        if (p[0] < 44 || p[0] > 84 || p[1] < 44 || p[1] > 84) continue;
        const auto o0 = orient(kp, sp0);
        Keypoint moved = kp;
        moved.x = p[0];
        moved.y = p[1];
        const auto o1 = orient(moved, sp1);
        if (o0.empty() || o1.empty()) continue;
        const auto d0 = describe(o0.front(), sp0);
        const auto d1 = describe(o1.front(), sp1);
        // the same patches described with orientation forced off
        Keypoint f0 = o0.front(), f1 = o1.front();
        f0.orientation = 0.0;
        f1.orientation = 0.0;
        const auto u0 = describe(f0, sp0);
        const auto u1 = describe(f1, sp1);
        if (!d0 || !d1 || !u0 || !u1) continue;
        auto dist = [](const SiftDescriptor& a, const SiftDescriptor& b) {
            double s = 0.0;
            for (int i = 0; i < 128; ++i) {
                const double d = static_cast<double>(a.values[i]) - b.values[i];
                s += d * d;
            }
            return std::sqrt(s);
        };
        oriented_total += dist(*d0, *d1);
        unoriented_total += dist(*u0, *u1);
        ++compared;
        if (compared >= 6) break;
    }
    REQUIRE(compared >= 2);
    // a keypoint with an ambiguous histogram can pick a different reference
    // peak, so the invariance shows in the aggregate
    CHECK(oriented_total < unoriented_total);
}

TEST_CASE("flat patches yield no descriptor") {
    PlanarImage img(64, 64, 1, 0.5f);
    const ScaleSpace sp = build_scale_space(img, 3, 2, 1.6);
    Keypoint kp;
    kp.x = 32;
    kp.y = 32;
    kp.octave = 0;
    kp.level = 1;
    kp.scale = 2.0;
    kp.orientation = 0.0;
    CHECK(!describe(kp, sp).has_value());
    // region sticking out of the image is dropped too
    kp.x = 2;
    CHECK(orient(kp, sp).empty());
}
