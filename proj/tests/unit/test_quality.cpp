#include <doctest.h>

#include <cmath>
#include <limits>

#include "bayergrad/quality.hpp"
#include "helpers.hpp"

using namespace bayergrad;

TEST_CASE("gms of identical maps is exactly one, gmsd exactly zero") {
    const PlanarImage m = testutil::random_image(16, 16, 1, 3, 0.0f, 0.5f);
    const GmsResult g = gms(m, m);
    for (float v : g.gms_map.samples) CHECK(v == 1.0f);
    CHECK(g.gmsm == 1.0);
    CHECK(g.gmsd == 0.0);
}

TEST_CASE("gms of two zero maps is one (constant protection)") {
    const PlanarImage z(8, 8, 1);
    const GmsResult g = gms(z, z);
    for (float v : g.gms_map.samples) CHECK(v == 1.0f);
    CHECK(g.gmsd == 0.0);
}

TEST_CASE("gms is symmetric and matches the scalar oracle") {
    const PlanarImage a = testutil::random_image(9, 7, 1, 5, 0.0f, 1.0f);
    const PlanarImage b = testutil::random_image(9, 7, 1, 6, 0.0f, 1.0f);
    const GmsResult g1 = gms(a, b);
    const GmsResult g2 = gms(b, a);
    CHECK(g1.gms_map.samples == g2.gms_map.samples);

    const double c = 0.0026;
    double sum = 0.0;
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        const double x = a.samples[i], y = b.samples[i];
        const double v = (2 * x * y + c) / (x * x + y * y + c);
        CHECK(g1.gms_map.samples[i] == doctest::Approx(v).epsilon(1e-7));
        CHECK(g1.gms_map.samples[i] > 0.0f);
        CHECK(g1.gms_map.samples[i] <= 1.0f);
        sum += v;  // the aggregates accumulate the double values
    }
    const double mean = sum / a.samples.size();
    double ss = 0.0;
    for (float v : g1.gms_map.samples) ss += (v - mean) * (v - mean);
    CHECK(g1.gmsm == doctest::Approx(mean).epsilon(1e-12));
    CHECK(g1.gmsd == doctest::Approx(std::sqrt(ss / a.samples.size())).epsilon(1e-9));
}

TEST_CASE("mse/psnr basics") {
    const PlanarImage a = testutil::random_image(8, 8, 3, 7);
    CHECK(mse(a, a) == 0.0);
    CHECK(std::isinf(psnr(a, a)));

    PlanarImage zero(8, 8, 1), one(8, 8, 1, 1.0f);
    CHECK(mse(zero, one) == doctest::Approx(255.0 * 255.0));
    CHECK(psnr(zero, one) == doctest::Approx(0.0));
}

TEST_CASE("mse/psnr match a two-loop oracle on a random pair") {
    const PlanarImage a = testutil::random_image(6, 5, 3, 8);
    const PlanarImage b = testutil::random_image(6, 5, 3, 9);
    double sum = 0.0;
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        const double d = (static_cast<double>(a.samples[i]) - b.samples[i]) * 255.0;
        sum += d * d;
    }
    CHECK(mse(a, b) == doctest::Approx(sum / a.samples.size()).epsilon(1e-9));

    double ptotal = 0.0;
    for (int c = 0; c < 3; ++c) {
        double s = 0.0;
        for (int r = 0; r < 5; ++r)
            for (int col = 0; col < 6; ++col) {
                const double d = (static_cast<double>(a.at(c, r, col)) - b.at(c, r, col)) * 255.0;
                s += d * d;
            }
        ptotal += 10.0 * std::log10(255.0 * 255.0 / (s / 30.0));
    }
    CHECK(psnr(a, b) == doctest::Approx(ptotal / 3.0).epsilon(1e-9));
}

TEST_CASE("psnr decreases as error grows") {
    const PlanarImage a = testutil::random_image(8, 8, 1, 10);
    PlanarImage b1 = a, b2 = a;
    for (auto& v : b1.samples) v = std::min(1.0f, v + 0.01f);
    for (auto& v : b2.samples) v = std::min(1.0f, v + 0.05f);
    CHECK(psnr(a, b1) > psnr(a, b2));
}

TEST_CASE("mssim of identical images is exactly one") {
    const PlanarImage a = testutil::random_image(16, 16, 1, 11);
    CHECK(ssim(a, a).mssim == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("ssim matches a direct windowed-formula oracle at a few positions") {
    const PlanarImage a = testutil::random_image(16, 14, 1, 12);
    const PlanarImage b = testutil::random_image(16, 14, 1, 13);
    const SsimResult res = ssim(a, b);

    // direct evaluation of the windowed statistics at (row, col) offsets
    auto window_tap = [](int i) {
        const double x = i - 5.0;
        return std::exp(-x * x / (2.0 * 1.5 * 1.5));
    };
    double wsum = 0.0;
    for (int i = 0; i < 11; ++i)
        for (int j = 0; j < 11; ++j) wsum += window_tap(i) * window_tap(j);
    for (const auto [row, col] : {std::pair{0, 0}, std::pair{2, 3}, std::pair{3, 5}}) {
        double mu1 = 0, mu2 = 0, m11 = 0, m22 = 0, m12 = 0;
        for (int i = 0; i < 11; ++i)
            for (int j = 0; j < 11; ++j) {
                const double w = window_tap(i) * window_tap(j) / wsum;
                const double x = a.at(0, row + i, col + j);
                const double y = b.at(0, row + i, col + j);
                mu1 += w * x;
                mu2 += w * y;
                m11 += w * x * x;
                m22 += w * y * y;
                m12 += w * x * y;
            }
        const double s11 = m11 - mu1 * mu1, s22 = m22 - mu2 * mu2, s12 = m12 - mu1 * mu2;
        const double C1 = 1e-4, C2 = 9e-4;
        const double expect = ((2 * mu1 * mu2 + C1) * (2 * s12 + C2)) /
                              ((mu1 * mu1 + mu2 * mu2 + C1) * (s11 + s22 + C2));
        CHECK(res.ssim_map.at(0, row, col) == doctest::Approx(expect).epsilon(1e-6));
    }
}

TEST_CASE("inverted checkerboard scores low structural similarity") {
    PlanarImage a(16, 16, 1);
    for (int r = 0; r < 16; ++r)
        for (int c = 0; c < 16; ++c) a.at(0, r, c) = ((r + c) & 1) ? 1.0f : 0.0f;
    PlanarImage b = a;
    for (auto& v : b.samples) v = 1.0f - v;
    CHECK(ssim(a, b).mssim < 0.5);
}

TEST_CASE("ssim rejects images smaller than the window") {
    const PlanarImage small(8, 8, 1);
    CHECK_THROWS_AS(ssim(small, small), InvariantError);
}

TEST_CASE("histogram: constant, two-level, and naive-binning oracle") {
    PlanarImage c(4, 4, 1, 0.5f);
    const auto hc = gray_histogram(c);
    CHECK(hc[0] == 16);
    for (std::size_t i = 1; i < hc.size(); ++i) CHECK(hc[i] == 0);

    PlanarImage two(4, 4, 1);
    for (int i = 0; i < 8; ++i) two.samples[i] = 0.25f;
    for (int i = 8; i < 16; ++i) two.samples[i] = 0.75f;
    const auto ht = gray_histogram(two);
    CHECK(ht[0] == 8);
    CHECK(ht[255] == 8);

    const PlanarImage r = testutil::random_image(12, 9, 1, 15, -1.0f, 1.0f);
    const auto hr = gray_histogram(r);
    float mn = r.samples[0], mx = r.samples[0];
    for (float v : r.samples) {
        mn = std::min(mn, v);
        mx = std::max(mx, v);
    }
    std::vector<std::int64_t> oracle(256, 0);
    for (float v : r.samples) {
        int bin = static_cast<int>((v - mn) / (mx - mn) * 256);
        bin = std::min(std::max(bin, 0), 255);
        ++oracle[bin];
    }
    CHECK(hr == oracle);
    std::int64_t total = 0;
    for (auto v : hr) total += v;
    CHECK(total == 12 * 9);
}
