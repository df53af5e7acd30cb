#include <doctest.h>

#include <cmath>

#include "bayergrad/noise.hpp"
#include "helpers.hpp"

using namespace bayergrad;

TEST_CASE("zero parameters leave the image untouched") {
    const PlanarImage img = testutil::random_image(16, 16, 3, 3);
    const PlanarImage out = add_noise(img, {0.0, 0.0, 123});
    CHECK(out.samples == img.samples);
}

TEST_CASE("same seed reproduces the same output; different seeds differ") {
    const PlanarImage img = testutil::random_image(32, 32, 1, 5);
    const NoiseParams p = noise_preset("mid", 7);
    const PlanarImage a = add_noise(img, p);
    const PlanarImage b = add_noise(img, p);
    CHECK(a.samples == b.samples);
    NoiseParams p2 = p;
    p2.seed = 8;
    const PlanarImage c = add_noise(img, p2);
    CHECK(a.samples != c.samples);
}

TEST_CASE("negative parameters are rejected") {
    const PlanarImage img(4, 4, 1);
    CHECK_THROWS_AS(add_noise(img, {-1.0, 0.0, 0}), InvariantError);
    CHECK_THROWS_AS(add_noise(img, {0.0, -1e-9, 0}), InvariantError);
}

TEST_CASE("noise is zero-mean on mid-gray inputs") {
    const int n = 500;  // 250k samples
    PlanarImage img(n, n / 2, 1, 0.5f);
    const NoiseParams p = noise_preset("mid", 11);
    const PlanarImage out = add_noise(img, p);
    double sum = 0.0;
    for (std::size_t i = 0; i < out.samples.size(); ++i)
        sum += static_cast<double>(out.samples[i]) - img.samples[i];
    const double mean = sum / out.samples.size();
    const double sigma = std::sqrt(p.a * 0.5 + p.b);
    const double se = sigma / std::sqrt(static_cast<double>(out.samples.size()));
    CHECK(std::abs(mean) <= 3.0 * se);
}

TEST_CASE("empirical variance tracks a*y+b across gray levels") {
    const NoiseParams p = noise_preset("mid", 13);
    const int n = 1000;  // 1e6 samples
    for (const double y : {0.25, 0.5, 0.75}) {
        PlanarImage img(n, n, 1, static_cast<float>(y));
        const PlanarImage out = add_noise(img, p);
        double ss = 0.0, sum = 0.0;
        for (std::size_t i = 0; i < out.samples.size(); ++i) {
            const double d = static_cast<double>(out.samples[i]) - y;
            sum += d;
            ss += d * d;
        }
        const double nn = static_cast<double>(out.samples.size());
        const double var = ss / nn - (sum / nn) * (sum / nn);
        const double expect = p.a * y + p.b;
        CHECK(var == doctest::Approx(expect).epsilon(0.05));
    }
}

TEST_CASE("clamping keeps samples in range under heavy noise") {
    const PlanarImage img = testutil::random_image(64, 64, 1, 17);
    const PlanarImage out = add_noise(img, noise_preset("heavy", 19));
    for (float v : out.samples) {
        CHECK(v >= 0.0f);
        CHECK(v <= 1.0f);
    }
}

TEST_CASE("normal_draw is standard normal to within sampling error") {
    double sum = 0.0, ss = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double v = normal_draw(3, i);
        sum += v;
        ss += v * v;
    }
    CHECK(std::abs(sum / n) <= 0.01);
    CHECK(ss / n == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("preset parameter triples") {
    const NoiseParams light = noise_preset("light");
    CHECK(light.a == doctest::Approx(9.63e-4));
    CHECK(light.b == doctest::Approx(3.43e-5));
    const NoiseParams heavy = noise_preset("heavy");
    CHECK(heavy.a == doctest::Approx(3.59e-2));
    CHECK(heavy.b == doctest::Approx(3.40e-3));
    CHECK_THROWS_AS(noise_preset("extreme"), InvariantError);
}
