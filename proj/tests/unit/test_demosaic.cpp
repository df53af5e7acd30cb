#include <doctest.h>

#include <cmath>

#include "bayergrad/demosaic.hpp"
#include "bayergrad/image_ops.hpp"
#include "bayergrad/quality.hpp"
#include "helpers.hpp"

using namespace bayergrad;

namespace {
const std::vector<DemosaicMethod> kAll = {
    DemosaicMethod::NearestNeighbor, DemosaicMethod::Bilinear, DemosaicMethod::Bicubic,
    DemosaicMethod::AdaptiveColorPlane, DemosaicMethod::Hybrid};
}

TEST_CASE("constant gray-equal mosaic reconstructs the constant for every method") {
    PlanarImage img(8, 8, 3);
    for (auto& v : img.samples) v = 0.42f;
    const BayerImage bay = mosaic(img, CfaPattern::RGGB);
    for (auto m : kAll) {
        const PlanarImage rec = demosaic(bay, m);
        for (float v : rec.samples) CHECK(v == doctest::Approx(0.42).epsilon(1e-6));
    }
}

TEST_CASE("constant color reconstructs exactly in the interior under bilinear") {
    PlanarImage img(10, 10, 3);
    for (int r = 0; r < 10; ++r)
        for (int c = 0; c < 10; ++c) {
            img.at(0, r, c) = 0.2f;
            img.at(1, r, c) = 0.5f;
            img.at(2, r, c) = 0.9f;
        }
    const PlanarImage rec = demosaic(mosaic(img, CfaPattern::RGGB), DemosaicMethod::Bilinear);
    for (int r = 2; r < 8; ++r)
        for (int c = 2; c < 8; ++c) {
            CHECK(rec.at(0, r, c) == doctest::Approx(0.2).epsilon(1e-6));
            CHECK(rec.at(1, r, c) == doctest::Approx(0.5).epsilon(1e-6));
            CHECK(rec.at(2, r, c) == doctest::Approx(0.9).epsilon(1e-6));
        }
}

TEST_CASE("sample preservation: the CFA-sampled channel passes through") {
    for (auto pattern : {CfaPattern::RGGB, CfaPattern::GRBG, CfaPattern::GBRG, CfaPattern::BGGR}) {
        const PlanarImage img = testutil::random_image(12, 10, 3, 19);
        const BayerImage bay = mosaic(img, pattern);
        for (auto m : kAll) {
            const PlanarImage rec = demosaic(bay, m);
            for (int r = 0; r < bay.height; ++r)
                for (int c = 0; c < bay.width; ++c)
                    CHECK(rec.at(static_cast<int>(bay.channel(r, c)), r, c) ==
                          doctest::Approx(bay.at(r, c)).epsilon(1e-6));
        }
    }
}

TEST_CASE("outputs stay inside [0,1]") {
    const PlanarImage img = testutil::random_image(16, 16, 3, 29);
    const BayerImage bay = mosaic(img, CfaPattern::RGGB);
    for (auto m : kAll) {
        const PlanarImage rec = demosaic(bay, m);
        for (float v : rec.samples) {
            CHECK(v >= 0.0f);
            CHECK(v <= 1.0f);
        }
    }
}

TEST_CASE("8x8 ramp, bilinear: PSNR matches a scalar per-pixel oracle") {
    PlanarImage img(8, 8, 1);
    PlanarImage color(8, 8, 3);
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c) {
            const float v = (r * 8 + c) / 63.0f;
            color.at(0, r, c) = v;
            color.at(1, r, c) = std::min(1.0f, v * 0.5f + 0.2f);
            color.at(2, r, c) = 1.0f - v;
        }
    const PlanarImage rec = demosaic(mosaic(color, CfaPattern::RGGB), DemosaicMethod::Bilinear);
    double per_channel_psnr = 0.0;
    for (int ch = 0; ch < 3; ++ch) {
        double sum = 0.0;
        for (int r = 0; r < 8; ++r)
            for (int c = 0; c < 8; ++c) {
                const double d = (static_cast<double>(color.at(ch, r, c)) - rec.at(ch, r, c)) * 255.0;
                sum += d * d;
            }
        per_channel_psnr += 10.0 * std::log10(255.0 * 255.0 / (sum / 64.0));
    }
    CHECK(psnr(color, rec) == doctest::Approx(per_channel_psnr / 3.0).epsilon(1e-9));
}

TEST_CASE("demosaic_quality of a constant image: perfect scores") {
    PlanarImage img(12, 12, 3);
    for (auto& v : img.samples) v = 0.3f;
    const DemosaicQuality q = demosaic_quality(img, DemosaicMethod::Bilinear);
    CHECK(std::isinf(q.psnr_db));
    CHECK(q.mssim == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(q.gmsd == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("method names round-trip and unknown names are rejected") {
    for (auto m : kAll) CHECK(parse_demosaic_method(to_string(m)) == m);
    CHECK_THROWS_AS(parse_demosaic_method("vng"), InvariantError);
}

TEST_CASE("odd dimensions are rejected") {
    BayerImage bad(6, 6, CfaPattern::RGGB);
    bad.width = 5;  // simulate a mis-tagged raster
    bad.samples.resize(30);
    CHECK_THROWS_AS(demosaic(bad, DemosaicMethod::Bilinear), InvariantError);
}
