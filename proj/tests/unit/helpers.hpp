#pragma once

#include <cstdint>
#include <filesystem>
#include <random>

#include "bayergrad/types.hpp"

namespace testutil {

inline std::filesystem::path fixtures_dir() {
    return std::filesystem::path(BAYERGRAD_FIXTURES_DIR);
}

inline std::filesystem::path suite_dir() { return fixtures_dir() / "suite"; }

inline std::mt19937_64 rng(std::uint64_t seed = 42) { return std::mt19937_64(seed); }

inline bayergrad::PlanarImage random_image(int w, int h, int channels,
                                           std::uint64_t seed = 42, float lo = 0.0f,
                                           float hi = 1.0f) {
    auto gen = rng(seed);
    std::uniform_real_distribution<float> dist(lo, hi);
    bayergrad::PlanarImage img(w, h, channels);
    for (auto& v : img.samples) v = dist(gen);
    return img;
}

inline bayergrad::BayerImage random_bayer(int w, int h, std::uint64_t seed = 42,
                                          bayergrad::CfaPattern p = bayergrad::CfaPattern::RGGB) {
    auto gen = rng(seed);
    std::uniform_real_distribution<float> dist(0.0f, 1.0f);
    bayergrad::BayerImage img(w, h, p);
    for (auto& v : img.samples) v = dist(gen);
    return img;
}

/// Gray-equal color image: all three channels identical.
inline bayergrad::PlanarImage random_gray_equal(int w, int h, std::uint64_t seed = 42) {
    auto gen = rng(seed);
    std::uniform_real_distribution<float> dist(0.0f, 1.0f);
    bayergrad::PlanarImage img(w, h, 3);
    for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c) {
            const float v = dist(gen);
            img.at(0, r, c) = v;
            img.at(1, r, c) = v;
            img.at(2, r, c) = v;
        }
    return img;
}

}  // namespace testutil
