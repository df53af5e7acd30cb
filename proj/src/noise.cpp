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

#include "bayergrad/noise.hpp"

#include <cmath>

namespace bayergrad {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// uniform in (0,1]
double uniform_open(std::uint64_t bits) {
    return (static_cast<double>(bits >> 11) + 1.0) * (1.0 / 9007199254740992.0);
}

void check_params(const NoiseParams& p) {
    if (p.a < 0.0 || p.b < 0.0 || !std::isfinite(p.a) || !std::isfinite(p.b))
        throw InvariantError("add_noise: a and b must be finite and nonnegative");
}

template <typename Img>
Img add_noise_impl(const Img& img, const NoiseParams& p) {
    check_params(p);
    Img out = img;
    for (std::size_t i = 0; i < out.samples.size(); ++i) {
        const double y = out.samples[i];
        const double var = p.a * y + p.b;
        if (var > 0.0) {
            const double eta = std::sqrt(var) * normal_draw(p.seed, i);
            out.samples[i] =
                static_cast<float>(std::min(std::max(y + eta, 0.0), 1.0));
        }
    }
    return out;
}

}  // namespace

double normal_draw(std::uint64_t seed, std::uint64_t counter) {
    // Box-Muller on two counter-derived uniforms.
    const std::uint64_t s = splitmix64(seed ^ 0x5851f42d4c957f2dull) + counter;
    const double u1 = uniform_open(splitmix64(s));
    const double u2 = uniform_open(splitmix64(s ^ 0xda3e39cb94b95bdbull));
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

NoiseParams noise_preset(const std::string& name, std::uint64_t seed) {
    if (name == "light") return {9.63e-4, 3.43e-5, seed};
    if (name == "mid") return {4.80e-3, 2.00e-4, seed};
    if (name == "heavy") return {3.59e-2, 3.40e-3, seed};
    throw InvariantError("unknown noise preset: " + name);
}

PlanarImage add_noise(const PlanarImage& img, const NoiseParams& p) {
    return add_noise_impl(img, p);
}

BayerImage add_noise(const BayerImage& img, const NoiseParams& p) {
    return add_noise_impl(img, p);
}

}  // namespace bayergrad
