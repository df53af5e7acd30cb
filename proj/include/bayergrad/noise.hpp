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

#include <cstdint>
#include <string>

#include "bayergrad/types.hpp"

namespace bayergrad {

/// Additive signal-dependent noise: each sample receives an independent
/// zero-mean Gaussian draw with variance a*y + b, where y is the clean
/// value. The Poissonian (shot) component is the a*y term; b is the
/// signal-independent floor.
struct NoiseParams {
    double a = 0.0;
    double b = 0.0;
    std::uint64_t seed = 0;
};

/// Presets spanning mild to severe low-light regimes.
NoiseParams noise_preset(const std::string& name, std::uint64_t seed = 0);

/// out = clamp(y + eta, 0, 1). Deterministic for a given seed; per-sample
/// draws come from a counter-based generator, so results do not depend on
/// evaluation order.
PlanarImage add_noise(const PlanarImage& img, const NoiseParams& p);
BayerImage add_noise(const BayerImage& img, const NoiseParams& p);

/// One standard normal draw for (seed, counter); exposed for tests.
double normal_draw(std::uint64_t seed, std::uint64_t counter);

}  // namespace bayergrad
