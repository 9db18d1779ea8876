// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the wce-enhance Project.

#pragma once

#include <wce/plane.hpp>

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>

namespace wce::testing {

/// Deterministic across standard libraries (std distributions are not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n; }

private:
    std::mt19937_64 engine_;
};

/// Independent uniform samples in [lo, hi].
RgbImage random_image(Rng& rng, std::size_t width, std::size_t height, double lo = 0.0, double hi = 1.0);

Plane random_plane(Rng& rng, std::size_t width, std::size_t height, double lo = 0.0, double hi = 1.0);

/// Samples quantized to k/255, as decoded from an 8-bit file.
RgbImage random_image_8bit(Rng& rng, std::size_t width, std::size_t height);

/// Dark, low-contrast capsule-endoscopy-like scene: reddish mucosa under an
/// off-center light falloff and a dark gradient, with a colored textured
/// patch and a small specular highlight. Quantized to 8 bits.
RgbImage synthetic_wce_fixture(std::uint64_t seed, std::size_t width = 360, std::size_t height = 360);

/// Empty directory under the system temp dir, recreated on every call.
std::filesystem::path scratch_dir(const std::string& name);

/// Seeds 1..kFixtureCount are bundled under tests/fixtures.
inline constexpr std::uint64_t kFixtureCount = 6;

/// "wce_fixture_03.png" for seed 3.
std::string fixture_name(std::uint64_t seed);

} // namespace wce::testing
