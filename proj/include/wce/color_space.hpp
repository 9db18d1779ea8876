// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the wce-enhance Project.

#pragma once

#include <wce/plane.hpp>

namespace wce {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

struct RgbPixel {
    double r = 0.0;
    double g = 0.0;
    double b = 0.0;
};

/// Hue in radians in [0, 2pi), saturation and intensity in [0,1].
struct HsiPixel {
    double h = 0.0;
    double s = 0.0;
    double i = 0.0;
};

/// Geometric HSI model: i = (r+g+b)/3, s = 1 - 3 min/(r+g+b), and the hue
/// angle measured from red, reflected when b > g. Achromatic pixels get h = 0, s = 0.
HsiPixel to_hsi(RgbPixel px) noexcept;

/// Sector-wise inverse of to_hsi.
///
/// High intensities combined with high saturation can leave the RGB cube.
/// Such pixels are pulled toward gray along the line of constant hue and
/// intensity until the largest channel is 1, so hue is kept where the plain
/// per-channel clamp would shift it.
RgbPixel to_rgb(HsiPixel px) noexcept;

struct HsiImage {
    Plane h;
    Plane s;
    Plane i;

    std::size_t width() const noexcept { return i.width(); }
    std::size_t height() const noexcept { return i.height(); }
};

HsiImage rgb_to_hsi(const RgbImage& img);
RgbImage hsi_to_rgb(const HsiImage& img);

/// Intensity divided by its maximum. `i_max` is the maximum before division;
/// an all-zero plane is kept as is with i_max = 0.
struct NormalizedIntensity {
    Plane plane;
    double i_max = 0.0;

    bool degenerate() const noexcept { return !(i_max > 0.0); }
};

NormalizedIntensity normalize_intensity(const Plane& intensity);

} // namespace wce
