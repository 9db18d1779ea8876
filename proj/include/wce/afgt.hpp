// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the wce-enhance Project.

#pragma once

#include <wce/color_space.hpp>
#include <wce/config.hpp>

#include <array>
#include <cstddef>
#include <span>

namespace wce {

/// Adaptive fraction gamma transformation of a normalized intensity plane.
///
/// Each pixel v is mapped to (v^g / (2 - v^g))^b where the exponent
/// g = 1 + atan(v - 0.5) depends on the pixel and b = 1 / (1 + cdf_s) comes
/// from a smoothed cumulative histogram of the whole plane. Levels are the
/// 256 values k/255; a sample lands in level round(v * 255).

using LevelTable = std::array<double, kHistogramBins>;

/// Level index of v: round half up of v*255, clamped to [0,255].
std::size_t level_of(double v) noexcept;

inline constexpr double level_value(std::size_t k) noexcept { return static_cast<double>(k) / 255.0; }

LevelTable compute_pdf(std::span<const double> plane);
LevelTable compute_pdf(const NormalizedIntensity& in);

/// Mean level sum(r * pdf(r)).
double mean_level(const LevelTable& pdf) noexcept;

/// tau = i_max_scaled * std(pdf) * 0.01, where i_max_scaled is I_max on the
/// chosen scale (I_max * 255 for the default native scale).
double compute_tau(const LevelTable& pdf, double i_max_scaled) noexcept;

/// pdf_max * ((pdf - pdf_min) / (pdf_max - pdf_min))^tau; returns pdf itself
/// when tau == 0 or the pdf is flat.
LevelTable smooth_pdf(const LevelTable& pdf, double tau) noexcept;

/// Normalized running sum of pdf_s. When pdf_s carries no mass the plain cdf
/// of `fallback_pdf` is returned instead.
LevelTable compute_cdf_s(const LevelTable& pdf_s, const LevelTable& fallback_pdf) noexcept;
LevelTable compute_cdf_s(const LevelTable& pdf_s) noexcept;

/// 1 / (1 + cdf_s) per level.
LevelTable compute_beta(const LevelTable& cdf_s) noexcept;

double gamma_of(double v) noexcept;

/// The scalar transfer curve for one pixel.
double fraction_gamma(double v, double gamma, double beta) noexcept;

struct IntensityHistogram {
    LevelTable pdf{};
    LevelTable pdf_s{};
    LevelTable cdf_s{};
    LevelTable beta{};
    double pdf_max = 0.0;
    double pdf_min = 0.0;
    double tau = 0.0;
    double r_bar = 0.0;
};

IntensityHistogram analyze_histogram(const NormalizedIntensity& in,
                                     TauImaxScale scale = TauImaxScale::native255);

struct AfgtResult {
    Plane l_plane;
    IntensityHistogram histogram;
};

/// Constant and all-zero planes pass through unchanged.
AfgtResult apply_afgt(const NormalizedIntensity& in, TauImaxScale scale = TauImaxScale::native255);

} // namespace wce
