// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the wce-enhance Project.

#pragma once

#include <wce/color_space.hpp>
#include <wce/config.hpp>
#include <wce/unsharp.hpp>

#include <span>

namespace wce {

struct RestoredSaturation {
    Plane plane;
};

/// Spread below which a saturation range is treated as a single value.
inline constexpr double kDegenerateRange = 1e-12;

/// s_i * r_s / i_n per pixel; the ratio is 1 where i_n < cfg.division_epsilon.
/// The result is not clamped and may exceed 1.
Plane restore_saturation(const Plane& s_i, const SharpenedIntensity& r_s, const NormalizedIntensity& i_n,
                         const EnhanceConfig& cfg);

/// Nearest-rank percentile: the ceil(q*n)-th smallest sample (1-based, at least the first).
double percentile_nearest_rank(std::span<const double> values, double q);

/// Clip to the [clip_fraction, 1 - clip_fraction] percentiles, then map each
/// value through the normalized cumulative 256-bin histogram of the clipped
/// plane. A clipped range narrower than kDegenerateRange is returned clamped to [0,1].
RestoredSaturation robust_map(const Plane& s_c, const EnhanceConfig& cfg);

/// (v - min) / (max - min), with the same degenerate bypass.
RestoredSaturation minmax_map(const Plane& s_c);

/// Percentile clip followed by the affine map onto [0,1].
RestoredSaturation affine_after_clip_map(const Plane& s_c, const EnhanceConfig& cfg);

/// Dispatches on cfg.saturation_map.
RestoredSaturation map_saturation(const Plane& s_c, const EnhanceConfig& cfg);

} // namespace wce
