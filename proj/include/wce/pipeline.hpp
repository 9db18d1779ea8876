// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the wce-enhance Project.

#pragma once

#include <wce/afgt.hpp>
#include <wce/color_restore.hpp>
#include <wce/color_space.hpp>
#include <wce/config.hpp>
#include <wce/metrics.hpp>
#include <wce/unsharp.hpp>

#include <optional>

namespace wce {

/// Intermediate planes of one enhance() call.
struct DebugBundle {
    Plane i_n;  // normalized intensity
    Plane l;    // after the fraction gamma transform
    Plane r_s;  // after unsharp masking
    Plane s_c;  // rescaled saturation before mapping
    Plane s_cm; // mapped saturation
    IntensityHistogram histogram;
    double i_max = 0.0; // intensity maximum before normalization
};

struct EnhanceResult {
    RgbImage image;
    std::optional<DebugBundle> debug;
};

/// RGB -> HSI, intensity normalization, fraction gamma transform, unsharp
/// mask, saturation restoration, HSI -> RGB. Hue is carried through
/// untouched. An all-black image is returned unchanged.
EnhanceResult enhance(const RgbImage& img, const EnhanceConfig& cfg = {}, bool keep_debug = false);

/// Scores an original/enhanced pair. wall_time_ms is left at 0.
MetricsReport evaluate(const RgbImage& orig, const RgbImage& enh, const EnhanceConfig& cfg = {});

struct TimedEnhancement {
    EnhanceResult result;
    MetricsReport report;
};

/// enhance() timed with a steady clock, then evaluate() against the 8-bit
/// quantized output (what a saved file would contain).
TimedEnhancement enhance_and_evaluate(const RgbImage& img, const EnhanceConfig& cfg = {},
                                      bool keep_debug = false);

} // namespace wce
