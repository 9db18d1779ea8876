// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the wce-enhance Project.

#pragma once

#include <wce/afgt.hpp>
#include <wce/config.hpp>
#include <wce/metrics.hpp>

#include <json.hpp>

#include <string>

namespace wce {

/// Rounds to 6 significant digits (the precision used in every report).
double round_sig6(double v);

/// Report text for one number: 6 significant digits, "inf" for +infinity.
std::string format_sig6(double v);

/// Keys: irmle_orig, irmle_enh, irmle_ratio, cef, loe, psnr, ssim,
/// wall_time_ms. Undefined ratios are null, an infinite PSNR is "inf".
nlohmann::json to_json(const MetricsReport& report);
MetricsReport metrics_from_json(const nlohmann::json& j);

nlohmann::json to_json(const EnhanceConfig& cfg);

nlohmann::json to_json(const IntensityHistogram& hist, double i_max);

inline constexpr const char* kCsvHeader = "file,irmle_orig,irmle_enh,irmle_ratio,cef,loe,psnr,ssim,wall_time_ms";

/// One CSV line (no newline). Undefined values are written as "undefined".
std::string csv_row(const std::string& file, const MetricsReport& report);

} // namespace wce
