// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the wce-enhance Project.

#include <wce/report.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace wce {

using nlohmann::json;

namespace {

json number_or_sentinel(double v)
{
    if (std::isinf(v) && v > 0.0) {
        return "inf";
    }
    return round_sig6(v);
}

json optional_number(const std::optional<double>& v)
{
    return v ? number_or_sentinel(*v) : json(nullptr);
}

double read_number(const json& j, const char* key)
{
    const json& v = j.at(key);
    if (v.is_string() && v.get<std::string>() == "inf") {
        return kPsnrIdentical;
    }
    return v.get<double>();
}

std::optional<double> read_optional(const json& j, const char* key)
{
    const json& v = j.at(key);
    if (v.is_null()) {
        return std::nullopt;
    }
    return read_number(j, key);
}

json level_array(const LevelTable& table)
{
    return json(std::vector<double>(table.begin(), table.end()));
}

} // namespace

double round_sig6(double v)
{
    if (!std::isfinite(v)) {
        return v;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return std::strtod(buf, nullptr);
}

std::string format_sig6(double v)
{
    if (std::isinf(v) && v > 0.0) {
        return "inf";
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

json to_json(const MetricsReport& r)
{
    return json{
        {"irmle_orig", number_or_sentinel(r.irmle_orig)},
        {"irmle_enh", number_or_sentinel(r.irmle_enh)},
        {"irmle_ratio", optional_number(r.irmle_ratio)},
        {"cef", optional_number(r.cef)},
        {"loe", number_or_sentinel(r.loe)},
        {"psnr", number_or_sentinel(r.psnr)},
        {"ssim", number_or_sentinel(r.ssim)},
        {"wall_time_ms", number_or_sentinel(r.wall_time_ms)},
    };
}

MetricsReport metrics_from_json(const json& j)
{
    MetricsReport r;
    r.irmle_orig = read_number(j, "irmle_orig");
    r.irmle_enh = read_number(j, "irmle_enh");
    r.irmle_ratio = read_optional(j, "irmle_ratio");
    r.cef = read_optional(j, "cef");
    r.loe = read_number(j, "loe");
    r.psnr = read_number(j, "psnr");
    r.ssim = read_number(j, "ssim");
    r.wall_time_ms = read_number(j, "wall_time_ms");
    return r;
}

json to_json(const EnhanceConfig& cfg)
{
    return json{
        {"um_gain", cfg.um_gain},
        {"gaussian_size", cfg.gaussian_size},
        {"gaussian_sigma", cfg.gaussian_sigma},
        {"clip_fraction", cfg.clip_fraction},
        {"saturation_map", std::string(to_string(cfg.saturation_map))},
        {"division_epsilon", cfg.division_epsilon},
        {"tau_imax_scale", std::string(to_string(cfg.tau_imax_scale))},
        {"loe_grid", cfg.loe_grid},
        {"psnr_plane", std::string(to_string(cfg.psnr_plane))},
        {"histogram_bins", cfg.histogram_bins},
    };
}

json to_json(const IntensityHistogram& hist, double i_max)
{
    return json{
        {"bins", kHistogramBins},
        {"i_max", i_max},
        {"pdf", level_array(hist.pdf)},
        {"pdf_s", level_array(hist.pdf_s)},
        {"cdf_s", level_array(hist.cdf_s)},
        {"beta", level_array(hist.beta)},
        {"pdf_max", hist.pdf_max},
        {"pdf_min", hist.pdf_min},
        {"tau", hist.tau},
        {"r_bar", hist.r_bar},
    };
}

std::string csv_row(const std::string& file, const MetricsReport& r)
{
    auto opt = [](const std::optional<double>& v) { return v ? format_sig6(*v) : std::string("undefined"); };
    std::string row = file;
    for (const std::string& field :
         {format_sig6(r.irmle_orig), format_sig6(r.irmle_enh), opt(r.irmle_ratio), opt(r.cef), format_sig6(r.loe),
          format_sig6(r.psnr), format_sig6(r.ssim), format_sig6(r.wall_time_ms)}) {
        row += ',';
        row += field;
    }
    return row;
}

} // namespace wce
