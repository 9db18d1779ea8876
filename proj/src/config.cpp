// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the wce-enhance Project.

#include <wce/config.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace wce {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(ConfigError::Kind kind, std::size_t line, const std::string& msg)
{
    throw ConfigError(kind, "config line " + std::to_string(line) + ": " + msg);
}

double parse_real(std::string_view value, std::size_t line, std::string_view key)
{
    double out = 0.0;
    const auto* end = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc() || ptr != end || !std::isfinite(out)) {
        fail(ConfigError::Kind::parse, line, "'" + std::string(key) + "' expects a real number");
    }
    return out;
}

long long parse_integer(std::string_view value, std::size_t line, std::string_view key)
{
    long long out = 0;
    const auto* end = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc() || ptr != end) {
        fail(ConfigError::Kind::parse, line, "'" + std::string(key) + "' expects an integer");
    }
    return out;
}

template <typename Enum>
Enum parse_enum(std::string_view value, std::initializer_list<Enum> options, std::size_t line,
                std::string_view key)
{
    for (Enum e : options) {
        if (to_string(e) == value) {
            return e;
        }
    }
    std::string allowed;
    for (Enum e : options) {
        allowed += (allowed.empty() ? "" : "|") + std::string(to_string(e));
    }
    fail(ConfigError::Kind::parse, line, "'" + std::string(key) + "' expects one of " + allowed);
}

void require(bool ok, const std::string& msg)
{
    if (!ok) {
        throw ConfigError(ConfigError::Kind::range, msg);
    }
}

std::string format_real(double v)
{
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

} // namespace

std::string_view to_string(SaturationMap v) noexcept
{
    switch (v) {
    case SaturationMap::robust: return "robust";
    case SaturationMap::minmax: return "minmax";
    case SaturationMap::affine_after_clip: return "affine_after_clip";
    }
    return "robust";
}

std::string_view to_string(TauImaxScale v) noexcept
{
    return v == TauImaxScale::native255 ? "native255" : "normalized";
}

std::string_view to_string(PsnrPlane v) noexcept
{
    return v == PsnrPlane::rgb ? "rgb" : "intensity";
}

void EnhanceConfig::validate() const
{
    require(std::isfinite(um_gain) && um_gain >= 0.0, "um_gain must be >= 0");
    require(gaussian_size >= 3 && gaussian_size % 2 == 1, "gaussian_size must be an odd integer >= 3");
    require(std::isfinite(gaussian_sigma) && gaussian_sigma > 0.0, "gaussian_sigma must be > 0");
    require(clip_fraction >= 0.0 && clip_fraction < 0.05, "clip_fraction must be in [0, 0.05)");
    require(std::isfinite(division_epsilon) && division_epsilon > 0.0 && division_epsilon < 1.0,
            "division_epsilon must be in (0, 1)");
    require(loe_grid >= 1 && loe_grid <= 50, "loe_grid must be in [1, 50]");
    require(histogram_bins == kHistogramBins, "histogram_bins is fixed at 256");
}

EnhanceConfig parse_config(std::string_view text)
{
    EnhanceConfig cfg;
    std::set<std::string, std::less<>> seen;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            fail(ConfigError::Kind::parse, line_no, "expected 'key = value'");
        }
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            fail(ConfigError::Kind::parse, line_no, "expected 'key = value'");
        }
        if (!seen.insert(std::string(key)).second) {
            fail(ConfigError::Kind::parse, line_no, "duplicate key '" + std::string(key) + "'");
        }

        if (key == "um_gain") {
            cfg.um_gain = parse_real(value, line_no, key);
        } else if (key == "gaussian_size") {
            cfg.gaussian_size = static_cast<int>(parse_integer(value, line_no, key));
        } else if (key == "gaussian_sigma") {
            cfg.gaussian_sigma = parse_real(value, line_no, key);
        } else if (key == "clip_fraction") {
            cfg.clip_fraction = parse_real(value, line_no, key);
        } else if (key == "saturation_map") {
            cfg.saturation_map = parse_enum(
                value, {SaturationMap::robust, SaturationMap::minmax, SaturationMap::affine_after_clip},
                line_no, key);
        } else if (key == "division_epsilon") {
            cfg.division_epsilon = parse_real(value, line_no, key);
        } else if (key == "tau_imax_scale") {
            cfg.tau_imax_scale =
                parse_enum(value, {TauImaxScale::native255, TauImaxScale::normalized}, line_no, key);
        } else if (key == "loe_grid") {
            cfg.loe_grid = static_cast<int>(parse_integer(value, line_no, key));
        } else if (key == "psnr_plane") {
            cfg.psnr_plane = parse_enum(value, {PsnrPlane::rgb, PsnrPlane::intensity}, line_no, key);
        } else if (key == "histogram_bins") {
            const long long bins = parse_integer(value, line_no, key);
            cfg.histogram_bins = bins < 0 ? 0 : static_cast<std::size_t>(bins);
        } else {
            fail(ConfigError::Kind::unknown_key, line_no, "unknown key '" + std::string(key) + "'");
        }
    }
    cfg.validate();
    return cfg;
}

EnhanceConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError(ConfigError::Kind::parse, path.string() + ": cannot open config file");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

std::string format_config(const EnhanceConfig& cfg)
{
    std::ostringstream os;
    os << "um_gain = " << format_real(cfg.um_gain) << '\n'
       << "gaussian_size = " << cfg.gaussian_size << '\n'
       << "gaussian_sigma = " << format_real(cfg.gaussian_sigma) << '\n'
       << "clip_fraction = " << format_real(cfg.clip_fraction) << '\n'
       << "saturation_map = " << to_string(cfg.saturation_map) << '\n'
       << "division_epsilon = " << format_real(cfg.division_epsilon) << '\n'
       << "tau_imax_scale = " << to_string(cfg.tau_imax_scale) << '\n'
       << "loe_grid = " << cfg.loe_grid << '\n'
       << "psnr_plane = " << to_string(cfg.psnr_plane) << '\n'
       << "histogram_bins = " << cfg.histogram_bins << '\n';
    return os.str();
}

} // namespace wce
