// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the wce-enhance Project.

#pragma once

#include <wce/plane.hpp>

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

namespace wce {

enum class SaturationMap { robust, minmax, affine_after_clip };

/// Scale of I_max when it multiplies the intensity std in the tau formula.
enum class TauImaxScale { native255, normalized };

enum class PsnrPlane { rgb, intensity };

/// Malformed or out-of-range configuration.
class ConfigError : public Error {
public:
    enum class Kind { parse, range, unknown_key };

    ConfigError(Kind kind, const std::string& message) : Error(message), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

inline constexpr std::size_t kHistogramBins = 256;

/// Every tunable of the enhancement pipeline and the metrics.
///
/// Defaults: unsharp gain 0.8, 5x5 Gaussian with sigma 1, 0.2 % saturation
/// clipping, robust saturation mapping, epsilon of one 8-bit level.
struct EnhanceConfig {
    double um_gain = 0.8;
    int gaussian_size = 5;
    double gaussian_sigma = 1.0;
    double clip_fraction = 0.002;
    SaturationMap saturation_map = SaturationMap::robust;
    double division_epsilon = 1.0 / 255.0;
    TauImaxScale tau_imax_scale = TauImaxScale::native255;
    int loe_grid = 50;
    PsnrPlane psnr_plane = PsnrPlane::rgb;
    std::size_t histogram_bins = kHistogramBins;

    /// Throws ConfigError(range) when any field is out of its documented range.
    void validate() const;

    bool operator==(const EnhanceConfig&) const = default;
};

std::string_view to_string(SaturationMap v) noexcept;
std::string_view to_string(TauImaxScale v) noexcept;
std::string_view to_string(PsnrPlane v) noexcept;

/// Parses `key = value` lines. Blank lines and `#` comments are ignored,
/// omitted keys keep their defaults, unknown keys are rejected.
EnhanceConfig parse_config(std::string_view text);

EnhanceConfig load_config(const std::filesystem::path& path);

/// Emits every field in the same text format parse_config accepts.
std::string format_config(const EnhanceConfig& cfg);

} // namespace wce
