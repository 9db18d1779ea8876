// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the wce-enhance Project.

#pragma once

#include <wce/config.hpp>
#include <wce/plane.hpp>

#include <limits>
#include <optional>

namespace wce {

/// A metric whose value is mathematically undefined for the given input,
/// e.g. CEF against a gray original.
class UndefinedMetric : public Error {
public:
    using Error::Error;
};

inline constexpr int kEntropyWindow = 9;
inline constexpr double kPsnrIdentical = std::numeric_limits<double>::infinity();

/// Entropy in bits of the 256-level histogram of each replicate-padded 9x9 window.
Plane local_entropy(const Plane& intensity);

/// Probability mass in levels 85..170, i.e. intensities in [1/3, 2/3].
double middle_third_mass(const Plane& intensity);

/// Mean local entropy weighted by the middle-third mass.
double irmle(const Plane& intensity);

/// Colorfulness from the opponent channels rg = r - g and yb = (r + g)/2 - b:
/// sqrt(var_rg + var_yb) + 0.3 * sqrt(mean_rg^2 + mean_yb^2).
double colorfulness(const RgbImage& img);

/// colorfulness(enh) / colorfulness(orig). Throws UndefinedMetric for a gray original.
double cef(const RgbImage& orig, const RgbImage& enh);

/// Per-pixel max(r, g, b).
Plane lightness(const RgbImage& img);

/// Averages rectangular blocks down to at most grid x grid samples. Block k
/// along an axis of length n covers [floor(k*n/m), floor((k+1)*n/m)) with m = min(n, grid).
Plane block_average(const Plane& plane, std::size_t grid);

/// Sum over ordered pairs (x, y) of [L(x) >= L(y)] != [Le(x) >= Le(y)].
/// O(m log m) via dominance counting.
std::size_t order_inversions(const Plane& ref, const Plane& test);

/// Lightness order error: 100 * inversions / m^2 on the block-averaged
/// lightness maps, m the downsampled pixel count.
double loe(const RgbImage& orig, const RgbImage& enh, const EnhanceConfig& cfg = {});

/// PSNR on the 8-bit scale; kPsnrIdentical when the MSE is zero.
double psnr(const RgbImage& orig, const RgbImage& enh, PsnrPlane plane = PsnrPlane::rgb);

inline constexpr int kSsimWindow = 11;
inline constexpr double kSsimSigma = 1.5;

/// Mean single-scale SSIM of the (r+g+b)/3 luminance on the 8-bit scale,
/// 11x11 Gaussian window (sigma 1.5), K1 = 0.01, K2 = 0.03, valid region only.
double ssim(const RgbImage& orig, const RgbImage& enh);

/// The SSIM map behind ssim(); (w-10) x (h-10) samples.
Plane ssim_map(const Plane& a, const Plane& b);

struct MetricsReport {
    double irmle_orig = 0.0;
    double irmle_enh = 0.0;
    std::optional<double> irmle_ratio; // empty when irmle_orig == 0
    std::optional<double> cef;         // empty for a gray original
    double loe = 0.0;
    double psnr = kPsnrIdentical;
    double ssim = 1.0;
    double wall_time_ms = 0.0;

    bool operator==(const MetricsReport&) const = default;
};

} // namespace wce
