// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the wce-enhance Project.

#include <wce/color_restore.hpp>

#include <wce/afgt.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

namespace wce {

namespace {

struct ClipRange {
    double lo;
    double hi;
};

std::size_t rank_index(std::size_t n, double q)
{
    const double r = std::ceil(q * static_cast<double>(n));
    const auto idx = r < 1.0 ? std::size_t{0} : static_cast<std::size_t>(r) - 1;
    return std::min(idx, n - 1);
}

ClipRange clip_range(std::span<const double> values, double fraction)
{
    std::vector<double> work(values.begin(), values.end());
    const std::size_t lo_idx = rank_index(work.size(), fraction);
    const std::size_t hi_idx = rank_index(work.size(), 1.0 - fraction);
    std::nth_element(work.begin(), work.begin() + static_cast<std::ptrdiff_t>(lo_idx), work.end());
    const double lo = work[lo_idx];
    // Everything right of lo_idx is >= lo, so the upper rank is found there.
    std::nth_element(work.begin() + static_cast<std::ptrdiff_t>(lo_idx), work.begin() + static_cast<std::ptrdiff_t>(hi_idx),
                     work.end());
    return {lo, work[hi_idx]};
}

RestoredSaturation clamped(const Plane& s_c)
{
    RestoredSaturation out{s_c};
    for (double& v : out.plane) {
        v = std::clamp(v, 0.0, 1.0);
    }
    return out;
}

} // namespace

Plane restore_saturation(const Plane& s_i, const SharpenedIntensity& r_s, const NormalizedIntensity& i_n,
                         const EnhanceConfig& cfg)
{
    require_same_shape(s_i, r_s.plane, "restore_saturation");
    require_same_shape(s_i, i_n.plane, "restore_saturation");
    Plane s_c(s_i.width(), s_i.height());
    for (std::size_t k = 0; k < s_i.size(); ++k) {
        const double in = i_n.plane[k];
        s_c[k] = in < cfg.division_epsilon ? s_i[k] : s_i[k] * (r_s.plane[k] / in);
    }
    return s_c;
}

double percentile_nearest_rank(std::span<const double> values, double q)
{
    if (values.empty()) {
        throw InvalidArgument("percentile of an empty sample");
    }
    return clip_range(values, q).lo;
}

RestoredSaturation robust_map(const Plane& s_c, const EnhanceConfig& cfg)
{
    if (s_c.empty()) {
        throw InvalidArgument("robust_map: empty plane");
    }
    const auto [lo, hi] = clip_range(s_c.values(), cfg.clip_fraction);
    Plane clipped = s_c;
    for (double& v : clipped) {
        v = std::clamp(v, lo, hi);
    }
    if (!(hi - lo >= kDegenerateRange)) {
        return clamped(clipped);
    }

    const double span = hi - lo;
    auto bin = [&](double v) { return level_of((v - lo) / span); };
    std::array<std::size_t, kHistogramBins> counts{};
    for (double v : clipped) {
        ++counts[bin(v)];
    }
    std::array<double, kHistogramBins> cdf{};
    std::size_t running = 0;
    const auto n = static_cast<double>(clipped.size());
    for (std::size_t k = 0; k < kHistogramBins; ++k) {
        running += counts[k];
        cdf[k] = static_cast<double>(running) / n;
    }
    RestoredSaturation out{std::move(clipped)};
    for (double& v : out.plane) {
        v = cdf[bin(v)];
    }
    return out;
}

RestoredSaturation minmax_map(const Plane& s_c)
{
    if (s_c.empty()) {
        throw InvalidArgument("minmax_map: empty plane");
    }
    const auto [lo_it, hi_it] = std::minmax_element(s_c.begin(), s_c.end());
    const double lo = *lo_it;
    const double hi = *hi_it;
    if (!(hi - lo >= kDegenerateRange)) {
        return clamped(s_c);
    }
    RestoredSaturation out{s_c};
    for (double& v : out.plane) {
        v = std::clamp((v - lo) / (hi - lo), 0.0, 1.0);
    }
    return out;
}

RestoredSaturation affine_after_clip_map(const Plane& s_c, const EnhanceConfig& cfg)
{
    if (s_c.empty()) {
        throw InvalidArgument("affine_after_clip_map: empty plane");
    }
    const auto [lo, hi] = clip_range(s_c.values(), cfg.clip_fraction);
    Plane clipped = s_c;
    for (double& v : clipped) {
        v = std::clamp(v, lo, hi);
    }
    if (!(hi - lo >= kDegenerateRange)) {
        return clamped(clipped);
    }
    for (double& v : clipped) {
        v = std::clamp((v - lo) / (hi - lo), 0.0, 1.0);
    }
    return {std::move(clipped)};
}

RestoredSaturation map_saturation(const Plane& s_c, const EnhanceConfig& cfg)
{
    switch (cfg.saturation_map) {
    case SaturationMap::minmax: return minmax_map(s_c);
    case SaturationMap::affine_after_clip: return affine_after_clip_map(s_c, cfg);
    case SaturationMap::robust: break;
    }
    return robust_map(s_c, cfg);
}

} // namespace wce
