// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the wce-enhance Project.

#include <wce/afgt.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cmath>
#include <numeric>
#include <vector>

namespace wce {

std::size_t level_of(double v) noexcept
{
    if (!(v > 0.0)) {
        return 0;
    }
    const double k = std::floor(v * 255.0 + 0.5);
    return k >= 255.0 ? 255 : static_cast<std::size_t>(k);
}

LevelTable compute_pdf(std::span<const double> plane)
{
    if (plane.empty()) {
        throw InvalidArgument("compute_pdf: empty plane");
    }
    std::array<std::size_t, kHistogramBins> counts{};
    for (double v : plane) {
        ++counts[level_of(v)];
    }
    LevelTable pdf{};
    const auto n = static_cast<double>(plane.size());
    for (std::size_t k = 0; k < kHistogramBins; ++k) {
        pdf[k] = static_cast<double>(counts[k]) / n;
    }
    return pdf;
}

LevelTable compute_pdf(const NormalizedIntensity& in)
{
    return compute_pdf(in.plane.values());
}

double mean_level(const LevelTable& pdf) noexcept
{
    double mean = 0.0;
    for (std::size_t k = 0; k < kHistogramBins; ++k) {
        mean += level_value(k) * pdf[k];
    }
    return mean;
}

double compute_tau(const LevelTable& pdf, double i_max_scaled) noexcept
{
    const double mean = mean_level(pdf);
    double var = 0.0;
    for (std::size_t k = 0; k < kHistogramBins; ++k) {
        const double d = level_value(k) - mean;
        var += d * d * pdf[k];
    }
    return i_max_scaled * std::sqrt(var) * 0.01;
}

LevelTable smooth_pdf(const LevelTable& pdf, double tau) noexcept
{
    const auto [lo_it, hi_it] = std::minmax_element(pdf.begin(), pdf.end());
    const double lo = *lo_it;
    const double hi = *hi_it;
    if (!(tau > 0.0) || !(hi > lo)) {
        return pdf;
    }
    LevelTable out{};
    for (std::size_t k = 0; k < kHistogramBins; ++k) {
        out[k] = hi * std::pow((pdf[k] - lo) / (hi - lo), tau);
    }
    return out;
}

LevelTable compute_cdf_s(const LevelTable& pdf_s, const LevelTable& fallback_pdf) noexcept
{
    const LevelTable& source =
        std::accumulate(pdf_s.begin(), pdf_s.end(), 0.0) > 0.0 ? pdf_s : fallback_pdf;
    LevelTable cdf{};
    std::partial_sum(source.begin(), source.end(), cdf.begin());
    const double total = cdf.back();
    if (!(total > 0.0)) {
        cdf.fill(1.0);
        return cdf;
    }
    for (double& c : cdf) {
        c /= total;
    }
    return cdf;
}

LevelTable compute_cdf_s(const LevelTable& pdf_s) noexcept
{
    return compute_cdf_s(pdf_s, pdf_s);
}

LevelTable compute_beta(const LevelTable& cdf_s) noexcept
{
    LevelTable beta{};
    std::transform(cdf_s.begin(), cdf_s.end(), beta.begin(), [](double c) { return 1.0 / (1.0 + c); });
    return beta;
}

double gamma_of(double v) noexcept
{
    return 1.0 + std::atan(v - 0.5);
}

double fraction_gamma(double v, double gamma, double beta) noexcept
{
    const double g = std::pow(v, gamma);
    return std::pow(g / (2.0 - g), beta);
}

IntensityHistogram analyze_histogram(const NormalizedIntensity& in, TauImaxScale scale)
{
    IntensityHistogram hist;
    hist.pdf = compute_pdf(in);
    const auto [lo, hi] = std::minmax_element(hist.pdf.begin(), hist.pdf.end());
    hist.pdf_min = *lo;
    hist.pdf_max = *hi;
    hist.r_bar = mean_level(hist.pdf);
    const double i_max_scaled = scale == TauImaxScale::native255 ? in.i_max * 255.0 : in.i_max;
    hist.tau = compute_tau(hist.pdf, i_max_scaled);
    hist.pdf_s = smooth_pdf(hist.pdf, hist.tau);
    hist.cdf_s = compute_cdf_s(hist.pdf_s, hist.pdf);
    hist.beta = compute_beta(hist.cdf_s);
    return hist;
}

AfgtResult apply_afgt(const NormalizedIntensity& in, TauImaxScale scale)
{
    AfgtResult result{in.plane, analyze_histogram(in, scale)};
    const auto values = in.plane.values();
    const bool constant =
        std::adjacent_find(values.begin(), values.end(), std::not_equal_to<>()) == values.end();
    if (in.degenerate() || constant) {
        return result;
    }
    const LevelTable& beta = result.histogram.beta;
    auto transfer = [&](double v) { return std::clamp(fraction_gamma(v, gamma_of(v), beta[level_of(v)]), 0.0, 1.0); };

    // Direct-mapped cache on the exact input value. Planes decoded from 8-bit
    // images hold a few hundred distinct values, so most pixels hit.
    constexpr std::size_t kSlots = 4096;
    struct Slot {
        double key = -1.0;
        double value = 0.0;
    };
    std::vector<Slot> cache(kSlots);
    for (double& v : result.l_plane) {
        const std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
        Slot& slot = cache[((bits * 0x9E3779B97F4A7C15ull) >> 52) & (kSlots - 1)];
        if (slot.key != v) {
            slot = {v, transfer(v)};
        }
        v = slot.value;
    }
    return result;
}

} // namespace wce
