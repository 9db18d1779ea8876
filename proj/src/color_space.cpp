// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the wce-enhance Project.

#include <wce/color_space.hpp>

#include <algorithm>
#include <cmath>

namespace wce {

namespace {

constexpr double kSector = kTwoPi / 3.0; // 120 degrees
constexpr double kSixty = kPi / 3.0;

double clamp01(double v) noexcept
{
    return std::clamp(v, 0.0, 1.0);
}

} // namespace

HsiPixel to_hsi(RgbPixel px) noexcept
{
    const double sum = px.r + px.g + px.b;
    HsiPixel out;
    out.i = sum / 3.0;
    if (!(sum > 0.0)) {
        return out;
    }
    const double lo = std::min({px.r, px.g, px.b});
    out.s = std::max(0.0, 1.0 - 3.0 * lo / sum);
    if (px.r == px.g && px.g == px.b) {
        out.s = 0.0;
        return out;
    }
    // atan2 form of the arccos hue; same angle, better conditioned near 0 and pi.
    double h = std::atan2(std::sqrt(3.0) * (px.g - px.b), 2.0 * px.r - px.g - px.b);
    if (h < 0.0) {
        h += kTwoPi;
    }
    if (h >= kTwoPi) {
        h -= kTwoPi;
    }
    out.h = h;
    return out;
}

RgbPixel to_rgb(HsiPixel px) noexcept
{
    const double i = px.i;
    const double s = px.s;
    if (!(s > 0.0)) {
        const double v = clamp01(i);
        return {v, v, v};
    }
    double h = std::fmod(px.h, kTwoPi);
    if (h < 0.0) {
        h += kTwoPi;
    }

    auto primary = [&](double angle) { return i * (1.0 + s * std::cos(angle) / std::cos(kSixty - angle)); };
    const double low = i * (1.0 - s);

    double r = 0.0;
    double g = 0.0;
    double b = 0.0;
    if (h < kSector) {
        b = low;
        r = primary(h);
        g = 3.0 * i - (r + b);
    } else if (h < 2.0 * kSector) {
        r = low;
        g = primary(h - kSector);
        b = 3.0 * i - (r + g);
    } else {
        g = low;
        b = primary(h - 2.0 * kSector);
        r = 3.0 * i - (g + b);
    }

    const double hi = std::max({r, g, b});
    if (hi > 1.0) {
        // Move toward (i,i,i); hue and intensity are invariant along this line.
        const double t = i < 1.0 ? (1.0 - i) / (hi - i) : 0.0;
        r = i + t * (r - i);
        g = i + t * (g - i);
        b = i + t * (b - i);
    }
    return {clamp01(r), clamp01(g), clamp01(b)};
}

HsiImage rgb_to_hsi(const RgbImage& img)
{
    const std::size_t w = img.width();
    const std::size_t h = img.height();
    HsiImage out{Plane(w, h), Plane(w, h), Plane(w, h)};
    for (std::size_t k = 0; k < img.pixel_count(); ++k) {
        const HsiPixel px = to_hsi({img.r[k], img.g[k], img.b[k]});
        out.h[k] = px.h;
        out.s[k] = px.s;
        out.i[k] = px.i;
    }
    return out;
}

RgbImage hsi_to_rgb(const HsiImage& img)
{
    require_same_shape(img.h, img.s, "hsi image");
    require_same_shape(img.h, img.i, "hsi image");
    RgbImage out(img.width(), img.height());
    for (std::size_t k = 0; k < img.i.size(); ++k) {
        const RgbPixel px = to_rgb({img.h[k], img.s[k], img.i[k]});
        out.r[k] = px.r;
        out.g[k] = px.g;
        out.b[k] = px.b;
    }
    return out;
}

NormalizedIntensity normalize_intensity(const Plane& intensity)
{
    if (intensity.empty()) {
        throw InvalidArgument("normalize_intensity: empty plane");
    }
    const double i_max = *std::max_element(intensity.begin(), intensity.end());
    NormalizedIntensity out{intensity, i_max};
    if (!(i_max > 0.0)) {
        out.i_max = 0.0;
        return out;
    }
    for (double& v : out.plane) {
        v /= i_max;
    }
    return out;
}

} // namespace wce
