// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the wce-enhance Project.

#include <wce/unsharp.hpp>

#include <algorithm>
#include <cmath>

namespace wce {

GaussianKernel::GaussianKernel(int size, double sigma) : size_(size), sigma_(sigma)
{
    if (size < 3 || size % 2 == 0) {
        throw InvalidArgument("gaussian kernel: size must be odd and >= 3");
    }
    if (!std::isfinite(sigma) || !(sigma > 0.0)) {
        throw InvalidArgument("gaussian kernel: sigma must be > 0");
    }
    const int r = size / 2;
    weights_.resize(static_cast<std::size_t>(size) * static_cast<std::size_t>(size));
    double sum = 0.0;
    for (int dy = -r; dy <= r; ++dy) {
        for (int dx = -r; dx <= r; ++dx) {
            const double w = std::exp(-static_cast<double>(dx * dx + dy * dy) / (2.0 * sigma * sigma));
            weights_[static_cast<std::size_t>((dy + r) * size + (dx + r))] = w;
            sum += w;
        }
    }
    for (double& w : weights_) {
        w /= sum;
    }
}

GaussianKernel gaussian_kernel(int size, double sigma)
{
    return GaussianKernel(size, sigma);
}

namespace {

// Weighted sum of (neighbor - center) per pixel. Because the weights sum to
// one, center + deviation is the low-pass value, and constant regions give
// exactly zero.
Plane lowpass_deviation(const Plane& plane, const GaussianKernel& kernel)
{
    if (plane.empty()) {
        throw InvalidArgument("convolve: empty plane");
    }
    const auto w = static_cast<long>(plane.width());
    const auto h = static_cast<long>(plane.height());
    const int r = kernel.radius();
    const int size = kernel.size();
    const auto& weights = kernel.weights();

    // Clamped column index for each output x and tap.
    std::vector<std::size_t> cols(static_cast<std::size_t>(w * size));
    for (long x = 0; x < w; ++x) {
        for (int t = 0; t < size; ++t) {
            cols[static_cast<std::size_t>(x * size + t)] =
                static_cast<std::size_t>(std::clamp(x + t - r, 0L, w - 1));
        }
    }

    Plane out(plane.width(), plane.height());
    for (long y = 0; y < h; ++y) {
        for (long x = 0; x < w; ++x) {
            const double center = plane(static_cast<std::size_t>(x), static_cast<std::size_t>(y));
            const std::size_t* cx = &cols[static_cast<std::size_t>(x * size)];
            double acc = 0.0;
            for (int ty = 0; ty < size; ++ty) {
                const auto sy = static_cast<std::size_t>(std::clamp(y + ty - r, 0L, h - 1));
                const double* row = plane.values().data() + sy * plane.width();
                const double* wrow = weights.data() + static_cast<std::size_t>(ty * size);
                for (int tx = 0; tx < size; ++tx) {
                    acc += wrow[tx] * (row[cx[tx]] - center);
                }
            }
            out(static_cast<std::size_t>(x), static_cast<std::size_t>(y)) = acc;
        }
    }
    return out;
}

} // namespace

Plane convolve(const Plane& plane, const GaussianKernel& kernel)
{
    Plane out = lowpass_deviation(plane, kernel);
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] += plane[k];
    }
    return out;
}

SharpenedIntensity unsharp_enhance(const Plane& l, const Plane& i_n, const EnhanceConfig& cfg)
{
    require_same_shape(l, i_n, "unsharp_enhance");
    // i_n - lowpass(i_n) is the negated deviation.
    const Plane deviation = lowpass_deviation(i_n, gaussian_kernel(cfg.gaussian_size, cfg.gaussian_sigma));
    SharpenedIntensity out{Plane(l.width(), l.height())};
    for (std::size_t k = 0; k < l.size(); ++k) {
        out.plane[k] = std::clamp(l[k] - cfg.um_gain * deviation[k], 0.0, 1.0);
    }
    return out;
}

} // namespace wce
