// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the wce-enhance Project.

#pragma once

#include <wce/config.hpp>
#include <wce/plane.hpp>

#include <vector>

namespace wce {

/// Normalized square Gaussian, weights stored row-major.
class GaussianKernel {
public:
    GaussianKernel(int size, double sigma);

    int size() const noexcept { return size_; }
    int radius() const noexcept { return size_ / 2; }
    double sigma() const noexcept { return sigma_; }

    /// Weight at offset (dx, dy) from the center.
    double weight(int dx, int dy) const noexcept
    {
        return weights_[static_cast<std::size_t>((dy + radius()) * size_ + (dx + radius()))];
    }
    const std::vector<double>& weights() const noexcept { return weights_; }

private:
    int size_;
    double sigma_;
    std::vector<double> weights_;
};

/// Throws InvalidArgument unless size is odd and >= 3 and sigma > 0.
GaussianKernel gaussian_kernel(int size, double sigma);

/// 2-D correlation with clamp-to-edge borders.
Plane convolve(const Plane& plane, const GaussianKernel& kernel);

struct SharpenedIntensity {
    Plane plane;
};

/// l + gain * (i_n - lowpass(i_n)), clamped to [0,1].
SharpenedIntensity unsharp_enhance(const Plane& l, const Plane& i_n, const EnhanceConfig& cfg);

} // namespace wce
