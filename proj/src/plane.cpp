// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the wce-enhance Project.

#include <wce/plane.hpp>

#include <cmath>

namespace wce {

Plane::Plane(std::size_t width, std::size_t height, double fill)
    : width_(width), height_(height), values_(width * height, fill)
{
}

Plane::Plane(std::size_t width, std::size_t height, std::vector<double> values)
    : width_(width), height_(height), values_(std::move(values))
{
    if (values_.size() != width_ * height_) {
        throw DimensionMismatch("plane: " + std::to_string(values_.size()) + " samples for a "
                                + std::to_string(width_) + "x" + std::to_string(height_) + " plane");
    }
}

void require_same_shape(const Plane& a, const Plane& b, const char* what)
{
    if (!a.same_shape(b)) {
        throw DimensionMismatch(std::string(what) + ": " + std::to_string(a.width()) + "x"
                                + std::to_string(a.height()) + " vs " + std::to_string(b.width())
                                + "x" + std::to_string(b.height()));
    }
}

RgbImage::RgbImage(Plane red, Plane green, Plane blue)
    : r(std::move(red)), g(std::move(green)), b(std::move(blue))
{
    require_same_shape(r, g, "rgb image");
    require_same_shape(r, b, "rgb image");
}

void validate(const RgbImage& img)
{
    require_same_shape(img.r, img.g, "rgb image");
    require_same_shape(img.r, img.b, "rgb image");
    for (const Plane* p : {&img.r, &img.g, &img.b}) {
        for (double v : *p) {
            if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
                throw InvalidArgument("rgb image: sample outside [0,1]");
            }
        }
    }
}

void require_same_shape(const RgbImage& a, const RgbImage& b, const char* what)
{
    require_same_shape(a.r, b.r, what);
}

Plane mean_intensity(const RgbImage& img)
{
    Plane out(img.width(), img.height());
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = (img.r[k] + img.g[k] + img.b[k]) / 3.0;
    }
    return out;
}

} // namespace wce
