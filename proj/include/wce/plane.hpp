// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the wce-enhance Project.

#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wce {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two images or planes that must share a shape do not.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// An argument violates a documented precondition.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Row-major plane of real samples.
class Plane {
public:
    Plane() = default;
    Plane(std::size_t width, std::size_t height, double fill = 0.0);
    Plane(std::size_t width, std::size_t height, std::vector<double> values);

    std::size_t width() const noexcept { return width_; }
    std::size_t height() const noexcept { return height_; }
    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }

    double& operator()(std::size_t x, std::size_t y) noexcept { return values_[y * width_ + x]; }
    double operator()(std::size_t x, std::size_t y) const noexcept { return values_[y * width_ + x]; }
    double& operator[](std::size_t idx) noexcept { return values_[idx]; }
    double operator[](std::size_t idx) const noexcept { return values_[idx]; }

    std::span<double> values() noexcept { return values_; }
    std::span<const double> values() const noexcept { return values_; }

    auto begin() noexcept { return values_.begin(); }
    auto end() noexcept { return values_.end(); }
    auto begin() const noexcept { return values_.begin(); }
    auto end() const noexcept { return values_.end(); }

    bool same_shape(const Plane& other) const noexcept
    {
        return width_ == other.width_ && height_ == other.height_;
    }

    bool operator==(const Plane&) const = default;

private:
    std::size_t width_ = 0;
    std::size_t height_ = 0;
    std::vector<double> values_;
};

/// Throws DimensionMismatch naming `what` when the shapes differ.
void require_same_shape(const Plane& a, const Plane& b, const char* what);

/// RGB image with one plane per channel, samples in [0,1].
struct RgbImage {
    Plane r;
    Plane g;
    Plane b;

    RgbImage() = default;
    RgbImage(std::size_t width, std::size_t height, double fill = 0.0)
        : r(width, height, fill), g(width, height, fill), b(width, height, fill)
    {
    }
    RgbImage(Plane red, Plane green, Plane blue);

    std::size_t width() const noexcept { return r.width(); }
    std::size_t height() const noexcept { return r.height(); }
    std::size_t pixel_count() const noexcept { return r.size(); }

    bool operator==(const RgbImage&) const = default;
};

/// Checks plane shapes agree and every sample is finite and in [0,1].
void validate(const RgbImage& img);

void require_same_shape(const RgbImage& a, const RgbImage& b, const char* what);

/// Per-pixel (r+g+b)/3.
Plane mean_intensity(const RgbImage& img);

} // namespace wce
