// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the wce-enhance Project.

#include "fixtures.hpp"

#include <wce/image_io.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace wce::testing {

RgbImage random_image(Rng& rng, std::size_t width, std::size_t height, double lo, double hi)
{
    RgbImage img(width, height);
    for (std::size_t k = 0; k < img.pixel_count(); ++k) {
        img.r[k] = rng.uniform(lo, hi);
        img.g[k] = rng.uniform(lo, hi);
        img.b[k] = rng.uniform(lo, hi);
    }
    return img;
}

Plane random_plane(Rng& rng, std::size_t width, std::size_t height, double lo, double hi)
{
    Plane p(width, height);
    for (double& v : p) {
        v = rng.uniform(lo, hi);
    }
    return p;
}

RgbImage random_image_8bit(Rng& rng, std::size_t width, std::size_t height)
{
    RgbImage img(width, height);
    for (std::size_t k = 0; k < img.pixel_count(); ++k) {
        img.r[k] = decode_sample(static_cast<std::uint8_t>(rng.index(256)));
        img.g[k] = decode_sample(static_cast<std::uint8_t>(rng.index(256)));
        img.b[k] = decode_sample(static_cast<std::uint8_t>(rng.index(256)));
    }
    return img;
}

RgbImage synthetic_wce_fixture(std::uint64_t seed, std::size_t width, std::size_t height)
{
    Rng rng(seed);
    const double w = static_cast<double>(width);
    const double h = static_cast<double>(height);

    // Light source position and falloff.
    const double cx = w * rng.uniform(0.3, 0.7);
    const double cy = h * rng.uniform(0.3, 0.7);
    const double spread = std::min(w, h) * rng.uniform(0.28, 0.40);
    const double gradient_angle = rng.uniform(0.0, 6.283185307179586);
    const double gx = std::cos(gradient_angle);
    const double gy = std::sin(gradient_angle);

    // Mucosa base color and the colored patch.
    const double base_r = rng.uniform(0.75, 0.90);
    const double base_g = rng.uniform(0.38, 0.50);
    const double base_b = rng.uniform(0.28, 0.38);
    const double patch_x = w * rng.uniform(0.2, 0.6);
    const double patch_y = h * rng.uniform(0.2, 0.6);
    const double patch_w = w * rng.uniform(0.2, 0.3);
    const double patch_h = h * rng.uniform(0.2, 0.3);
    const double patch_r = rng.uniform(0.55, 0.75);
    const double patch_g = rng.uniform(0.55, 0.70);
    const double patch_b = rng.uniform(0.15, 0.30);

    // Mucosal folds: a few oriented sinusoids.
    struct Wave {
        double kx, ky, phase, amp;
    };
    Wave waves[4];
    for (Wave& wave : waves) {
        const double angle = rng.uniform(0.0, 3.141592653589793);
        const double freq = rng.uniform(0.04, 0.15);
        wave = {freq * std::cos(angle), freq * std::sin(angle), rng.uniform(0.0, 6.283185307179586),
                rng.uniform(0.02, 0.06)};
    }

    const double tint_angle = rng.uniform(0.0, 3.141592653589793);
    const double tint_kx = 0.015 * std::cos(tint_angle);
    const double tint_ky = 0.015 * std::sin(tint_angle);
    const double tint_phase = rng.uniform(0.0, 6.283185307179586);

    const double spec_x = w * rng.uniform(0.35, 0.65);
    const double spec_y = h * rng.uniform(0.35, 0.65);
    const double spec_radius = std::min(w, h) * 0.025;

    RgbImage img(width, height);
    for (std::size_t y = 0; y < height; ++y) {
        for (std::size_t x = 0; x < width; ++x) {
            const double fx = static_cast<double>(x);
            const double fy = static_cast<double>(y);
            const double d2 = (fx - cx) * (fx - cx) + (fy - cy) * (fy - cy);
            const double ramp = 0.5 + 0.5 * (gx * (fx / w - 0.5) + gy * (fy / h - 0.5));
            const double illum = (0.18 + 0.60 * std::exp(-d2 / (2.0 * spread * spread))) * (0.6 + 0.4 * ramp);

            double texture = 1.0;
            for (const Wave& wave : waves) {
                texture += wave.amp * std::sin(wave.kx * fx + wave.ky * fy + wave.phase);
            }
            texture += rng.uniform(-0.03, 0.03);

            // Mucosa color drifts between deep red and pale pink.
            const double tint = 0.15 * std::sin(tint_kx * fx + tint_ky * fy + tint_phase);
            double r = base_r;
            double g = std::clamp(base_g + tint, 0.0, 1.0);
            double b = std::clamp(base_b + tint, 0.0, 1.0);
            const double px = (fx - patch_x) / patch_w;
            const double py = (fy - patch_y) / patch_h;
            if (px >= 0.0 && px <= 1.0 && py >= 0.0 && py <= 1.0) {
                const double dots = 0.5 + 0.5 * std::sin(fx * 0.5) * std::sin(fy * 0.5);
                r = patch_r * (0.8 + 0.2 * dots);
                g = patch_g * (0.7 + 0.3 * dots);
                b = patch_b;
            }

            double specular = 0.0;
            const double sd2 = (fx - spec_x) * (fx - spec_x) + (fy - spec_y) * (fy - spec_y);
            if (sd2 < spec_radius * spec_radius) {
                specular = 0.9 * (1.0 - std::sqrt(sd2) / spec_radius);
            }

            // Circular field of view; the corners outside it are near black.
            const double rx = (fx + 0.5) / w - 0.5;
            const double ry = (fy + 0.5) / h - 0.5;
            const double fov = std::sqrt(rx * rx + ry * ry) < 0.5 ? 1.0 : 0.02;

            const double gain = illum * texture * fov;
            img.r(x, y) = std::clamp(r * gain + specular, 0.0, 1.0);
            img.g(x, y) = std::clamp(g * gain + specular, 0.0, 1.0);
            img.b(x, y) = std::clamp(b * gain + specular, 0.0, 1.0);
        }
    }
    return quantize_8bit(img);
}

std::filesystem::path scratch_dir(const std::string& name)
{
    const auto dir = std::filesystem::temp_directory_path() / ("wce_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

std::string fixture_name(std::uint64_t seed)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "wce_fixture_%02u.png", static_cast<unsigned>(seed));
    return buf;
}

} // namespace wce::testing
