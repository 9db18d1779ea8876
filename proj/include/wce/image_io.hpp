// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the wce-enhance Project.

#pragma once

#include <wce/plane.hpp>

#include <cstdint>
#include <filesystem>

namespace wce {

enum class IoErrorKind {
    unreadable,         // missing file, I/O failure or a corrupt stream
    unsupported_format, // not PNG/PPM, or an unsupported PNG/PPM variant
    zero_dimension,
    unwritable,
};

const char* to_string(IoErrorKind kind) noexcept;

class ImageIoError : public Error {
public:
    ImageIoError(IoErrorKind kind, const std::filesystem::path& path, const std::string& detail);

    IoErrorKind kind() const noexcept { return kind_; }

private:
    IoErrorKind kind_;
};

/// Byte value v decodes to v/255.
inline double decode_sample(std::uint8_t v) noexcept { return static_cast<double>(v) / 255.0; }

/// Round half up on the 0..255 scale, then clamp.
std::uint8_t encode_sample(double v) noexcept;

/// Loads an 8-bit PNG (gray, RGB, palette; alpha dropped) or binary PPM.
RgbImage load_image(const std::filesystem::path& path);

/// Writes PNG or binary PPM, chosen by extension.
void save_image(const RgbImage& img, const std::filesystem::path& path);

/// Applies the encode/decode pair in memory, i.e. what a save/load round trip yields.
RgbImage quantize_8bit(const RgbImage& img);

/// Saves a single plane as a gray PNG (values clamped to [0,1]).
void save_plane(const Plane& plane, const std::filesystem::path& path);

} // namespace wce
