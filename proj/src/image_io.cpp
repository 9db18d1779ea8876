// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the wce-enhance Project.

#include <wce/image_io.hpp>

#include <png.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <csetjmp>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>

namespace wce {

namespace fs = std::filesystem;

namespace {

constexpr std::array<unsigned char, 8> kPngSignature = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};

std::vector<unsigned char> read_all(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ImageIoError(IoErrorKind::unreadable, path, "cannot open file");
    }
    std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw ImageIoError(IoErrorKind::unreadable, path, "read failed");
    }
    return bytes;
}

RgbImage from_interleaved(std::size_t width, std::size_t height, std::size_t channels,
                          const unsigned char* data)
{
    RgbImage img(width, height);
    for (std::size_t k = 0; k < width * height; ++k) {
        const unsigned char* px = data + k * channels;
        img.r[k] = decode_sample(px[0]);
        img.g[k] = decode_sample(px[1]);
        img.b[k] = decode_sample(px[2]);
    }
    return img;
}

std::vector<unsigned char> to_interleaved_rgb(const RgbImage& img)
{
    std::vector<unsigned char> out(img.pixel_count() * 3);
    for (std::size_t k = 0; k < img.pixel_count(); ++k) {
        out[3 * k + 0] = encode_sample(img.r[k]);
        out[3 * k + 1] = encode_sample(img.g[k]);
        out[3 * k + 2] = encode_sample(img.b[k]);
    }
    return out;
}

RgbImage decode_png(const fs::path& path, const std::vector<unsigned char>& bytes)
{
    png_image image;
    std::memset(&image, 0, sizeof(image));
    image.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_memory(&image, bytes.data(), bytes.size())) {
        std::string msg = image.message;
        png_image_free(&image);
        throw ImageIoError(IoErrorKind::unreadable, path, "corrupt PNG: " + msg);
    }
    if (image.width == 0 || image.height == 0) {
        png_image_free(&image);
        throw ImageIoError(IoErrorKind::zero_dimension, path, "image has no pixels");
    }
    // RGBA so that alpha is dropped rather than composited.
    image.format = PNG_FORMAT_RGBA;
    std::vector<unsigned char> buffer(PNG_IMAGE_SIZE(image));
    if (!png_image_finish_read(&image, nullptr, buffer.data(), 0, nullptr)) {
        std::string msg = image.message;
        png_image_free(&image);
        throw ImageIoError(IoErrorKind::unreadable, path, "corrupt PNG: " + msg);
    }
    return from_interleaved(image.width, image.height, 4, buffer.data());
}

// Binary PPM (P6) with maxval 255.
RgbImage decode_ppm(const fs::path& path, const std::vector<unsigned char>& bytes)
{
    std::size_t pos = 2;
    auto next_token = [&]() -> long {
        while (pos < bytes.size()) {
            if (bytes[pos] == '#') {
                while (pos < bytes.size() && bytes[pos] != '\n') {
                    ++pos;
                }
            } else if (std::isspace(bytes[pos])) {
                ++pos;
            } else {
                break;
            }
        }
        long value = 0;
        std::size_t digits = 0;
        while (pos < bytes.size() && std::isdigit(bytes[pos]) && digits < 9) {
            value = value * 10 + (bytes[pos] - '0');
            ++pos;
            ++digits;
        }
        if (digits == 0) {
            throw ImageIoError(IoErrorKind::unreadable, path, "malformed PPM header");
        }
        return value;
    };
    const long width = next_token();
    const long height = next_token();
    const long maxval = next_token();
    if (pos >= bytes.size() || !std::isspace(bytes[pos])) {
        throw ImageIoError(IoErrorKind::unreadable, path, "malformed PPM header");
    }
    ++pos;
    if (width == 0 || height == 0) {
        throw ImageIoError(IoErrorKind::zero_dimension, path, "image has no pixels");
    }
    if (maxval != 255) {
        throw ImageIoError(IoErrorKind::unsupported_format, path, "only 8-bit PPM is supported");
    }
    const auto w = static_cast<std::size_t>(width);
    const auto h = static_cast<std::size_t>(height);
    if (bytes.size() - pos < w * h * 3) {
        throw ImageIoError(IoErrorKind::unreadable, path, "truncated PPM data");
    }
    return from_interleaved(w, h, 3, bytes.data() + pos);
}

std::string lower_extension(const fs::path& path)
{
    std::string ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    return ext;
}

void append_bytes(png_structp png, png_bytep data, png_size_t length)
{
    auto* out = static_cast<std::vector<unsigned char>*>(png_get_io_ptr(png));
    out->insert(out->end(), data, data + length);
}

void flush_nothing(png_structp) {}

// Low-level encoder so the zlib level can be set; libpng reports errors by
// longjmp, so this frame holds no objects with destructors.
bool encode_png(std::vector<unsigned char>* encoded, png_uint_32 width, png_uint_32 height, int color_type,
                const unsigned char* data, std::size_t row_bytes)
{
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (png == nullptr) {
        return false;
    }
    png_infop info = png_create_info_struct(png);
    if (info == nullptr || setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        return false;
    }
    png_set_write_fn(png, encoded, append_bytes, flush_nothing);
    png_set_compression_level(png, 2);
    png_set_filter(png, 0, PNG_FILTER_SUB);
    png_set_IHDR(png, info, width, height, 8, color_type, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                 PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    for (png_uint_32 y = 0; y < height; ++y) {
        png_write_row(png, data + static_cast<std::size_t>(y) * row_bytes);
    }
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
    return true;
}

void write_png(const fs::path& path, std::size_t width, std::size_t height, int color_type, std::size_t channels,
               const std::vector<unsigned char>& data)
{
    std::vector<unsigned char> encoded;
    encoded.reserve(data.size() / 2);
    if (!encode_png(&encoded, static_cast<png_uint_32>(width), static_cast<png_uint_32>(height), color_type,
                    data.data(), width * channels)) {
        throw ImageIoError(IoErrorKind::unwritable, path, "PNG encode failed");
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw ImageIoError(IoErrorKind::unwritable, path, "cannot open for writing");
    }
    out.write(reinterpret_cast<const char*>(encoded.data()), static_cast<std::streamsize>(encoded.size()));
    if (!out) {
        throw ImageIoError(IoErrorKind::unwritable, path, "write failed");
    }
}

} // namespace

const char* to_string(IoErrorKind kind) noexcept
{
    switch (kind) {
    case IoErrorKind::unreadable: return "unreadable";
    case IoErrorKind::unsupported_format: return "unsupported_format";
    case IoErrorKind::zero_dimension: return "zero_dimension";
    case IoErrorKind::unwritable: return "unwritable";
    }
    return "unknown";
}

ImageIoError::ImageIoError(IoErrorKind kind, const fs::path& path, const std::string& detail)
    : Error(path.string() + ": " + to_string(kind) + ": " + detail), kind_(kind)
{
}

std::uint8_t encode_sample(double v) noexcept
{
    if (!(v > 0.0)) {
        return 0;
    }
    const double scaled = std::floor(v * 255.0 + 0.5);
    return static_cast<std::uint8_t>(std::min(scaled, 255.0));
}

RgbImage load_image(const fs::path& path)
{
    std::error_code ec;
    if (!fs::is_regular_file(path, ec)) {
        throw ImageIoError(IoErrorKind::unreadable, path, "not a regular file");
    }
    const std::vector<unsigned char> bytes = read_all(path);
    if (bytes.size() >= kPngSignature.size()
        && std::equal(kPngSignature.begin(), kPngSignature.end(), bytes.begin())) {
        return decode_png(path, bytes);
    }
    if (bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] == '6') {
        return decode_ppm(path, bytes);
    }
    throw ImageIoError(IoErrorKind::unsupported_format, path, "not a PNG or binary PPM file");
}

void save_image(const RgbImage& img, const fs::path& path)
{
    validate(img);
    if (img.pixel_count() == 0) {
        throw ImageIoError(IoErrorKind::zero_dimension, path, "image has no pixels");
    }
    const std::string ext = lower_extension(path);
    if (ext == ".png") {
        write_png(path, img.width(), img.height(), PNG_COLOR_TYPE_RGB, 3, to_interleaved_rgb(img));
    } else if (ext == ".ppm") {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw ImageIoError(IoErrorKind::unwritable, path, "cannot open for writing");
        }
        out << "P6\n" << img.width() << ' ' << img.height() << "\n255\n";
        const auto data = to_interleaved_rgb(img);
        out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
        if (!out) {
            throw ImageIoError(IoErrorKind::unwritable, path, "write failed");
        }
    } else {
        throw ImageIoError(IoErrorKind::unsupported_format, path, "output must be .png or .ppm");
    }
}

RgbImage quantize_8bit(const RgbImage& img)
{
    RgbImage out(img.width(), img.height());
    for (std::size_t k = 0; k < img.pixel_count(); ++k) {
        out.r[k] = decode_sample(encode_sample(img.r[k]));
        out.g[k] = decode_sample(encode_sample(img.g[k]));
        out.b[k] = decode_sample(encode_sample(img.b[k]));
    }
    return out;
}

void save_plane(const Plane& plane, const fs::path& path)
{
    if (plane.empty()) {
        throw ImageIoError(IoErrorKind::zero_dimension, path, "plane has no pixels");
    }
    std::vector<unsigned char> data(plane.size());
    std::transform(plane.begin(), plane.end(), data.begin(), [](double v) { return encode_sample(v); });
    write_png(path, plane.width(), plane.height(), PNG_COLOR_TYPE_GRAY, 1, data);
}

} // namespace wce
