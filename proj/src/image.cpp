#include "crossview/image.hpp"

#include <png.h>

#include <cmath>
#include <cstdio>
#include <memory>

namespace crossview {

ViewImage make_image(int height, int width, int channels, ViewKind kind,
                     double width_degrees, float fill) {
    if (height <= 0 || width <= 0 || channels <= 0)
        throw ValueError("make_image: non-positive dimensions");
    ViewImage img;
    img.height = height;
    img.width = width;
    img.channels = channels;
    img.kind = kind;
    img.width_degrees = width_degrees;
    img.pixels.assign(static_cast<std::size_t>(height) * width * channels, fill);
    return img;
}

void validate_image(const ViewImage& img) {
    if (img.height <= 0 || img.width <= 0 || img.channels <= 0)
        throw GeometryError("image has non-positive dimensions");
    if (img.pixels.size() !=
        static_cast<std::size_t>(img.height) * img.width * img.channels)
        throw GeometryError("pixel buffer size does not match dimensions");
    if (img.kind == ViewKind::satellite && img.height != img.width)
        throw GeometryError("satellite image must be square");
    if (img.kind == ViewKind::ground_panorama && img.width_degrees <= 0.0)
        throw GeometryError("ground view must span a positive angle");
    for (float v : img.pixels) {
        if (!(v >= 0.0f && v <= 1.0f))
            throw ValueError("pixel value outside [0,1]");
    }
}

float bilinear_sample_zero(const ViewImage& img, double fx, double fy, int c) {
    const int x0 = static_cast<int>(std::floor(fx));
    const int y0 = static_cast<int>(std::floor(fy));
    const double dx = fx - x0;
    const double dy = fy - y0;
    auto pick = [&](int y, int x) -> double {
        if (x < 0 || x >= img.width || y < 0 || y >= img.height) return 0.0;
        return img.at(y, x, c);
    };
    const double v = (1.0 - dy) * ((1.0 - dx) * pick(y0, x0) + dx * pick(y0, x0 + 1)) +
                     dy * ((1.0 - dx) * pick(y0 + 1, x0) + dx * pick(y0 + 1, x0 + 1));
    return static_cast<float>(v);
}

ViewImage resize_bilinear(const ViewImage& img, int out_h, int out_w) {
    if (out_h <= 0 || out_w <= 0)
        throw ValueError("resize_bilinear: non-positive output size");
    if (out_h == img.height && out_w == img.width) return img;
    ViewImage out = make_image(out_h, out_w, img.channels, img.kind, img.width_degrees);
    const double sy = static_cast<double>(img.height) / out_h;
    const double sx = static_cast<double>(img.width) / out_w;
    for (int y = 0; y < out_h; ++y) {
        double fy = (y + 0.5) * sy - 0.5;
        if (fy < 0) fy = 0;
        if (fy > img.height - 1) fy = img.height - 1;
        const int y0 = static_cast<int>(std::floor(fy));
        const int y1 = y0 + 1 < img.height ? y0 + 1 : y0;
        const double dy = fy - y0;
        for (int x = 0; x < out_w; ++x) {
            double fx = (x + 0.5) * sx - 0.5;
            if (fx < 0) fx = 0;
            if (fx > img.width - 1) fx = img.width - 1;
            const int x0 = static_cast<int>(std::floor(fx));
            const int x1 = x0 + 1 < img.width ? x0 + 1 : x0;
            const double dx = fx - x0;
            for (int c = 0; c < img.channels; ++c) {
                const double v =
                    (1.0 - dy) * ((1.0 - dx) * img.at(y0, x0, c) + dx * img.at(y0, x1, c)) +
                    dy * ((1.0 - dx) * img.at(y1, x0, c) + dx * img.at(y1, x1, c));
                out.at(y, x, c) = static_cast<float>(v);
            }
        }
    }
    return out;
}

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

}  // namespace

void write_png(const std::string& path, const ViewImage& img) {
    if (img.channels != 1 && img.channels != 3)
        throw IoError("write_png: only 1- or 3-channel images supported: " + path);
    FilePtr fp(std::fopen(path.c_str(), "wb"));
    if (!fp) throw IoError("write_png: cannot open " + path);

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw IoError("write_png: libpng init failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw IoError("write_png: libpng info init failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw IoError("write_png: libpng failure writing " + path);
    }
    png_init_io(png, fp.get());
    const int color = img.channels == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB;
    png_set_IHDR(png, info, img.width, img.height, 8, color, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);

    std::vector<png_byte> row(static_cast<std::size_t>(img.width) * img.channels);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x)
            for (int c = 0; c < img.channels; ++c)
                row[static_cast<std::size_t>(x) * img.channels + c] =
                    static_cast<png_byte>(unit_to_u8(img.at(y, x, c)));
        png_write_row(png, row.data());
    }
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

ViewImage read_png(const std::string& path, ViewKind kind, double width_degrees) {
    FilePtr fp(std::fopen(path.c_str(), "rb"));
    if (!fp) throw IoError("read_png: cannot open " + path);

    png_byte header[8];
    if (std::fread(header, 1, 8, fp.get()) != 8 || png_sig_cmp(header, 0, 8))
        throw IoError("read_png: not a PNG file: " + path);

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw IoError("read_png: libpng init failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw IoError("read_png: libpng info init failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw IoError("read_png: libpng failure reading " + path);
    }
    png_init_io(png, fp.get());
    png_set_sig_bytes(png, 8);
    png_read_info(png, info);

    const png_uint_32 w = png_get_image_width(png, info);
    const png_uint_32 h = png_get_image_height(png, info);
    const int color = png_get_color_type(png, info);
    const int depth = png_get_bit_depth(png, info);

    if (depth == 16) png_set_strip_16(png);
    if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color == PNG_COLOR_TYPE_GRAY && depth < 8) png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    if (color & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(png);
    png_read_update_info(png, info);

    const int channels = png_get_channels(png, info);
    if (channels != 1 && channels != 3) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw IoError("read_png: unsupported channel count in " + path);
    }

    ViewImage img = make_image(static_cast<int>(h), static_cast<int>(w), channels,
                               kind, width_degrees);
    std::vector<png_byte> row(static_cast<std::size_t>(w) * channels);
    for (png_uint_32 y = 0; y < h; ++y) {
        png_read_row(png, row.data(), nullptr);
        for (png_uint_32 x = 0; x < w; ++x)
            for (int c = 0; c < channels; ++c)
                img.at(static_cast<int>(y), static_cast<int>(x), c) =
                    u8_to_unit(row[static_cast<std::size_t>(x) * channels + c]);
    }
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);
    return img;
}

}  // namespace crossview
