#pragma once

#include <string>
#include <vector>

#include "crossview/error.hpp"

namespace crossview {

enum class ViewKind { ground_panorama, satellite };

// Dense raster with pixel values in [0,1], interleaved H x W x C.
// For ground views, width_degrees is the azimuthal span covered by the
// raster: 360 for a full panorama, theta for a limited-FoV crop. Column x
// of a full panorama corresponds to azimuth 360*x/width degrees, with
// column 0 pointing north. width_degrees is unused for satellite views.
struct ViewImage {
    int height = 0;
    int width = 0;
    int channels = 0;
    ViewKind kind = ViewKind::ground_panorama;
    double width_degrees = 360.0;
    std::vector<float> pixels;

    float& at(int y, int x, int c) {
        return pixels[(static_cast<std::size_t>(y) * width + x) * channels + c];
    }
    float at(int y, int x, int c) const {
        return pixels[(static_cast<std::size_t>(y) * width + x) * channels + c];
    }
    bool same_shape(const ViewImage& o) const {
        return height == o.height && width == o.width && channels == o.channels;
    }
};

ViewImage make_image(int height, int width, int channels, ViewKind kind,
                     double width_degrees = 360.0, float fill = 0.0f);

// Throws GeometryError / ValueError if the invariants do not hold
// (value range, square satellite, positive panorama span).
void validate_image(const ViewImage& img);

// Bilinear sample at continuous position (fx, fy) in pixel-center
// coordinates; positions outside the raster read as zero.
float bilinear_sample_zero(const ViewImage& img, double fx, double fy, int c);

// Bilinear resize with half-pixel alignment and edge clamping.
ViewImage resize_bilinear(const ViewImage& img, int out_h, int out_w);

// 8-bit PNG I/O; values map linearly between [0,1] and 0..255.
// Grayscale files load as 1 channel, everything else as 3.
void write_png(const std::string& path, const ViewImage& img);
ViewImage read_png(const std::string& path, ViewKind kind,
                   double width_degrees = 360.0);

inline float u8_to_unit(int v) { return static_cast<float>(v) / 255.0f; }
inline int unit_to_u8(float v) {
    const float c = v < 0.0f ? 0.0f : (v > 1.0f ? 1.0f : v);
    return static_cast<int>(c * 255.0f + 0.5f);
}

}  // namespace crossview
