#include "crossview/transforms.hpp"

#include <cmath>

namespace crossview {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_ground_params(const GroundTransformParams& p) {
    if (!(p.theta_deg > 0.0 && p.theta_deg <= 360.0))
        throw ValueError("ground transform: theta must be in (0, 360]");
    if (!(p.alpha_deg >= 0.0 && p.alpha_deg < 360.0))
        throw ValueError("ground transform: alpha must be in [0, 360)");
}

}  // namespace

int ground_shift_columns(int width, double alpha_deg) {
    const long s = std::lround(width * alpha_deg / 360.0);
    return static_cast<int>(((s % width) + width) % width);
}

int ground_crop_columns(int width, double theta_deg) {
    long w = std::lround(width * theta_deg / 360.0);
    if (w < 1) w = 1;
    if (w > width) w = width;
    return static_cast<int>(w);
}

ViewImage transform_ground(const ViewImage& img, const GroundTransformParams& params) {
    if (img.kind != ViewKind::ground_panorama)
        throw GeometryError("transform_ground: input must be a ground panorama");
    if (img.width_degrees != 360.0)
        throw GeometryError("transform_ground: input must span a full 360 degrees");
    check_ground_params(params);

    const int w = img.width;
    const int shift = ground_shift_columns(w, params.alpha_deg);
    const int crop = ground_crop_columns(w, params.theta_deg);

    if (params.pad_to_full) {
        // Keep the surviving window at its original azimuth positions.
        ViewImage out = make_image(img.height, w, img.channels, img.kind, 360.0);
        for (int x = 0; x < crop; ++x) {
            const int src = (shift + x) % w;
            for (int y = 0; y < img.height; ++y)
                for (int c = 0; c < img.channels; ++c)
                    out.at(y, src, c) = img.at(y, src, c);
        }
        return out;
    }

    ViewImage out = make_image(img.height, crop, img.channels, img.kind, params.theta_deg);
    for (int x = 0; x < crop; ++x) {
        const int src = (shift + x) % w;
        for (int y = 0; y < img.height; ++y)
            for (int c = 0; c < img.channels; ++c)
                out.at(y, x, c) = img.at(y, src, c);
    }
    return out;
}

HeatMap transform_heatmap_ground(const HeatMap& hm, const GroundTransformParams& params) {
    if (hm.width_degrees != 360.0)
        throw GeometryError("transform_heatmap_ground: heatmap must span 360 degrees");
    if (hm.height <= 0 || hm.width <= 0 ||
        hm.values.size() != static_cast<std::size_t>(hm.height) * hm.width)
        throw GeometryError("transform_heatmap_ground: malformed heatmap");
    check_ground_params(params);

    const int w = hm.width;
    const int shift = ground_shift_columns(w, params.alpha_deg);
    const int crop = ground_crop_columns(w, params.theta_deg);

    if (params.pad_to_full) {
        HeatMap out = make_heatmap(hm.height, w, 360.0);
        for (int x = 0; x < crop; ++x) {
            const int src = (shift + x) % w;
            for (int y = 0; y < hm.height; ++y) out.at(y, src) = hm.at(y, src);
        }
        return out;
    }

    HeatMap out = make_heatmap(hm.height, crop, params.theta_deg);
    for (int x = 0; x < crop; ++x) {
        const int src = (shift + x) % w;
        for (int y = 0; y < hm.height; ++y) out.at(y, x) = hm.at(y, src);
    }
    return out;
}

ViewImage rotate_quarter(const ViewImage& img, int quarter_turns) {
    if (img.height != img.width)
        throw GeometryError("rotate_quarter: image must be square");
    const int k = ((quarter_turns % 4) + 4) % 4;
    if (k == 0) return img;
    const int n = img.width;
    ViewImage out = make_image(img.height, img.width, img.channels, img.kind,
                               img.width_degrees);
    for (int y = 0; y < n; ++y) {
        for (int x = 0; x < n; ++x) {
            int sy = y, sx = x;
            // Inverse of a clockwise rotation by k quarter turns.
            switch (k) {
                case 1: sy = n - 1 - x; sx = y; break;
                case 2: sy = n - 1 - y; sx = n - 1 - x; break;
                case 3: sy = x; sx = n - 1 - y; break;
            }
            for (int c = 0; c < img.channels; ++c) out.at(y, x, c) = img.at(sy, sx, c);
        }
    }
    return out;
}

namespace {

// Fused affine resample: for each output pixel, scale about the center,
// rotate counter-clockwise by phi (the inverse of a clockwise content
// rotation), and bilinearly sample the source with zero fill.
ViewImage rotate_about_center(const ViewImage& img, double phi_deg, double scale) {
    const int n = img.width;
    ViewImage out = make_image(img.height, img.width, img.channels, img.kind,
                               img.width_degrees);
    const double rad = phi_deg * kPi / 180.0;
    const double cs = std::cos(rad), sn = std::sin(rad);
    const double c = (n - 1) / 2.0;
    for (int y = 0; y < n; ++y) {
        const double dy = (y - c) * scale;
        for (int x = 0; x < n; ++x) {
            const double dx = (x - c) * scale;
            // R_cw(-phi) applied to (dx, dy) in screen coordinates.
            const double sx = c + cs * dx + sn * dy;
            const double sy = c - sn * dx + cs * dy;
            for (int ch = 0; ch < img.channels; ++ch)
                out.at(y, x, ch) = bilinear_sample_zero(img, sx, sy, ch);
        }
    }
    return out;
}

}  // namespace

ViewImage transform_satellite(const ViewImage& img,
                              const SatelliteTransformParams& params, Rng& rng) {
    if (img.kind != ViewKind::satellite)
        throw GeometryError("transform_satellite: input must be a satellite view");
    if (img.height != img.width)
        throw GeometryError("transform_satellite: satellite image must be square");

    switch (params.mode) {
        case SatelliteMode::outer_rotation: {
            // Bounding box of the rotated square grows by |cos|+|sin|;
            // shrinking by the same factor is the resize back to input size.
            const double rad = params.phi_deg * kPi / 180.0;
            const double grow = std::abs(std::cos(rad)) + std::abs(std::sin(rad));
            return rotate_about_center(img, params.phi_deg, grow);
        }
        case SatelliteMode::inner_rotation: {
            // Largest axis-aligned square inscribed in the rotated square
            // has side n/(|cos|+|sin|); resizing it back magnifies.
            const double rad = params.phi_deg * kPi / 180.0;
            const double shrink = 1.0 / (std::abs(std::cos(rad)) + std::abs(std::sin(rad)));
            return rotate_about_center(img, params.phi_deg, shrink);
        }
        case SatelliteMode::discrete_rotation: {
            if (!(params.probability >= 0.0 && params.probability <= 1.0))
                throw ValueError("transform_satellite: probability must be in [0,1]");
            const double u = rng.uniform();
            if (u < params.probability) {
                const int k = 1 + static_cast<int>(rng.uniform_int(3));
                return rotate_quarter(img, k);
            }
            return img;
        }
    }
    throw ValueError("transform_satellite: unknown mode");
}

ViewImage apply_color(const ViewImage& img, double brightness, double saturation) {
    ViewImage out = img;
    const std::size_t npix = static_cast<std::size_t>(img.height) * img.width;
    const int ch = img.channels;
    for (std::size_t p = 0; p < npix; ++p) {
        double gray = 0.0;
        for (int c = 0; c < ch; ++c) gray += img.pixels[p * ch + c];
        gray /= ch;
        for (int c = 0; c < ch; ++c) {
            double v = gray + saturation * (img.pixels[p * ch + c] - gray);
            v *= brightness;
            if (v < 0.0) v = 0.0;
            if (v > 1.0) v = 1.0;
            out.pixels[p * ch + c] = static_cast<float>(v);
        }
    }
    return out;
}

ViewImage color_augment(const ViewImage& img, double strength, Rng& rng) {
    if (!(strength >= 0.0 && strength <= 1.0))
        throw ValueError("color_augment: strength must be in [0,1]");
    const double brightness = rng.uniform(1.0 - strength, 1.0 + strength);
    const double saturation = rng.uniform(1.0 - strength, 1.0 + strength);
    return apply_color(img, brightness, saturation);
}

}  // namespace crossview
