#pragma once

#include "crossview/heatmap.hpp"
#include "crossview/image.hpp"
#include "crossview/rng.hpp"

namespace crossview {

// Orientation shift + field-of-view crop for ground panoramas.
// alpha_deg in [0,360), theta_deg in (0,360]. pad_to_full keeps the crop at
// its original azimuth inside a zero canvas of the input size instead of
// returning the narrow crop.
struct GroundTransformParams {
    double alpha_deg = 0.0;
    double theta_deg = 360.0;
    bool pad_to_full = false;
};

enum class SatelliteMode { outer_rotation, inner_rotation, discrete_rotation };

// Continuous modes read phi_deg (clockwise yaw). Discrete mode applies one
// of {90,180,270} degrees, chosen uniformly, with the given probability.
struct SatelliteTransformParams {
    SatelliteMode mode = SatelliteMode::discrete_rotation;
    double phi_deg = 0.0;
    double probability = 0.0;
};

// Column shift for a given orientation, and crop width for a given FoV,
// both round-to-nearest. Crop width is at least one column.
int ground_shift_columns(int width, double alpha_deg);
int ground_crop_columns(int width, double theta_deg);

// Shift the panorama left by round(width*alpha/360) columns, keep the first
// round(width*theta/360) columns. Deterministic.
ViewImage transform_ground(const ViewImage& img, const GroundTransformParams& params);

// Identical shift/crop geometry applied to a heatmap raster.
HeatMap transform_heatmap_ground(const HeatMap& hm, const GroundTransformParams& params);

// Exact pixel-permutation rotation by quarter_turns*90 degrees clockwise.
ViewImage rotate_quarter(const ViewImage& img, int quarter_turns);

ViewImage transform_satellite(const ViewImage& img,
                              const SatelliteTransformParams& params, Rng& rng);

// Brightness/saturation jitter with factors drawn from
// [1-strength, 1+strength]; result clamped to [0,1].
ViewImage color_augment(const ViewImage& img, double strength, Rng& rng);

// The deterministic core of color_augment, exposed so exact factors can be
// applied directly. Saturation scales each channel's distance from the
// per-pixel channel mean.
ViewImage apply_color(const ViewImage& img, double brightness, double saturation);

}  // namespace crossview
