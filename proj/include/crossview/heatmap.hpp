#pragma once

#include <vector>

#include "crossview/error.hpp"

namespace crossview {

// Nonnegative 2-D activation map aligned to a reference image.
// width_degrees mirrors the reference's azimuthal span for ground views.
struct HeatMap {
    int height = 0;
    int width = 0;
    double width_degrees = 360.0;
    std::vector<double> values;

    double& at(int y, int x) { return values[static_cast<std::size_t>(y) * width + x]; }
    double at(int y, int x) const { return values[static_cast<std::size_t>(y) * width + x]; }
};

HeatMap make_heatmap(int height, int width, double width_degrees = 360.0,
                     double fill = 0.0);

// Rescales values into [0,1]. An all-zero map stays all-zero; a constant
// positive map becomes all ones.
void minmax_normalize(HeatMap& hm);

// Bilinear resize with half-pixel alignment and edge clamping.
HeatMap resize_bilinear(const HeatMap& hm, int out_h, int out_w);

}  // namespace crossview
