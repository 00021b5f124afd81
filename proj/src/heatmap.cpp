#include "crossview/heatmap.hpp"

#include <algorithm>
#include <cmath>

namespace crossview {

HeatMap make_heatmap(int height, int width, double width_degrees, double fill) {
    if (height <= 0 || width <= 0)
        throw ValueError("make_heatmap: non-positive dimensions");
    HeatMap hm;
    hm.height = height;
    hm.width = width;
    hm.width_degrees = width_degrees;
    hm.values.assign(static_cast<std::size_t>(height) * width, fill);
    return hm;
}

void minmax_normalize(HeatMap& hm) {
    if (hm.values.empty()) return;
    const auto [mn_it, mx_it] = std::minmax_element(hm.values.begin(), hm.values.end());
    const double mn = *mn_it, mx = *mx_it;
    const double range = mx - mn;
    if (range <= 1e-12) {
        const double v = mx > 1e-12 ? 1.0 : 0.0;
        std::fill(hm.values.begin(), hm.values.end(), v);
        return;
    }
    for (double& v : hm.values) v = (v - mn) / range;
}

HeatMap resize_bilinear(const HeatMap& hm, int out_h, int out_w) {
    if (out_h <= 0 || out_w <= 0)
        throw ValueError("heatmap resize: non-positive output size");
    if (out_h == hm.height && out_w == hm.width) return hm;
    HeatMap out = make_heatmap(out_h, out_w, hm.width_degrees);
    const double sy = static_cast<double>(hm.height) / out_h;
    const double sx = static_cast<double>(hm.width) / out_w;
    for (int y = 0; y < out_h; ++y) {
        double fy = (y + 0.5) * sy - 0.5;
        fy = std::clamp(fy, 0.0, static_cast<double>(hm.height - 1));
        const int y0 = static_cast<int>(std::floor(fy));
        const int y1 = std::min(y0 + 1, hm.height - 1);
        const double dy = fy - y0;
        for (int x = 0; x < out_w; ++x) {
            double fx = (x + 0.5) * sx - 0.5;
            fx = std::clamp(fx, 0.0, static_cast<double>(hm.width - 1));
            const int x0 = static_cast<int>(std::floor(fx));
            const int x1 = std::min(x0 + 1, hm.width - 1);
            const double dx = fx - x0;
            out.at(y, x) = (1.0 - dy) * ((1.0 - dx) * hm.at(y0, x0) + dx * hm.at(y0, x1)) +
                           dy * ((1.0 - dx) * hm.at(y1, x0) + dx * hm.at(y1, x1));
        }
    }
    return out;
}

}  // namespace crossview
