// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the panfuse Project.

#include <panfuse/colorspace.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace panfuse {

namespace {

const double sqrt2 = std::sqrt(2.0);
const double sqrt6 = std::sqrt(6.0);

void require_rgb(const MultiBandImage &rgb, const char *context)
{
    if (rgb.band_count() != 3)
        throw std::invalid_argument(std::string(context) + ": expected 3 bands, got " +
                                    std::to_string(rgb.band_count()));
}

} // namespace

const Matrix3 &ihs_forward_matrix()
{
    static const Matrix3 m{{
        {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0},
        {-1.0 / sqrt6, -1.0 / sqrt6, 2.0 / sqrt6},
        {1.0 / sqrt2, -1.0 / sqrt2, 0.0},
    }};
    return m;
}

const Matrix3 &ihs_inverse_matrix()
{
    static const Matrix3 m{{
        {1.0, -1.0 / sqrt6, 1.0 / sqrt2},
        {1.0, -1.0 / sqrt6, -1.0 / sqrt2},
        {1.0, 2.0 / sqrt6, 0.0},
    }};
    return m;
}

IhsPlanes ihs_forward(const MultiBandImage &rgb)
{
    require_rgb(rgb, "ihs_forward");
    const auto r = rgb.band(0).samples();
    const auto g = rgb.band(1).samples();
    const auto b = rgb.band(2).samples();

    const std::size_t n = r.size();
    std::vector<double> i(n), v1(n), v2(n);
    for (std::size_t p = 0; p < n; ++p) {
        i[p] = (r[p] + g[p] + b[p]) / 3.0;
        v1[p] = (-r[p] - g[p] + 2.0 * b[p]) / sqrt6;
        v2[p] = (r[p] - g[p]) / sqrt2;
    }
    const std::size_t w = rgb.width();
    const std::size_t h = rgb.height();
    return {Raster(w, h, std::move(i)), Raster(w, h, std::move(v1)), Raster(w, h, std::move(v2))};
}

MultiBandImage ihs_inverse(const IhsPlanes &planes)
{
    require_same_shape(planes.i, planes.v1, "ihs_inverse");
    require_same_shape(planes.i, planes.v2, "ihs_inverse");
    const auto i = planes.i.samples();
    const auto v1 = planes.v1.samples();
    const auto v2 = planes.v2.samples();

    const std::size_t n = i.size();
    std::vector<double> r(n), g(n), b(n);
    for (std::size_t p = 0; p < n; ++p) {
        const double a = v1[p] / sqrt6;
        const double c = v2[p] / sqrt2;
        r[p] = i[p] - a + c;
        g[p] = i[p] - a - c;
        b[p] = i[p] + 2.0 * a;
    }
    const std::size_t w = planes.i.width();
    const std::size_t h = planes.i.height();
    return MultiBandImage(
        {Raster(w, h, std::move(r)), Raster(w, h, std::move(g)), Raster(w, h, std::move(b))});
}

Raster hue(const IhsPlanes &planes)
{
    return zip_samples(planes.v1, planes.v2, [](double v1, double v2) { return std::atan2(v2, v1); });
}

Raster saturation(const IhsPlanes &planes)
{
    return zip_samples(planes.v1, planes.v2, [](double v1, double v2) { return std::hypot(v1, v2); });
}

HsvPlanes hsv_forward(const MultiBandImage &rgb)
{
    require_rgb(rgb, "hsv_forward");
    const auto r = rgb.band(0).samples();
    const auto g = rgb.band(1).samples();
    const auto b = rgb.band(2).samples();

    const std::size_t n = r.size();
    std::vector<double> hh(n), ss(n), vv(n);
    for (std::size_t p = 0; p < n; ++p) {
        const double mx = std::max({r[p], g[p], b[p]});
        const double mn = std::min({r[p], g[p], b[p]});
        const double delta = mx - mn;
        vv[p] = mx;
        ss[p] = mx > 0.0 ? delta / mx : 0.0;

        double h = 0.0;
        if (delta > 0.0) {
            if (mx == r[p])
                h = 60.0 * ((g[p] - b[p]) / delta);
            else if (mx == g[p])
                h = 60.0 * ((b[p] - r[p]) / delta + 2.0);
            else
                h = 60.0 * ((r[p] - g[p]) / delta + 4.0);
            if (h < 0.0)
                h += 360.0;
            if (h >= 360.0)
                h -= 360.0;
        }
        hh[p] = h;
    }
    const std::size_t w = rgb.width();
    const std::size_t h = rgb.height();
    return {Raster(w, h, std::move(hh)), Raster(w, h, std::move(ss)), Raster(w, h, std::move(vv))};
}

MultiBandImage hsv_inverse(const HsvPlanes &planes)
{
    require_same_shape(planes.h, planes.s, "hsv_inverse");
    require_same_shape(planes.h, planes.v, "hsv_inverse");
    const auto hh = planes.h.samples();
    const auto ss = planes.s.samples();
    const auto vv = planes.v.samples();

    const std::size_t n = hh.size();
    std::vector<double> r(n), g(n), b(n);
    for (std::size_t p = 0; p < n; ++p) {
        const double s = ss[p];
        const double v = vv[p];
        if (s < 0.0 || s > 1.0)
            throw std::invalid_argument("hsv_inverse: saturation " + std::to_string(s) +
                                        " outside [0, 1]");
        if (v < 0.0 || v > 255.0)
            throw std::invalid_argument("hsv_inverse: value " + std::to_string(v) +
                                        " outside [0, 255]");
        if (s == 0.0) {
            r[p] = g[p] = b[p] = v;
            continue;
        }

        double h = std::fmod(hh[p], 360.0);
        if (h < 0.0)
            h += 360.0;
        const double sector = h / 60.0;
        const int k = std::min(static_cast<int>(sector), 5);
        const double f = sector - k;

        // Hexcone corners: max = v, min = v(1 - s), ramps in between.
        const double mn = v * (1.0 - s);
        const double falling = v * (1.0 - s * f);
        const double rising = v * (1.0 - s * (1.0 - f));
        switch (k) {
        case 0: r[p] = v; g[p] = rising; b[p] = mn; break;
        case 1: r[p] = falling; g[p] = v; b[p] = mn; break;
        case 2: r[p] = mn; g[p] = v; b[p] = rising; break;
        case 3: r[p] = mn; g[p] = falling; b[p] = v; break;
        case 4: r[p] = rising; g[p] = mn; b[p] = v; break;
        default: r[p] = v; g[p] = mn; b[p] = falling; break;
        }
    }
    const std::size_t w = planes.h.width();
    const std::size_t h = planes.h.height();
    return MultiBandImage(
        {Raster(w, h, std::move(r)), Raster(w, h, std::move(g)), Raster(w, h, std::move(b))});
}

} // namespace panfuse
