// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the panfuse Project.

#include <panfuse/filtering.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace panfuse {

Kernel3x3::Kernel3x3(std::array<double, 9> taps, double divisor)
    : taps_(taps), divisor_(divisor)
{
    if (!std::all_of(taps_.begin(), taps_.end(), [](double t) { return std::isfinite(t); }))
        throw std::invalid_argument("kernel taps must be finite");
    if (!std::isfinite(divisor_) || divisor_ == 0.0)
        throw std::invalid_argument("kernel divisor must be finite and non-zero");
}

Kernel3x3 Kernel3x3::box()
{
    return Kernel3x3({1, 1, 1, 1, 1, 1, 1, 1, 1}, 9.0);
}

Kernel3x3 Kernel3x3::laplacian()
{
    return Kernel3x3({-1, -1, -1, -1, 8, -1, -1, -1, -1}, 1.0);
}

double Kernel3x3::weight(int du, int dv) const
{
    if (du < -1 || du > 1 || dv < -1 || dv > 1)
        throw std::out_of_range("kernel offset outside 3x3 support");
    return taps_[static_cast<std::size_t>((du + 1) * 3 + (dv + 1))] / divisor_;
}

Raster convolve3x3(const Raster &r, const Kernel3x3 &k)
{
    const std::size_t w = r.width();
    const std::size_t h = r.height();
    const auto &taps = k.taps();
    const double divisor = k.divisor();

    // Replicate padding: neighbour indices clamp to the border.
    auto clamp_index = [](std::size_t i, int d, std::size_t n) -> std::size_t {
        if (d < 0)
            return i == 0 ? 0 : i - 1;
        if (d > 0)
            return i + 1 >= n ? n - 1 : i + 1;
        return i;
    };

    std::vector<double> out(w * h);
    for (std::size_t i = 0; i < h; ++i) {
        const std::size_t rows[3] = {clamp_index(i, -1, h), i, clamp_index(i, 1, h)};
        for (std::size_t j = 0; j < w; ++j) {
            const std::size_t cols[3] = {clamp_index(j, -1, w), j, clamp_index(j, 1, w)};
            double acc = 0.0;
            for (std::size_t u = 0; u < 3; ++u)
                for (std::size_t v = 0; v < 3; ++v)
                    acc += taps[u * 3 + v] * r(rows[u], cols[v]);
            out[i * w + j] = divisor == 1.0 ? acc : acc / divisor;
        }
    }
    return Raster(w, h, std::move(out));
}

Raster box_lpf(const Raster &r)
{
    static const Kernel3x3 kernel = Kernel3x3::box();
    return convolve3x3(r, kernel);
}

Raster unsharp_mask(const Raster &p)
{
    return zip_samples(p, box_lpf(p), [](double x, double lp) { return x - lp; });
}

Raster laplacian_hp(const Raster &r)
{
    static const Kernel3x3 kernel = Kernel3x3::laplacian();
    return convolve3x3(r, kernel);
}

} // namespace panfuse
