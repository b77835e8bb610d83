// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the panfuse Project.

#include <panfuse/raster.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace panfuse {

namespace {

void require_nonzero(std::size_t width, std::size_t height)
{
    if (width == 0 || height == 0)
        throw std::invalid_argument("raster dimensions must be at least 1x1, got " +
                                    std::to_string(width) + "x" + std::to_string(height));
}

// Exact round-half-up; floor(x + 0.5) misrounds values just below one half.
double round_half_up(double x)
{
    const double f = std::floor(x);
    return (x - f >= 0.5) ? f + 1.0 : f;
}

} // namespace

Raster::Raster(std::size_t width, std::size_t height, double fill)
    : width_(width), height_(height)
{
    require_nonzero(width, height);
    if (!std::isfinite(fill))
        throw std::invalid_argument("raster fill value must be finite");
    samples_.assign(width * height, fill);
}

Raster::Raster(std::size_t width, std::size_t height, std::vector<double> samples)
    : width_(width), height_(height), samples_(std::move(samples))
{
    require_nonzero(width, height);
    if (samples_.size() != width * height)
        throw std::invalid_argument("raster sample count " + std::to_string(samples_.size()) +
                                    " does not match " + std::to_string(width) + "x" +
                                    std::to_string(height));
    if (!std::all_of(samples_.begin(), samples_.end(), [](double s) { return std::isfinite(s); }))
        throw std::invalid_argument("raster samples must be finite");
}

MultiBandImage::MultiBandImage(std::vector<Raster> bands) : bands_(std::move(bands))
{
    if (bands_.empty())
        throw std::invalid_argument("multi-band image needs at least one band");
    for (const auto &b : bands_)
        if (!b.same_shape(bands_.front()))
            throw std::invalid_argument("all bands of a multi-band image must share one size");
}

void require_same_shape(const Raster &a, const Raster &b, const char *context)
{
    if (!a.same_shape(b))
        throw std::invalid_argument(std::string(context) + ": size mismatch " +
                                    std::to_string(a.width()) + "x" + std::to_string(a.height()) +
                                    " vs " + std::to_string(b.width()) + "x" +
                                    std::to_string(b.height()));
}

BandStats band_stats(const Raster &r)
{
    const auto s = r.samples();
    const double n = static_cast<double>(s.size());

    double sum = 0.0;
    for (double v : s)
        sum += v;
    const double mean = sum / n;

    double ss = 0.0;
    for (double v : s)
        ss += (v - mean) * (v - mean);

    return {mean, std::sqrt(ss / n)};
}

Raster clamp_quantize(const Raster &r)
{
    return map_samples(r, [](double s) { return round_half_up(std::clamp(s, 0.0, 255.0)); });
}

MultiBandImage clamp_quantize(const MultiBandImage &image)
{
    std::vector<Raster> bands;
    bands.reserve(image.band_count());
    for (const auto &b : image.bands())
        bands.push_back(clamp_quantize(b));
    return MultiBandImage(std::move(bands));
}

Raster resample_nearest(const Raster &r, std::size_t target_w, std::size_t target_h)
{
    if (target_w == 0 || target_h == 0)
        throw std::invalid_argument("resample_nearest: zero target dimension");
    if (target_w < r.width() || target_h < r.height())
        throw std::invalid_argument("resample_nearest: target " + std::to_string(target_w) + "x" +
                                    std::to_string(target_h) + " is smaller than source " +
                                    std::to_string(r.width()) + "x" +
                                    std::to_string(r.height()));

    std::vector<std::size_t> col_map(target_w);
    for (std::size_t j = 0; j < target_w; ++j)
        col_map[j] = j * r.width() / target_w;

    std::vector<double> out(target_w * target_h);
    for (std::size_t i = 0; i < target_h; ++i) {
        const std::size_t src_row = i * r.height() / target_h;
        for (std::size_t j = 0; j < target_w; ++j)
            out[i * target_w + j] = r(src_row, col_map[j]);
    }
    return Raster(target_w, target_h, std::move(out));
}

MultiBandImage resample_nearest(const MultiBandImage &ms, std::size_t target_w,
                                std::size_t target_h)
{
    std::vector<Raster> bands;
    bands.reserve(ms.band_count());
    for (const auto &b : ms.bands())
        bands.push_back(resample_nearest(b, target_w, target_h));
    return MultiBandImage(std::move(bands));
}

} // namespace panfuse
