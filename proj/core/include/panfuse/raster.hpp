// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the panfuse Project.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace panfuse {

/// Single-band grid of real-valued digital numbers, stored row-major.
///
/// Samples are kept in double precision; quantization to 8-bit DN only
/// happens through clamp_quantize() or when an image is saved.
class Raster
{
public:
    Raster(std::size_t width, std::size_t height, double fill = 0.0);

    /// Throws std::invalid_argument if samples.size() != width * height,
    /// either dimension is zero, or any sample is non-finite.
    Raster(std::size_t width, std::size_t height, std::vector<double> samples);

    std::size_t width() const noexcept { return width_; }
    std::size_t height() const noexcept { return height_; }
    std::size_t size() const noexcept { return samples_.size(); }

    double operator()(std::size_t row, std::size_t col) const noexcept
    {
        return samples_[row * width_ + col];
    }
    double &operator()(std::size_t row, std::size_t col) noexcept
    {
        return samples_[row * width_ + col];
    }

    std::span<const double> samples() const noexcept { return samples_; }
    std::span<double> samples() noexcept { return samples_; }

    bool same_shape(const Raster &other) const noexcept
    {
        return width_ == other.width_ && height_ == other.height_;
    }

    friend bool operator==(const Raster &, const Raster &) = default;

private:
    std::size_t width_;
    std::size_t height_;
    std::vector<double> samples_;
};

/// Ordered set of co-registered bands sharing one size.
class MultiBandImage
{
public:
    /// Throws std::invalid_argument on an empty band list or mismatched
    /// band dimensions.
    explicit MultiBandImage(std::vector<Raster> bands);

    std::size_t band_count() const noexcept { return bands_.size(); }
    std::size_t width() const noexcept { return bands_.front().width(); }
    std::size_t height() const noexcept { return bands_.front().height(); }

    const Raster &band(std::size_t k) const { return bands_.at(k); }
    Raster &band(std::size_t k) { return bands_.at(k); }

    const std::vector<Raster> &bands() const noexcept { return bands_; }

    friend bool operator==(const MultiBandImage &, const MultiBandImage &) = default;

private:
    std::vector<Raster> bands_;
};

struct BandStats
{
    double mean = 0.0;
    double std = 0.0; ///< population standard deviation (divisor n*m)
};

/// Mean and population standard deviation of all samples.
BandStats band_stats(const Raster &r);

/// Round-half-up of each sample after clamping to [0, 255].
Raster clamp_quantize(const Raster &r);
MultiBandImage clamp_quantize(const MultiBandImage &image);

/// Nearest-neighbour upsampling. Output sample (i, j) takes source sample
/// (floor(i * h / target_h), floor(j * w / target_w)).
///
/// Throws std::invalid_argument for a zero target dimension or a target
/// smaller than the source.
Raster resample_nearest(const Raster &r, std::size_t target_w, std::size_t target_h);
MultiBandImage resample_nearest(const MultiBandImage &ms, std::size_t target_w,
                                std::size_t target_h);

/// Throws std::invalid_argument naming `context` when shapes differ.
void require_same_shape(const Raster &a, const Raster &b, const char *context);

/// Elementwise helpers used throughout the fusion code.
template <typename F>
Raster map_samples(const Raster &r, F &&f)
{
    std::vector<double> out(r.size());
    auto in = r.samples();
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = f(in[i]);
    return Raster(r.width(), r.height(), std::move(out));
}

/// Requires a.same_shape(b); throws std::invalid_argument otherwise.
template <typename F>
Raster zip_samples(const Raster &a, const Raster &b, F &&f)
{
    require_same_shape(a, b, "zip_samples");
    std::vector<double> out(a.size());
    auto x = a.samples();
    auto y = b.samples();
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = f(x[i], y[i]);
    return Raster(a.width(), a.height(), std::move(out));
}

} // namespace panfuse
