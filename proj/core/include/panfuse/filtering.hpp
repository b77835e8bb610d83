// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the panfuse Project.

#pragma once

#include <panfuse/raster.hpp>

#include <array>

namespace panfuse {

/// 3x3 correlation kernel with replicate (clamp-to-border) edges.
///
/// The kernel is stored as integer-friendly taps plus a common divisor,
/// so out = (sum of tap * sample) / divisor. For the box filter this
/// reproduces constant images bit-exactly, which a 1/9 weight per tap
/// would not.
class Kernel3x3
{
public:
    /// Taps in row-major order, rows are offsets -1, 0, +1.
    /// Throws std::invalid_argument for non-finite taps or a zero or
    /// non-finite divisor.
    explicit Kernel3x3(std::array<double, 9> taps, double divisor = 1.0);

    /// Uniform 3x3 average, every weight 1/9.
    static Kernel3x3 box();

    /// 8-connected Laplacian: centre 8, all neighbours -1.
    static Kernel3x3 laplacian();

    /// Effective weight at offset (du, dv), each in {-1, 0, 1}.
    double weight(int du, int dv) const;

    const std::array<double, 9> &taps() const noexcept { return taps_; }
    double divisor() const noexcept { return divisor_; }

private:
    std::array<double, 9> taps_;
    double divisor_;
};

/// out(i,j) = sum over u,v in {-1,0,1} of w(u,v) * r(clamp(i+u), clamp(j+v)).
Raster convolve3x3(const Raster &r, const Kernel3x3 &k);

Raster box_lpf(const Raster &r);

/// P - box_lpf(P).
Raster unsharp_mask(const Raster &p);

Raster laplacian_hp(const Raster &r);

} // namespace panfuse
