// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the panfuse Project.

#pragma once

#include <panfuse/raster.hpp>

#include <array>

namespace panfuse {

using Matrix3 = std::array<std::array<double, 3>, 3>;

/// Linear triangular IHS model. Hue and saturation are carried as the
/// Cartesian pair (v1, v2); see hue() and saturation() for the polar view.
struct IhsPlanes
{
    Raster i;
    Raster v1;
    Raster v2;
};

/// (R, G, B) -> (I, v1, v2):
///   I  = (R + G + B) / 3
///   v1 = (-R - G + 2B) / sqrt(6)
///   v2 = (R - G) / sqrt(2)
const Matrix3 &ihs_forward_matrix();

/// Inverse of ihs_forward_matrix():
///   R = I - v1/sqrt(6) + v2/sqrt(2)
///   G = I - v1/sqrt(6) - v2/sqrt(2)
///   B = I + 2 v1/sqrt(6)
const Matrix3 &ihs_inverse_matrix();

/// Throws std::invalid_argument unless rgb has exactly 3 bands.
IhsPlanes ihs_forward(const MultiBandImage &rgb);

/// Output is not clamped. Throws std::invalid_argument on plane size mismatch.
MultiBandImage ihs_inverse(const IhsPlanes &planes);

/// atan2(v2, v1) per pixel, radians.
Raster hue(const IhsPlanes &planes);

/// sqrt(v1^2 + v2^2) per pixel.
Raster saturation(const IhsPlanes &planes);

/// Hexcone HSV. h in degrees [0, 360), fixed at 0 where s == 0;
/// s in [0, 1]; v on the DN scale [0, 255].
struct HsvPlanes
{
    Raster h;
    Raster s;
    Raster v;
};

/// Throws std::invalid_argument unless rgb has exactly 3 bands.
HsvPlanes hsv_forward(const MultiBandImage &rgb);

/// Throws std::invalid_argument for s outside [0, 1], v outside [0, 255]
/// or mismatched plane sizes. Hue is wrapped into [0, 360).
MultiBandImage hsv_inverse(const HsvPlanes &planes);

} // namespace panfuse
