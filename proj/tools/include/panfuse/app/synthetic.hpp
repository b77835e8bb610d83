// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the panfuse Project.

#pragma once

#include <panfuse/raster.hpp>

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>

namespace panfuse::app {

/// Parameters of a synthetic, perfectly registered MS/PAN pair.
struct SyntheticSpec
{
    std::uint64_t seed = 1;
    std::size_t width = 64;
    std::size_t height = 64;
    std::size_t scale_factor = 4;     ///< MS degradation ratio, >= 2
    std::size_t smoothing_passes = 3; ///< box_lpf passes applied to the noise
};

/// Throws std::invalid_argument when the size is not divisible by the
/// scale factor or the scale factor is below 2.
void validate(const SyntheticSpec &spec);

struct SyntheticPair
{
    MultiBandImage reference; ///< full-resolution ground truth, quantized
    MultiBandImage ms;        ///< block-averaged reference, upsampled back
    Raster pan;               ///< quantized intensity of the reference
};

/// Deterministic in the seed. The noise source is the raw mt19937_64 bit
/// stream, so results do not depend on the standard library's
/// distribution implementations.
SyntheticPair make_synthetic(const SyntheticSpec &spec);

struct SyntheticFiles
{
    std::filesystem::path ms;
    std::filesystem::path pan;
    std::filesystem::path reference;
};

/// Writes <prefix>ms.ppm, <prefix>pan.pgm and <prefix>reference.ppm into dir.
SyntheticFiles write_synthetic(const SyntheticSpec &spec, const std::filesystem::path &dir,
                               const std::string &prefix = "");

} // namespace panfuse::app
