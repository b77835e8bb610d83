// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the panfuse Project.

#pragma once

#include <panfuse/raster.hpp>

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace panfuse {

/// A decoded PGM is a single Raster, a decoded PPM a 3-band image.
using PnmImage = std::variant<Raster, MultiBandImage>;

/// Decodes P2/P3/P5/P6 data. Samples are rescaled to [0, 255] by
/// DN * 255 / maxval. '#' comments are skipped wherever whitespace is
/// allowed. Throws FormatError carrying the offending byte offset.
PnmImage decode_pnm(std::span<const unsigned char> bytes);

/// Reads and decodes a PNM file. Throws Error if the file cannot be read.
PnmImage load_pnm(const std::filesystem::path &path);

/// Loads a PGM, failing with Error if the file is a PPM.
Raster load_pgm(const std::filesystem::path &path);

/// Loads a PPM, failing with Error if the file is a PGM.
MultiBandImage load_ppm(const std::filesystem::path &path);

/// Quantizes with clamp_quantize() and encodes as binary P5 (one band) or
/// P6 (three bands) with maxval 255. Any other band count throws
/// std::invalid_argument("unsupported band count ...").
std::vector<unsigned char> encode_pnm(const MultiBandImage &image);
std::vector<unsigned char> encode_pnm(const Raster &raster);

void save_pnm(const MultiBandImage &image, const std::filesystem::path &path);
void save_pnm(const Raster &raster, const std::filesystem::path &path);

} // namespace panfuse
