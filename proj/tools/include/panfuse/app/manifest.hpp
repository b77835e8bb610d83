// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the panfuse Project.

#pragma once

#include <panfuse/error.hpp>
#include <panfuse/fusion.hpp>
#include <panfuse/metrics.hpp>
#include <panfuse/sensor.hpp>

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace panfuse::app {

class ManifestError : public Error
{
public:
    using Error::Error;
};

struct BatchPair
{
    SensorPairMeta meta; ///< meta.pair_id identifies the pair
    std::filesystem::path ms_path;
    std::filesystem::path pan_path;
};

struct BatchManifest
{
    std::vector<BatchPair> pairs;
    std::vector<FusionMethod> methods;
    std::filesystem::path output_dir;
    double csa_percentile = default_csa_percentile;
};

/// Parses a JSON manifest:
///
///   {
///     "pairs": [{"pair_id": "S1", "ms_path": "s1/ms.ppm", "pan_path": "s1/pan.pgm",
///                "ms_sensor": "...", "pan_sensor": "...",
///                "ms_resolution_m": 4, "pan_resolution_m": 1,
///                "location": "...", "spectral_ranges": ["..."]}],
///     "methods": ["SF", "IHS"],
///     "output_dir": "out",
///     "csa_percentile": 90
///   }
///
/// Relative paths are resolved against base_dir. Throws ManifestError.
BatchManifest parse_manifest(std::string_view json_text, const std::filesystem::path &base_dir);

/// Reads the file and resolves relative paths against its directory.
BatchManifest load_manifest(const std::filesystem::path &path);

} // namespace panfuse::app
