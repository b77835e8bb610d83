// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the panfuse Project.

#pragma once

#include <panfuse/app/manifest.hpp>
#include <panfuse/metrics.hpp>

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace panfuse::app {

struct PairFailure
{
    std::string pair_id;
    std::string message;
};

struct BatchResult
{
    std::vector<MetricRecord> records; ///< ordered by pair, method, band, metric
    std::vector<PairFailure> failures; ///< manifest order
    std::size_t products = 0;
    std::filesystem::path csv_path;
};

/// Fuses and evaluates every pair with every method, writing
/// <output_dir>/<pair_id>/<METHOD>.ppm and <output_dir>/metrics.csv.
/// A failing pair is reported in failures and contributes no records;
/// the remaining pairs still run. Up to `threads` pairs run concurrently.
BatchResult run_batch(const BatchManifest &manifest, std::size_t threads, std::ostream &log);

/// Reads PANFUSE_THREADS. Unset means hardware concurrency; anything but a
/// positive integer throws std::invalid_argument.
std::size_t batch_threads_from_env();

} // namespace panfuse::app
