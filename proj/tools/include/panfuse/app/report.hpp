// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the panfuse Project.

#pragma once

#include <panfuse/metrics.hpp>

#include <map>
#include <string>
#include <vector>

namespace panfuse::app {

/// Band-averaged values of one metric, arranged for a grouped bar chart.
struct ChartData
{
    Metric metric = Metric::DI;
    std::vector<std::string> pairs;   ///< group order: first appearance
    std::vector<std::string> methods; ///< bar order: first appearance
    /// values[g][b] for pair g and method b; NaN when absent or undefined.
    std::vector<std::vector<double>> values;
};

/// Uses the "avg" rows when present, otherwise the mean of the finite
/// per-band rows. Metrics without records are omitted.
std::vector<ChartData> collect_charts(const std::vector<MetricRecord> &records);

/// Deterministic SVG grouped bar chart. +inf values are drawn as capped
/// bars labelled with an infinity sign. `pair_labels` optionally maps a
/// pair id to a longer axis label.
std::string render_svg(const ChartData &chart,
                       const std::map<std::string, std::string> &pair_labels = {});

} // namespace panfuse::app
