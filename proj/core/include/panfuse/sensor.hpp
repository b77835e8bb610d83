// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the panfuse Project.

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace panfuse {

/// Acquisition details of an MS/PAN pair, used to label reports.
struct SensorPairMeta
{
    std::string pair_id;
    std::string ms_sensor;
    std::string pan_sensor;
    std::optional<double> ms_resolution_m;
    std::optional<double> pan_resolution_m;
    std::string location;
    std::vector<std::string> spectral_ranges;

    /// Short label such as "S2 (IKONOS-2 MS / IKONOS-2 PAN, 4/1 m)".
    std::string label() const;
};

/// Throws std::invalid_argument when both resolutions are present and the
/// MS ground resolution is finer than the PAN one, or a resolution is not
/// positive.
void validate(const SensorPairMeta &meta);

} // namespace panfuse
