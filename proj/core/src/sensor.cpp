// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the panfuse Project.

#include <panfuse/sensor.hpp>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace panfuse {

std::string SensorPairMeta::label() const
{
    std::ostringstream os;
    os << pair_id;
    if (!ms_sensor.empty() || !pan_sensor.empty()) {
        os << " (" << (ms_sensor.empty() ? "?" : ms_sensor) << " / "
           << (pan_sensor.empty() ? "?" : pan_sensor);
        if (ms_resolution_m && pan_resolution_m)
            os << ", " << *ms_resolution_m << "/" << *pan_resolution_m << " m";
        os << ")";
    }
    return os.str();
}

void validate(const SensorPairMeta &meta)
{
    for (const auto &res : {meta.ms_resolution_m, meta.pan_resolution_m})
        if (res && !(std::isfinite(*res) && *res > 0.0))
            throw std::invalid_argument("pair '" + meta.pair_id +
                                        "': ground resolution must be positive");
    if (meta.ms_resolution_m && meta.pan_resolution_m &&
        *meta.ms_resolution_m < *meta.pan_resolution_m)
        throw std::invalid_argument("pair '" + meta.pair_id +
                                    "': MS resolution must be coarser than PAN resolution");
}

} // namespace panfuse
