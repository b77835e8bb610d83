// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the panfuse Project.

#pragma once

#include <panfuse/colorspace.hpp>
#include <panfuse/error.hpp>
#include <panfuse/filtering.hpp>
#include <panfuse/fusion.hpp>
#include <panfuse/metrics.hpp>
#include <panfuse/pnm.hpp>
#include <panfuse/raster.hpp>
#include <panfuse/sensor.hpp>
