// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the panfuse Project.

#pragma once

#include <panfuse/raster.hpp>

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace panfuse {

enum class Metric { DI, SNR, NRMSE, FCC, HPDI, CSA_edge, CSA_homog };

/// Order in which evaluate_all() emits metrics for each band.
inline constexpr std::array<Metric, 7> all_metrics{
    Metric::DI,  Metric::SNR,      Metric::NRMSE,     Metric::FCC,
    Metric::HPDI, Metric::CSA_edge, Metric::CSA_homog,
};

std::string_view to_string(Metric metric) noexcept;
std::optional<Metric> parse_metric(std::string_view name) noexcept;

inline constexpr double default_csa_percentile = 90.0;

/// Value of a deviation-style metric together with the number of pixels
/// skipped because their denominator was zero.
struct Deviation
{
    double value = 0.0;
    std::size_t excluded = 0;
};

struct ContrastPair
{
    double edge = 0.0;
    double homogeneous = 0.0;
};

/// Mean of |f - m| / m over pixels with m != 0.
/// Throws UndefinedMetric when m is zero everywhere.
Deviation deviation_index(const Raster &fused, const Raster &reference);

/// sqrt(sum f^2 / sum (f - m)^2). Returns +infinity when f == m.
double snr(const Raster &fused, const Raster &reference);

/// sqrt(sum (f - m)^2 / (n * m * 255^2)).
double nrmse(const Raster &fused, const Raster &reference);

/// Population Pearson correlation. Throws UndefinedMetric when either
/// input has zero variance.
double pearson(const Raster &a, const Raster &b);

/// Correlation of the Laplacian-filtered band with the Laplacian-filtered PAN.
double fcc(const Raster &fused_band, const Raster &pan);

/// Mean of |lap(F) - lap(P)| / P over pixels with P != 0, P being the raw
/// PAN value. Throws UndefinedMetric when PAN is zero everywhere.
Deviation hpdi(const Raster &fused_band, const Raster &pan);

/// Mean local Michelson contrast of `band` over edge and homogeneous
/// pixels. A pixel is an edge pixel when |lap(PAN)| is at or above the
/// nearest-rank `percentile` of all |lap(PAN)| values. Contrast is
/// (max - min) / (max + min) over the replicate-padded 3x3 neighbourhood,
/// 0 where max + min == 0. Throws UndefinedMetric if a class is empty and
/// std::invalid_argument for a percentile outside (0, 100).
ContrastPair csa(const Raster &band, const Raster &pan,
                 double percentile = default_csa_percentile);

struct MetricRecord
{
    std::string pair_id;
    std::string method;
    std::optional<std::size_t> band; ///< 1-based; nullopt is the band average
    Metric metric = Metric::DI;
    double value = 0.0;              ///< may be +inf (SNR) or NaN (undefined)
    std::size_t excluded_pixels = 0;
    std::size_t excluded_bands = 0;  ///< avg rows: bands left out of the mean

    std::string band_label() const;

    friend bool operator==(const MetricRecord &, const MetricRecord &) = default;
};

/// Computes every metric for every band, then one "avg" row per metric.
///
/// Spectral metrics compare fused band k with ms band k, spatial ones
/// compare it with PAN. A metric that is undefined for its inputs is
/// recorded as NaN instead of aborting the evaluation. Average rows take
/// the arithmetic mean of the finite band values and count the others in
/// excluded_bands; if no band value is finite the average is +inf when
/// any band was +inf, NaN otherwise. Throws std::invalid_argument on size
/// or band-count mismatches.
std::vector<MetricRecord> evaluate_all(const MultiBandImage &ms, const Raster &pan,
                                       const MultiBandImage &fused,
                                       const std::string &pair_id,
                                       const std::string &method,
                                       double csa_percentile = default_csa_percentile);

} // namespace panfuse
