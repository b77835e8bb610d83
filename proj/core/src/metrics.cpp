// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the panfuse Project.

#include <panfuse/metrics.hpp>

#include <panfuse/error.hpp>
#include <panfuse/filtering.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace panfuse {

namespace {

constexpr double max_dn = 255.0;

/// Mean of |a - b| / denom over pixels where denom != 0.
Deviation relative_deviation(std::span<const double> a, std::span<const double> b,
                             std::span<const double> denom, const char *name)
{
    double sum = 0.0;
    std::size_t used = 0;
    for (std::size_t p = 0; p < a.size(); ++p) {
        if (denom[p] == 0.0)
            continue;
        sum += std::abs(a[p] - b[p]) / denom[p];
        ++used;
    }
    if (used == 0)
        throw UndefinedMetric(std::string("undefined ") + name +
                              ": denominator image is zero everywhere");
    return {sum / static_cast<double>(used), a.size() - used};
}

double squared_error(const Raster &f, const Raster &m)
{
    const auto x = f.samples();
    const auto y = m.samples();
    double sum = 0.0;
    for (std::size_t p = 0; p < x.size(); ++p)
        sum += (x[p] - y[p]) * (x[p] - y[p]);
    return sum;
}

/// Michelson contrast of each pixel's replicate-padded 3x3 neighbourhood.
std::vector<double> local_contrast(const Raster &band)
{
    const std::size_t w = band.width();
    const std::size_t h = band.height();
    std::vector<double> out(w * h);
    for (std::size_t i = 0; i < h; ++i) {
        const std::size_t i0 = i == 0 ? 0 : i - 1;
        const std::size_t i1 = std::min(i + 1, h - 1);
        for (std::size_t j = 0; j < w; ++j) {
            const std::size_t j0 = j == 0 ? 0 : j - 1;
            const std::size_t j1 = std::min(j + 1, w - 1);
            double lo = band(i0, j0);
            double hi = lo;
            for (std::size_t u = i0; u <= i1; ++u)
                for (std::size_t v = j0; v <= j1; ++v) {
                    lo = std::min(lo, band(u, v));
                    hi = std::max(hi, band(u, v));
                }
            out[i * w + j] = (hi + lo) == 0.0 ? 0.0 : (hi - lo) / (hi + lo);
        }
    }
    return out;
}

} // namespace

std::string_view to_string(Metric metric) noexcept
{
    switch (metric) {
    case Metric::DI: return "DI";
    case Metric::SNR: return "SNR";
    case Metric::NRMSE: return "NRMSE";
    case Metric::FCC: return "FCC";
    case Metric::HPDI: return "HPDI";
    case Metric::CSA_edge: return "CSA_edge";
    case Metric::CSA_homog: return "CSA_homog";
    }
    return "?";
}

std::optional<Metric> parse_metric(std::string_view name) noexcept
{
    for (auto m : all_metrics)
        if (to_string(m) == name)
            return m;
    return std::nullopt;
}

Deviation deviation_index(const Raster &fused, const Raster &reference)
{
    require_same_shape(fused, reference, "deviation_index");
    return relative_deviation(fused.samples(), reference.samples(), reference.samples(), "DI");
}

double snr(const Raster &fused, const Raster &reference)
{
    require_same_shape(fused, reference, "snr");
    const double noise = squared_error(fused, reference);
    if (noise == 0.0)
        return std::numeric_limits<double>::infinity();
    double signal = 0.0;
    for (double f : fused.samples())
        signal += f * f;
    return std::sqrt(signal / noise);
}

double nrmse(const Raster &fused, const Raster &reference)
{
    require_same_shape(fused, reference, "nrmse");
    const double n = static_cast<double>(fused.size());
    return std::sqrt(squared_error(fused, reference) / (n * max_dn * max_dn));
}

double pearson(const Raster &a, const Raster &b)
{
    require_same_shape(a, b, "pearson");
    const double ma = band_stats(a).mean;
    const double mb = band_stats(b).mean;
    const auto x = a.samples();
    const auto y = b.samples();
    double sab = 0.0;
    double saa = 0.0;
    double sbb = 0.0;
    for (std::size_t p = 0; p < x.size(); ++p) {
        const double da = x[p] - ma;
        const double db = y[p] - mb;
        sab += da * db;
        saa += da * da;
        sbb += db * db;
    }
    if (saa == 0.0 || sbb == 0.0)
        throw UndefinedMetric("undefined correlation: input has zero variance");
    return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

double fcc(const Raster &fused_band, const Raster &pan)
{
    require_same_shape(fused_band, pan, "fcc");
    return pearson(laplacian_hp(fused_band), laplacian_hp(pan));
}

Deviation hpdi(const Raster &fused_band, const Raster &pan)
{
    require_same_shape(fused_band, pan, "hpdi");
    const Raster f_hp = laplacian_hp(fused_band);
    const Raster p_hp = laplacian_hp(pan);
    return relative_deviation(f_hp.samples(), p_hp.samples(), pan.samples(), "HPDI");
}

ContrastPair csa(const Raster &band, const Raster &pan, double percentile)
{
    require_same_shape(band, pan, "csa");
    if (!(percentile > 0.0 && percentile < 100.0))
        throw std::invalid_argument("csa: percentile must lie in (0, 100)");

    std::vector<double> magnitude(pan.size());
    {
        const Raster hp = laplacian_hp(pan);
        std::transform(hp.samples().begin(), hp.samples().end(), magnitude.begin(),
                       [](double v) { return std::abs(v); });
    }

    // Nearest-rank percentile.
    std::vector<double> sorted = magnitude;
    std::sort(sorted.begin(), sorted.end());
    const auto rank = static_cast<std::size_t>(
        std::ceil(percentile / 100.0 * static_cast<double>(sorted.size())));
    const double threshold = sorted[std::clamp<std::size_t>(rank, 1, sorted.size()) - 1];

    const std::vector<double> contrast = local_contrast(band);
    double edge_sum = 0.0;
    double homog_sum = 0.0;
    std::size_t edge_n = 0;
    std::size_t homog_n = 0;
    for (std::size_t p = 0; p < contrast.size(); ++p) {
        if (magnitude[p] >= threshold) {
            edge_sum += contrast[p];
            ++edge_n;
        } else {
            homog_sum += contrast[p];
            ++homog_n;
        }
    }
    if (edge_n == 0 || homog_n == 0)
        throw UndefinedMetric(std::string("class empty: no ") +
                              (edge_n == 0 ? "edge" : "homogeneous") + " pixels in PAN");
    return {edge_sum / static_cast<double>(edge_n), homog_sum / static_cast<double>(homog_n)};
}

std::string MetricRecord::band_label() const
{
    return band ? std::to_string(*band) : std::string("avg");
}

std::vector<MetricRecord> evaluate_all(const MultiBandImage &ms, const Raster &pan,
                                       const MultiBandImage &fused, const std::string &pair_id,
                                       const std::string &method, double csa_percentile)
{
    require_same_shape(ms.band(0), pan, "evaluate_all (ms vs pan)");
    require_same_shape(fused.band(0), pan, "evaluate_all (fused vs pan)");
    if (ms.band_count() != fused.band_count())
        throw std::invalid_argument("evaluate_all: MS has " + std::to_string(ms.band_count()) +
                                    " bands but fused image has " +
                                    std::to_string(fused.band_count()));

    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    const std::size_t bands = ms.band_count();
    std::vector<MetricRecord> records;
    records.reserve((bands + 1) * all_metrics.size());

    for (std::size_t k = 0; k < bands; ++k) {
        const Raster &f = fused.band(k);
        const Raster &m = ms.band(k);
        auto add = [&](Metric metric, double value, std::size_t excluded = 0) {
            records.push_back({pair_id, method, k + 1, metric, value, excluded, 0});
        };
        auto guarded = [&](Metric metric, auto &&compute) {
            try {
                compute();
            } catch (const UndefinedMetric &) {
                add(metric, nan);
            }
        };

        guarded(Metric::DI, [&] {
            const auto d = deviation_index(f, m);
            add(Metric::DI, d.value, d.excluded);
        });
        add(Metric::SNR, snr(f, m));
        add(Metric::NRMSE, nrmse(f, m));
        guarded(Metric::FCC, [&] { add(Metric::FCC, fcc(f, pan)); });
        guarded(Metric::HPDI, [&] {
            const auto d = hpdi(f, pan);
            add(Metric::HPDI, d.value, d.excluded);
        });
        try {
            const auto c = csa(f, pan, csa_percentile);
            add(Metric::CSA_edge, c.edge);
            add(Metric::CSA_homog, c.homogeneous);
        } catch (const UndefinedMetric &) {
            add(Metric::CSA_edge, nan);
            add(Metric::CSA_homog, nan);
        }
    }

    for (std::size_t mi = 0; mi < all_metrics.size(); ++mi) {
        double sum = 0.0;
        std::size_t finite = 0;
        std::size_t excluded_pixels = 0;
        bool any_inf = false;
        for (std::size_t k = 0; k < bands; ++k) {
            const MetricRecord &r = records[k * all_metrics.size() + mi];
            excluded_pixels += r.excluded_pixels;
            if (std::isfinite(r.value)) {
                sum += r.value;
                ++finite;
            } else if (std::isinf(r.value)) {
                any_inf = true;
            }
        }
        double value = nan;
        if (finite > 0)
            value = sum / static_cast<double>(finite);
        else if (any_inf)
            value = std::numeric_limits<double>::infinity();
        records.push_back({pair_id, method, std::nullopt, all_metrics[mi], value, excluded_pixels,
                           bands - finite});
    }
    return records;
}

} // namespace panfuse
