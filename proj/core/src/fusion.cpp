// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the panfuse Project.

#include <panfuse/fusion.hpp>

#include <panfuse/colorspace.hpp>
#include <panfuse/filtering.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

namespace panfuse {

namespace {

constexpr double degenerate_std = 1e-9;
constexpr double hfm_min_denominator = 1e-9;

void require_pair(const MultiBandImage &ms, const Raster &pan, const char *method, bool rgb)
{
    if (rgb && ms.band_count() != 3)
        throw std::invalid_argument(std::string(method) + ": MS image must have 3 bands, got " +
                                    std::to_string(ms.band_count()));
    require_same_shape(ms.band(0), pan, method);
}

MultiBandImage finish(MultiBandImage fused, FusionOutput output)
{
    return output == FusionOutput::quantized ? clamp_quantize(fused) : fused;
}

template <typename F>
MultiBandImage per_band(const MultiBandImage &ms, F &&f)
{
    std::vector<Raster> bands;
    bands.reserve(ms.band_count());
    for (const auto &b : ms.bands())
        bands.push_back(f(b));
    return MultiBandImage(std::move(bands));
}

} // namespace

std::string_view to_string(FusionMethod method) noexcept
{
    switch (method) {
    case FusionMethod::SF: return "SF";
    case FusionMethod::IHS: return "IHS";
    case FusionMethod::HSV: return "HSV";
    case FusionMethod::HFA: return "HFA";
    case FusionMethod::HFM: return "HFM";
    case FusionMethod::RVS: return "RVS";
    case FusionMethod::EF: return "EF";
    }
    return "?";
}

std::optional<FusionMethod> parse_fusion_method(std::string_view name) noexcept
{
    std::string upper(name);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    for (auto m : all_fusion_methods)
        if (to_string(m) == upper)
            return m;
    return std::nullopt;
}

std::string fusion_method_list()
{
    std::string out;
    for (auto m : all_fusion_methods) {
        if (!out.empty())
            out += ", ";
        out += to_string(m);
    }
    return out;
}

Raster match_mean_std(const Raster &src, const BandStats &ref)
{
    const BandStats own = band_stats(src);
    if (own.std < degenerate_std)
        return Raster(src.width(), src.height(), ref.mean);
    const double gain = ref.std / own.std;
    return map_samples(src, [&](double s) { return ref.mean + (s - own.mean) * gain; });
}

RegressionFit fit_regression(const Raster &response, const Raster &predictor)
{
    require_same_shape(response, predictor, "fit_regression");
    const BandStats px = band_stats(predictor);
    const double my = band_stats(response).mean;
    if (px.std < degenerate_std)
        return {0.0, my};

    const auto x = predictor.samples();
    const auto y = response.samples();
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t p = 0; p < x.size(); ++p) {
        const double dx = x[p] - px.mean;
        sxy += dx * (y[p] - my);
        sxx += dx * dx;
    }
    const double slope = sxy / sxx;
    return {slope, my - slope * px.mean};
}

MultiBandImage fuse_sf(const MultiBandImage &ms, const Raster &pan, FusionOutput output)
{
    require_pair(ms, pan, "fuse_sf", true);
    const IhsPlanes planes = ihs_forward(ms);

    const Raster i_lpf = box_lpf(planes.i);
    const Raster pan_detail = unsharp_mask(pan);
    const Raster i_star = zip_samples(i_lpf, pan_detail, [](double a, double d) { return a + d; });
    Raster i_new = match_mean_std(i_star, band_stats(planes.i));

    return finish(ihs_inverse({std::move(i_new), planes.v1, planes.v2}), output);
}

MultiBandImage fuse_ihs(const MultiBandImage &ms, const Raster &pan, FusionOutput output)
{
    require_pair(ms, pan, "fuse_ihs", true);
    const IhsPlanes planes = ihs_forward(ms);
    Raster i_new = match_mean_std(pan, band_stats(planes.i));
    return finish(ihs_inverse({std::move(i_new), planes.v1, planes.v2}), output);
}

MultiBandImage fuse_hsv(const MultiBandImage &ms, const Raster &pan, FusionOutput output)
{
    require_pair(ms, pan, "fuse_hsv", true);
    const HsvPlanes planes = hsv_forward(ms);
    Raster v_new = map_samples(match_mean_std(pan, band_stats(planes.v)),
                               [](double v) { return std::clamp(v, 0.0, 255.0); });
    return finish(hsv_inverse({planes.h, planes.s, std::move(v_new)}), output);
}

MultiBandImage fuse_hfa(const MultiBandImage &ms, const Raster &pan, FusionOutput output)
{
    require_pair(ms, pan, "fuse_hfa", false);
    const Raster detail = unsharp_mask(pan);
    return finish(per_band(ms,
                           [&](const Raster &m) {
                               return zip_samples(m, detail,
                                                  [](double a, double d) { return a + d; });
                           }),
                  output);
}

MultiBandImage fuse_hfm(const MultiBandImage &ms, const Raster &pan, FusionOutput output)
{
    require_pair(ms, pan, "fuse_hfm", false);
    const Raster low = box_lpf(pan);
    const auto p = pan.samples();
    const auto lp = low.samples();
    return finish(per_band(ms,
                           [&](const Raster &m) {
                               Raster out = m;
                               auto f = out.samples();
                               for (std::size_t i = 0; i < f.size(); ++i)
                                   if (lp[i] >= hfm_min_denominator)
                                       f[i] = f[i] * p[i] / lp[i];
                               return out;
                           }),
                  output);
}

MultiBandImage fuse_rvs(const MultiBandImage &ms, const Raster &pan, FusionOutput output)
{
    require_pair(ms, pan, "fuse_rvs", false);
    return finish(per_band(ms,
                           [&](const Raster &m) {
                               const RegressionFit fit = fit_regression(m, pan);
                               return map_samples(pan, [&](double x) {
                                   return fit.intercept + fit.slope * x;
                               });
                           }),
                  output);
}

MultiBandImage fuse_ef(const MultiBandImage &ms, const Raster &pan, FusionOutput output)
{
    require_pair(ms, pan, "fuse_ef", false);
    const Raster edges = laplacian_hp(pan);
    return finish(per_band(ms,
                           [&](const Raster &m) {
                               return zip_samples(m, edges,
                                                  [](double a, double e) { return a + e; });
                           }),
                  output);
}

MultiBandImage fuse(FusionMethod method, const MultiBandImage &ms, const Raster &pan,
                    FusionOutput output)
{
    if (ms.width() != pan.width() || ms.height() != pan.height())
        return fuse(method, resample_nearest(ms, pan.width(), pan.height()), pan, output);

    switch (method) {
    case FusionMethod::SF: return fuse_sf(ms, pan, output);
    case FusionMethod::IHS: return fuse_ihs(ms, pan, output);
    case FusionMethod::HSV: return fuse_hsv(ms, pan, output);
    case FusionMethod::HFA: return fuse_hfa(ms, pan, output);
    case FusionMethod::HFM: return fuse_hfm(ms, pan, output);
    case FusionMethod::RVS: return fuse_rvs(ms, pan, output);
    case FusionMethod::EF: return fuse_ef(ms, pan, output);
    }
    throw std::invalid_argument("unknown method");
}

MultiBandImage fuse(std::string_view method, const MultiBandImage &ms, const Raster &pan,
                    FusionOutput output)
{
    const auto parsed = parse_fusion_method(method);
    if (!parsed)
        throw std::invalid_argument("unknown method '" + std::string(method) +
                                    "'; valid methods: " + fusion_method_list());
    return fuse(*parsed, ms, pan, output);
}

} // namespace panfuse
