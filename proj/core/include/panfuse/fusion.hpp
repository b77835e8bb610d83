// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the panfuse Project.

#pragma once

#include <panfuse/raster.hpp>

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace panfuse {

enum class FusionMethod { SF, IHS, HSV, HFA, HFM, RVS, EF };

inline constexpr std::array<FusionMethod, 7> all_fusion_methods{
    FusionMethod::SF,  FusionMethod::IHS, FusionMethod::HSV, FusionMethod::HFA,
    FusionMethod::HFM, FusionMethod::RVS, FusionMethod::EF,
};

/// Canonical upper-case name ("SF", "IHS", ...).
std::string_view to_string(FusionMethod method) noexcept;

/// Case-insensitive lookup; nullopt for unknown names.
std::optional<FusionMethod> parse_fusion_method(std::string_view name) noexcept;

/// "SF, IHS, HSV, HFA, HFM, RVS, EF".
std::string fusion_method_list();

/// Whether a fusion result is returned before or after the final
/// clamp_quantize() step. Raw output exists for diagnostics and tests.
enum class FusionOutput { quantized, raw };

/// Mean/standard-deviation adjustment: the result has the reference mean
/// and standard deviation. A source with std below 1e-9 maps to the
/// constant reference mean.
Raster match_mean_std(const Raster &src, const BandStats &ref);

/// Ordinary least squares fit response = intercept + slope * predictor.
struct RegressionFit
{
    double slope = 0.0;
    double intercept = 0.0;
};

/// A predictor with zero variance yields slope 0 and intercept
/// mean(response). Throws std::invalid_argument on a size mismatch.
RegressionFit fit_regression(const Raster &response, const Raster &predictor);

// All fusion methods expect a 3-band MS image already resampled to the
// PAN size and throw std::invalid_argument otherwise.

/// Segmentation fusion: low-passed MS intensity plus the unsharp-mask
/// detail of PAN, matched back to the statistics of the original
/// intensity, then inverted with the untouched chromatic carriers.
MultiBandImage fuse_sf(const MultiBandImage &ms, const Raster &pan,
                       FusionOutput output = FusionOutput::quantized);

/// IHS substitution of a statistics-matched PAN for the intensity plane.
MultiBandImage fuse_ihs(const MultiBandImage &ms, const Raster &pan,
                        FusionOutput output = FusionOutput::quantized);

/// HSV substitution of a statistics-matched PAN for the value plane.
/// The substituted plane is clamped to [0, 255] before inversion.
MultiBandImage fuse_hsv(const MultiBandImage &ms, const Raster &pan,
                        FusionOutput output = FusionOutput::quantized);

/// F_k = M_k + (PAN - box_lpf(PAN)).
MultiBandImage fuse_hfa(const MultiBandImage &ms, const Raster &pan,
                        FusionOutput output = FusionOutput::quantized);

/// F_k = M_k * PAN / box_lpf(PAN); pixels with box_lpf(PAN) < 1e-9 keep M_k.
MultiBandImage fuse_hfm(const MultiBandImage &ms, const Raster &pan,
                        FusionOutput output = FusionOutput::quantized);

/// F_k = a_k + b_k * PAN with (a_k, b_k) the OLS fit of M_k on PAN.
MultiBandImage fuse_rvs(const MultiBandImage &ms, const Raster &pan,
                        FusionOutput output = FusionOutput::quantized);

/// F_k = M_k + laplacian_hp(PAN).
MultiBandImage fuse_ef(const MultiBandImage &ms, const Raster &pan,
                       FusionOutput output = FusionOutput::quantized);

/// Dispatches to the method, upsampling ms to the PAN size with
/// resample_nearest() first when the sizes differ.
MultiBandImage fuse(FusionMethod method, const MultiBandImage &ms, const Raster &pan,
                    FusionOutput output = FusionOutput::quantized);

/// Name-based dispatch; throws std::invalid_argument("unknown method ...")
/// for names outside the seven supported methods.
MultiBandImage fuse(std::string_view method, const MultiBandImage &ms, const Raster &pan,
                    FusionOutput output = FusionOutput::quantized);

} // namespace panfuse
