// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the panfuse Project.

#include <panfuse/app/synthetic.hpp>

#include <panfuse/colorspace.hpp>
#include <panfuse/filtering.hpp>
#include <panfuse/pnm.hpp>

#include <random>
#include <stdexcept>

namespace panfuse::app {

void validate(const SyntheticSpec &spec)
{
    if (spec.scale_factor < 2)
        throw std::invalid_argument("scale factor must be at least 2");
    if (spec.width == 0 || spec.height == 0)
        throw std::invalid_argument("synthetic image size must be non-zero");
    if (spec.width % spec.scale_factor != 0 || spec.height % spec.scale_factor != 0)
        throw std::invalid_argument("width and height must be divisible by the scale factor " +
                                    std::to_string(spec.scale_factor));
}

namespace {

Raster block_average(const Raster &r, std::size_t factor)
{
    const std::size_t w = r.width() / factor;
    const std::size_t h = r.height() / factor;
    const double area = static_cast<double>(factor * factor);
    Raster out(w, h);
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < w; ++j) {
            double sum = 0.0;
            for (std::size_t u = 0; u < factor; ++u)
                for (std::size_t v = 0; v < factor; ++v)
                    sum += r(i * factor + u, j * factor + v);
            out(i, j) = sum / area;
        }
    return out;
}

} // namespace

SyntheticPair make_synthetic(const SyntheticSpec &spec)
{
    validate(spec);
    std::mt19937_64 rng(spec.seed);
    const std::size_t n = spec.width * spec.height;

    std::vector<Raster> channels;
    for (int c = 0; c < 3; ++c) {
        std::vector<double> noise(n);
        for (auto &s : noise)
            s = 255.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
        Raster band(spec.width, spec.height, std::move(noise));
        for (std::size_t pass = 0; pass < spec.smoothing_passes; ++pass)
            band = box_lpf(band);
        channels.push_back(clamp_quantize(band));
    }
    MultiBandImage reference(std::move(channels));

    Raster pan = clamp_quantize(ihs_forward(reference).i);

    std::vector<Raster> ms_bands;
    for (const auto &band : reference.bands())
        ms_bands.push_back(clamp_quantize(resample_nearest(block_average(band, spec.scale_factor),
                                                           spec.width, spec.height)));

    return {std::move(reference), MultiBandImage(std::move(ms_bands)), std::move(pan)};
}

SyntheticFiles write_synthetic(const SyntheticSpec &spec, const std::filesystem::path &dir,
                               const std::string &prefix)
{
    const SyntheticPair pair = make_synthetic(spec);
    std::filesystem::create_directories(dir);
    SyntheticFiles files{dir / (prefix + "ms.ppm"), dir / (prefix + "pan.pgm"),
                         dir / (prefix + "reference.ppm")};
    save_pnm(pair.ms, files.ms);
    save_pnm(pair.pan, files.pan);
    save_pnm(pair.reference, files.reference);
    return files;
}

} // namespace panfuse::app
