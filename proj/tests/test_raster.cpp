// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the panfuse Project.

#include <panfuse/raster.hpp>

#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>

namespace panfuse {
namespace {

TEST(Raster, RejectsBadConstruction)
{
    EXPECT_THROW(Raster(0, 3), std::invalid_argument);
    EXPECT_THROW(Raster(2, 2, std::vector<double>{1, 2, 3}), std::invalid_argument);
    EXPECT_THROW(Raster(1, 1, std::vector<double>{std::numeric_limits<double>::quiet_NaN()}),
                 std::invalid_argument);
    EXPECT_THROW(Raster(1, 1, std::numeric_limits<double>::infinity()), std::invalid_argument);
}

TEST(Raster, RowMajorAccess)
{
    const Raster r(3, 2, std::vector<double>{0, 1, 2, 3, 4, 5});
    EXPECT_EQ(r(0, 2), 2);
    EXPECT_EQ(r(1, 0), 3);
    EXPECT_EQ(r.size(), 6u);
}

TEST(MultiBandImage, RequiresMatchingBands)
{
    EXPECT_THROW(MultiBandImage({}), std::invalid_argument);
    EXPECT_THROW(MultiBandImage({Raster(2, 2), Raster(3, 2)}), std::invalid_argument);
    const MultiBandImage img({Raster(4, 3), Raster(4, 3), Raster(4, 3)});
    EXPECT_EQ(img.band_count(), 3u);
    EXPECT_EQ(img.width(), 4u);
    EXPECT_EQ(img.height(), 3u);
}

TEST(BandStats, ConstantRaster)
{
    const auto s = band_stats(Raster(4, 4, 9.0));
    EXPECT_EQ(s.mean, 9.0);
    EXPECT_EQ(s.std, 0.0);
}

TEST(BandStats, HandComputed)
{
    const auto s = band_stats(Raster(2, 1, std::vector<double>{0, 2}));
    EXPECT_EQ(s.mean, 1.0);
    EXPECT_EQ(s.std, 1.0);
}

TEST(BandStats, MatchesTwoPassOracle)
{
    for (std::uint32_t seed = 1; seed <= 5; ++seed) {
        const Raster r = oracle::random_raster(8, 8, seed);
        const auto got = band_stats(r);
        const auto want = oracle::stats(oracle::to_grid(r));
        EXPECT_NEAR(got.mean, static_cast<double>(want.mean), 1e-12 * std::abs(got.mean));
        EXPECT_NEAR(got.std, static_cast<double>(want.std), 1e-12 * got.std);
    }
}

TEST(BandStats, PermutationInvariant)
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        Raster r = oracle::random_dn_raster(7, 5, 100 + trial);
        const auto before = band_stats(r);
        auto s = r.samples();
        std::shuffle(s.begin(), s.end(), rng);
        const auto after = band_stats(r);
        EXPECT_NEAR(before.mean, after.mean, 1e-12);
        EXPECT_NEAR(before.std, after.std, 1e-12);
    }
}

TEST(ClampQuantize, ClampsAndRounds)
{
    const Raster q = clamp_quantize(Raster(3, 1, std::vector<double>{-3.2, 12.5, 270.0}));
    EXPECT_EQ(q, Raster(3, 1, std::vector<double>({0, 13, 255})));
}

TEST(ClampQuantize, RoundHalfUp)
{
    const Raster q = clamp_quantize(Raster(2, 1, std::vector<double>{127.49, 127.5}));
    EXPECT_EQ(q(0, 0), 127);
    EXPECT_EQ(q(0, 1), 128);
    EXPECT_EQ(clamp_quantize(Raster(1, 1, 0.49999999999999994))(0, 0), 0);
}

TEST(ClampQuantize, IdempotentAndMonotone)
{
    for (std::uint32_t seed = 0; seed < 20; ++seed) {
        const Raster r = oracle::random_raster(9, 4, seed, -100.0, 400.0);
        const Raster q = clamp_quantize(r);
        EXPECT_EQ(clamp_quantize(q), q);

        std::vector<double> sorted(r.samples().begin(), r.samples().end());
        std::sort(sorted.begin(), sorted.end());
        const Raster qs = clamp_quantize(Raster(9, 4, sorted));
        EXPECT_TRUE(std::is_sorted(qs.samples().begin(), qs.samples().end()));
        for (double v : q.samples()) {
            EXPECT_GE(v, 0.0);
            EXPECT_LE(v, 255.0);
            EXPECT_EQ(v, std::floor(v));
        }
    }
}

TEST(ResampleNearest, SinglePixel)
{
    const Raster out = resample_nearest(Raster(1, 1, 7.0), 3, 3);
    EXPECT_EQ(out, Raster(3, 3, 7.0));
}

TEST(ResampleNearest, IntegerFactorBlocks)
{
    const Raster src(2, 2, std::vector<double>{1, 2, 3, 4});
    const Raster out = resample_nearest(src, 4, 4);
    EXPECT_EQ(out, Raster(4, 4, std::vector<double>({1, 1, 2, 2, 1, 1, 2, 2, 3, 3, 4, 4, 3, 3, 4, 4})));
}

TEST(ResampleNearest, NonIntegerFactorMatchesIndexEnumeration)
{
    const Raster src(2, 2, std::vector<double>{1, 2, 3, 4});
    const Raster out = resample_nearest(src, 3, 3);
    // Rows/cols 0,1 map to source 0 and 2 maps to source 1.
    EXPECT_EQ(out, Raster(3, 3, std::vector<double>({1, 1, 2, 1, 1, 2, 3, 3, 4})));

    // Brute force: for each target index, the source index s is the unique
    // one with s * T <= i * S < (s + 1) * T.
    for (std::size_t tw : {3u, 5u, 7u})
        for (std::size_t th : {4u, 6u}) {
            const Raster r = oracle::random_dn_raster(3, 4, static_cast<std::uint32_t>(tw * th));
            const Raster o = resample_nearest(r, tw, th);
            for (std::size_t i = 0; i < th; ++i)
                for (std::size_t j = 0; j < tw; ++j) {
                    std::size_t si = 0, sj = 0;
                    while ((si + 1) * th <= i * r.height())
                        ++si;
                    while ((sj + 1) * tw <= j * r.width())
                        ++sj;
                    EXPECT_EQ(o(i, j), r(si, sj));
                }
        }
}

TEST(ResampleNearest, IntegerFactorReplicatesEveryPixel)
{
    for (std::size_t f = 1; f <= 4; ++f) {
        const Raster r = oracle::random_dn_raster(5, 3, static_cast<std::uint32_t>(f));
        const Raster o = resample_nearest(r, 5 * f, 3 * f);
        for (std::size_t i = 0; i < o.height(); ++i)
            for (std::size_t j = 0; j < o.width(); ++j)
                ASSERT_EQ(o(i, j), r(i / f, j / f));
    }
}

TEST(ResampleNearest, IntroducesNoNewValues)
{
    for (std::uint32_t seed = 0; seed < 10; ++seed) {
        const Raster r = oracle::random_raster(4, 3, seed);
        const Raster o = resample_nearest(r, 11, 7);
        const std::set<double> src(r.samples().begin(), r.samples().end());
        const std::set<double> dst(o.samples().begin(), o.samples().end());
        EXPECT_EQ(src, dst);
    }
}

TEST(ResampleNearest, Errors)
{
    EXPECT_THROW(resample_nearest(Raster(2, 2), 0, 4), std::invalid_argument);
    EXPECT_THROW(resample_nearest(Raster(2, 2), 4, 0), std::invalid_argument);
    EXPECT_THROW(resample_nearest(Raster(4, 4), 2, 8), std::invalid_argument);
}

TEST(ResampleNearest, MultiBand)
{
    const MultiBandImage img({Raster(1, 1, 1.0), Raster(1, 1, 2.0), Raster(1, 1, 3.0)});
    const auto out = resample_nearest(img, 2, 3);
    ASSERT_EQ(out.band_count(), 3u);
    EXPECT_EQ(out.band(2), Raster(2, 3, 3.0));
}

} // namespace
} // namespace panfuse
