// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the panfuse Project.

#include <panfuse/app/batch.hpp>
#include <panfuse/app/commands.hpp>
#include <panfuse/app/csv.hpp>
#include <panfuse/app/manifest.hpp>
#include <panfuse/app/report.hpp>
#include <panfuse/app/synthetic.hpp>
#include <panfuse/colorspace.hpp>
#include <panfuse/fusion.hpp>
#include <panfuse/pnm.hpp>

#include "support/scratch.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <set>
#include <sstream>

namespace panfuse::app {
namespace {

using panfuse::testing::Scratch;
using panfuse::testing::slurp;
using panfuse::testing::spit;

std::size_t count_of(const std::string &text, const std::string &needle)
{
    std::size_t n = 0;
    for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1))
        ++n;
    return n;
}

MultiBandImage decimate(const MultiBandImage &img, std::size_t factor)
{
    std::vector<Raster> bands;
    for (const auto &b : img.bands()) {
        Raster s(b.width() / factor, b.height() / factor);
        for (std::size_t i = 0; i < s.height(); ++i)
            for (std::size_t j = 0; j < s.width(); ++j)
                s(i, j) = b(factor * i, factor * j);
        bands.push_back(s);
    }
    return MultiBandImage(bands);
}

std::string manifest_json(const std::vector<std::string> &pair_ids, const std::string &methods,
                          const std::string &extra = "")
{
    std::string pairs;
    for (const auto &id : pair_ids) {
        if (!pairs.empty())
            pairs += ",";
        pairs += R"({"pair_id": ")" + id + R"(", "ms_path": ")" + id + R"(_ms.ppm", "pan_path": ")" + id +
                 R"(_pan.pgm", "ms_sensor": "SPOT XS", "pan_sensor": "SPOT P"})";
    }
    return R"({"pairs": [)" + pairs + R"(], "methods": )" + methods + R"(, "output_dir": "out")" + extra + "}";
}

TEST(Synthetic, Deterministic)
{
    Scratch a("syn_a"), b("syn_b");
    const SyntheticSpec spec{42, 32, 24, 4, 3};
    const auto fa = write_synthetic(spec, a.path());
    const auto fb = write_synthetic(spec, b.path());
    EXPECT_EQ(slurp(fa.ms), slurp(fb.ms));
    EXPECT_EQ(slurp(fa.pan), slurp(fb.pan));
    EXPECT_EQ(slurp(fa.reference), slurp(fb.reference));
    EXPECT_NE(slurp(fa.ms), slurp(write_synthetic({43, 32, 24, 4, 3}, a.path(), "other_").ms));
}

TEST(Synthetic, BlockStructure)
{
    const auto pair = make_synthetic({7, 4, 4, 2, 1});
    for (const auto &band : pair.ms.bands()) {
        const std::set<double> distinct(band.samples().begin(), band.samples().end());
        EXPECT_LE(distinct.size(), 4u);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                EXPECT_EQ(band(i, j), band(i / 2 * 2, j / 2 * 2));
    }
}

TEST(Synthetic, PanIsReferenceIntensity)
{
    const auto pair = make_synthetic({1, 64, 64, 4, 3});
    EXPECT_EQ(pair.pan, clamp_quantize(ihs_forward(pair.reference).i));
    for (std::size_t k = 0; k < 3; ++k) {
        // Block means preserve the band mean up to quantization.
        EXPECT_NEAR(band_stats(pair.ms.band(k)).mean, band_stats(pair.reference.band(k)).mean, 0.5);
    }
}

TEST(Synthetic, RejectsBadSpecs)
{
    EXPECT_THROW(make_synthetic({1, 30, 32, 4, 3}), std::invalid_argument);
    EXPECT_THROW(make_synthetic({1, 32, 32, 1, 3}), std::invalid_argument);
    EXPECT_THROW(make_synthetic({1, 0, 32, 4, 3}), std::invalid_argument);
}

TEST(Csv, FormatValue)
{
    EXPECT_EQ(format_value(0.5), "0.5");
    EXPECT_EQ(format_value(std::numeric_limits<double>::infinity()), "inf");
    EXPECT_EQ(format_value(std::nan("")), "nan");
    EXPECT_EQ(std::stod(format_value(0.1 + 0.2)), 0.1 + 0.2);
}

TEST(Csv, RoundTrip)
{
    const auto pair = make_synthetic({2, 16, 16, 4, 2});
    auto rows = evaluate_all(pair.ms, pair.pan, fuse_sf(pair.ms, pair.pan), "p-1", "SF");
    const auto more = evaluate_all(pair.ms, pair.pan, pair.ms, "p-1", "MS");
    rows.insert(rows.end(), more.begin(), more.end());

    std::ostringstream out;
    write_metric_header(out);
    write_metric_rows(out, rows);
    const auto parsed = parse_metric_csv(out.str());
    ASSERT_EQ(parsed.size(), rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        EXPECT_EQ(parsed[r].pair_id, rows[r].pair_id);
        EXPECT_EQ(parsed[r].method, rows[r].method);
        EXPECT_EQ(parsed[r].band, rows[r].band);
        EXPECT_EQ(parsed[r].metric, rows[r].metric);
        EXPECT_EQ(parsed[r].excluded_pixels, rows[r].excluded_pixels);
        if (std::isnan(rows[r].value))
            EXPECT_TRUE(std::isnan(parsed[r].value));
        else
            EXPECT_EQ(parsed[r].value, rows[r].value);
    }
}

TEST(Csv, MalformedInputReportsLine)
{
    const std::string header(metric_csv_header);
    auto line_of = [](const std::string &text) -> std::size_t {
        try {
            parse_metric_csv(text);
        } catch (const CsvError &e) {
            return e.line();
        }
        return 0;
    };
    EXPECT_EQ(line_of("pair,method\n"), 1u);
    EXPECT_EQ(line_of(header + "\np,SF,1,DI,0.5,0\np,SF,1,DI,0.5\n"), 3u);
    EXPECT_EQ(line_of(header + "\np,SF,1,XX,0.5,0\n"), 2u);
    EXPECT_EQ(line_of(header + "\np,SF,0,DI,0.5,0\n"), 2u);
    EXPECT_EQ(line_of(header + "\np,SF,1,DI,abc,0\n"), 2u);
    EXPECT_EQ(line_of(header + "\n\np,SF,avg,DI,0.5,0\n"), 0u);
}

TEST(Manifest, Parses)
{
    const auto m = parse_manifest(manifest_json({"a", "b"}, R"(["sf", "HFM"])", R"(, "csa_percentile": 75)"),
                                  "/data");
    ASSERT_EQ(m.pairs.size(), 2u);
    EXPECT_EQ(m.pairs[0].meta.pair_id, "a");
    EXPECT_EQ(m.pairs[1].ms_path, std::filesystem::path("/data/b_ms.ppm"));
    EXPECT_EQ(m.output_dir, std::filesystem::path("/data/out"));
    EXPECT_EQ(m.methods, (std::vector<FusionMethod>{FusionMethod::SF, FusionMethod::HFM}));
    EXPECT_EQ(m.csa_percentile, 75.0);
    EXPECT_NE(m.pairs[0].meta.label().find("SPOT"), std::string::npos);
}

TEST(Manifest, Rejects)
{
    EXPECT_THROW(parse_manifest("{", "."), ManifestError);
    EXPECT_THROW(parse_manifest(manifest_json({"a"}, R"(["WT"])"), "."), ManifestError);
    EXPECT_THROW(parse_manifest(manifest_json({"a"}, R"([])"), "."), ManifestError);
    EXPECT_THROW(parse_manifest(manifest_json({"a"}, R"(["SF", "sf"])"), "."), ManifestError);
    EXPECT_THROW(parse_manifest(manifest_json({"a", "a"}, R"(["SF"])"), "."), ManifestError);
    EXPECT_THROW(parse_manifest(manifest_json({"a,b"}, R"(["SF"])"), "."), ManifestError);
    EXPECT_THROW(parse_manifest(manifest_json({"a"}, R"(["SF"])", R"(, "csa_percentile": 100)"), "."),
                 ManifestError);
    EXPECT_THROW(parse_manifest(R"({"pairs": [], "methods": ["SF"]})", "."), ManifestError);
}

class BatchFixture : public ::testing::Test
{
protected:
    void SetUp() override
    {
        for (std::uint64_t s = 1; s <= 3; ++s)
            write_synthetic({s, 32, 32, 4, 2}, dir_.path(), "p" + std::to_string(s) + "_");
        // Half-resolution MS for p2 exercises the resampling path.
        save_pnm(decimate(load_ppm(dir_ / "p2_ms.ppm"), 2), dir_ / "p2_ms.ppm");
    }

    BatchManifest manifest(const std::vector<std::string> &ids)
    {
        return parse_manifest(manifest_json(ids, R"(["SF","IHS","HSV","HFA","HFM","RVS","EF"])"), dir_.path());
    }

    Scratch dir_{"batch"};
};

TEST_F(BatchFixture, AllPairsAllMethods)
{
    std::ostringstream log;
    const auto result = run_batch(manifest({"p1", "p2"}), 2, log);
    EXPECT_TRUE(result.failures.empty());
    EXPECT_EQ(result.products, 14u);
    EXPECT_EQ(result.records.size(), 14u * 4 * 7);
    for (const auto &id : {"p1", "p2"})
        for (auto m : all_fusion_methods)
            EXPECT_TRUE(std::filesystem::exists(dir_ / "out" / id / (std::string(to_string(m)) + ".ppm")));
    const auto parsed = parse_metric_csv(slurp(result.csv_path));
    EXPECT_EQ(parsed.size(), result.records.size());
    EXPECT_EQ(parsed.front().pair_id, "p1");
    EXPECT_EQ(parsed.back().pair_id, "p2");
}

TEST_F(BatchFixture, ProductsMatchLibrary)
{
    std::ostringstream log;
    run_batch(manifest({"p1"}), 1, log);
    const auto ms = load_ppm(dir_ / "p1_ms.ppm");
    const auto pan = load_pgm(dir_ / "p1_pan.pgm");
    EXPECT_EQ(load_ppm(dir_ / "out" / "p1" / "HFM.ppm"), fuse_hfm(ms, pan));
}

TEST_F(BatchFixture, FailedPairDoesNotStopOthers)
{
    std::filesystem::remove(dir_ / "p2_ms.ppm");
    std::ostringstream log;
    const auto result = run_batch(manifest({"p1", "p2", "p3"}), 3, log);
    ASSERT_EQ(result.failures.size(), 1u);
    EXPECT_EQ(result.failures[0].pair_id, "p2");
    EXPECT_EQ(result.products, 14u);
    EXPECT_EQ(result.records.size(), 14u * 28);
    for (const auto &r : result.records)
        EXPECT_NE(r.pair_id, "p2");
    EXPECT_NE(log.str().find("FAILED"), std::string::npos);

    spit(dir_ / "m.json", manifest_json({"p1", "p2", "p3"}, R"(["SF"])"));
    std::ostringstream out, err;
    EXPECT_EQ(cmd_batch(dir_ / "m.json", out, err), exit_failure);
    EXPECT_NE(err.str().find("p2"), std::string::npos);
}

TEST_F(BatchFixture, RerunIsIdentical)
{
    std::ostringstream log;
    const auto first = slurp(run_batch(manifest({"p1", "p2", "p3"}), 3, log).csv_path);
    const auto image = slurp(dir_ / "out" / "p3" / "RVS.ppm");
    const auto second = slurp(run_batch(manifest({"p1", "p2", "p3"}), 1, log).csv_path);
    EXPECT_EQ(first, second);
    EXPECT_EQ(image, slurp(dir_ / "out" / "p3" / "RVS.ppm"));
}

TEST(Report, BarsPerPairAndMethod)
{
    std::vector<MetricRecord> rows;
    for (const std::string pair : {"x", "y"})
        for (const std::string method : {"SF", "IHS"})
            rows.push_back({pair, method, std::nullopt, Metric::DI, pair == "x" ? 0.1 : 0.2, 0, 0});
    const auto charts = collect_charts(rows);
    ASSERT_EQ(charts.size(), 1u);
    EXPECT_EQ(charts[0].metric, Metric::DI);
    EXPECT_EQ(charts[0].pairs, (std::vector<std::string>{"x", "y"}));
    EXPECT_EQ(charts[0].methods, (std::vector<std::string>{"SF", "IHS"}));
    const auto svg = render_svg(charts[0]);
    EXPECT_EQ(count_of(svg, "class=\"bar\""), 4u);
    EXPECT_NE(svg.find("lower is better"), std::string::npos);
    EXPECT_EQ(svg, render_svg(collect_charts(rows)[0]));
}

TEST(Report, BandMeanWithoutAverageRows)
{
    std::vector<MetricRecord> rows{{"x", "SF", 1, Metric::FCC, 0.2, 0, 0},
                                   {"x", "SF", 2, Metric::FCC, 0.4, 0, 0}};
    const auto charts = collect_charts(rows);
    ASSERT_EQ(charts.size(), 1u);
    EXPECT_NEAR(charts[0].values[0][0], 0.3, 1e-15);
    EXPECT_NE(render_svg(charts[0]).find("higher is better"), std::string::npos);
}

TEST(Report, InfiniteAndMissingValues)
{
    std::vector<MetricRecord> rows{
        {"x", "SF", std::nullopt, Metric::SNR, std::numeric_limits<double>::infinity(), 0, 0},
        {"x", "IHS", std::nullopt, Metric::SNR, 12.5, 0, 0},
        {"x", "HSV", std::nullopt, Metric::SNR, std::nan(""), 0, 3}};
    const auto svg = render_svg(collect_charts(rows)[0], {{"x", "SPOT XS / SPOT P"}});
    EXPECT_EQ(count_of(svg, "class=\"inf\""), 1u);
    EXPECT_NE(svg.find("n/a"), std::string::npos);
    EXPECT_NE(svg.find("SPOT XS / SPOT P"), std::string::npos);
}

TEST(Commands, ReportRejectsEmptyCsv)
{
    Scratch dir("report");
    spit(dir / "m.csv", std::string(metric_csv_header) + "\n");
    std::ostringstream out, err;
    EXPECT_EQ(cmd_report({dir / "m.csv", dir / "svg", {}}, out, err), exit_usage);
    EXPECT_NE(err.str().find("no records"), std::string::npos);
    spit(dir / "bad.csv", std::string(metric_csv_header) + "\nx,SF,1,DI\n");
    EXPECT_EQ(cmd_report({dir / "bad.csv", dir / "svg", {}}, out, err), exit_usage);
    EXPECT_NE(err.str().find("line 2"), std::string::npos);
}

TEST(Commands, FuseResamplesLikeLibrary)
{
    Scratch dir("fuse");
    const auto pair = make_synthetic({5, 32, 32, 4, 2});
    const MultiBandImage ms_small = decimate(pair.ms, 2);
    save_pnm(ms_small, dir / "ms.ppm");
    save_pnm(pair.pan, dir / "pan.pgm");

    std::ostringstream out, err;
    ASSERT_EQ(cmd_fuse({"ihs", dir / "ms.ppm", dir / "pan.pgm", dir / "f.ppm"}, out, err), exit_success);
    EXPECT_EQ(load_ppm(dir / "f.ppm"), fuse_ihs(resample_nearest(ms_small, 32, 32), pair.pan));

    EXPECT_EQ(cmd_fuse({"WT", dir / "ms.ppm", dir / "pan.pgm", dir / "g.ppm"}, out, err), exit_usage);
    EXPECT_NE(err.str().find("SF, IHS, HSV, HFA, HFM, RVS, EF"), std::string::npos);
    EXPECT_FALSE(std::filesystem::exists(dir / "g.ppm"));
    EXPECT_EQ(cmd_fuse({"SF", dir / "missing.ppm", dir / "pan.pgm", dir / "g.ppm"}, out, err), exit_failure);
}

TEST(Commands, EvaluateAppends)
{
    Scratch dir("eval");
    write_synthetic({6, 32, 32, 4, 2}, dir.path());
    std::ostringstream out, err;
    EvaluateArgs args{dir / "ms.ppm", dir / "pan.pgm", dir / "ms.ppm", dir / "m.csv"};
    ASSERT_EQ(cmd_evaluate(args, out, err), exit_success);
    ASSERT_EQ(cmd_evaluate(args, out, err), exit_success);
    const auto text = slurp(dir / "m.csv");
    EXPECT_EQ(count_of(text, "pair_id,method"), 1u);
    const auto rows = parse_metric_csv(text);
    ASSERT_EQ(rows.size(), 56u);
    EXPECT_EQ(rows[0].method, "ms");
    EXPECT_EQ(rows[0].value, 0.0);
    EXPECT_TRUE(std::isinf(rows[1].value));
}

TEST(Commands, RunCliExitCodes)
{
    std::ostringstream out, err;
    const char *unknown[] = {"panfuse", "frobnicate"};
    EXPECT_EQ(run_cli(2, unknown, out, err), exit_usage);
    const char *missing[] = {"panfuse", "fuse", "--method", "SF"};
    EXPECT_EQ(run_cli(4, missing, out, err), exit_usage);
    const char *help[] = {"panfuse", "--help"};
    EXPECT_EQ(run_cli(2, help, out, err), exit_success);
    EXPECT_NE(out.str().find("gen-synthetic"), std::string::npos);
}

TEST(Env, ThreadCount)
{
    ::setenv("PANFUSE_THREADS", "3", 1);
    EXPECT_EQ(batch_threads_from_env(), 3u);
    ::setenv("PANFUSE_THREADS", "0", 1);
    EXPECT_THROW(batch_threads_from_env(), std::invalid_argument);
    ::setenv("PANFUSE_THREADS", "2x", 1);
    EXPECT_THROW(batch_threads_from_env(), std::invalid_argument);
    ::unsetenv("PANFUSE_THREADS");
    EXPECT_GE(batch_threads_from_env(), 1u);
}

} // namespace
} // namespace panfuse::app
