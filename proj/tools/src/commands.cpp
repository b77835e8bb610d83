// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the panfuse Project.

#include <panfuse/app/commands.hpp>

#include <panfuse/app/batch.hpp>
#include <panfuse/app/csv.hpp>
#include <panfuse/app/manifest.hpp>
#include <panfuse/app/report.hpp>
#include <panfuse/fusion.hpp>
#include <panfuse/pnm.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace panfuse::app {

namespace {

MultiBandImage to_pan_size(const MultiBandImage &ms, const Raster &pan)
{
    if (ms.width() == pan.width() && ms.height() == pan.height())
        return ms;
    return resample_nearest(ms, pan.width(), pan.height());
}

} // namespace

int cmd_fuse(const FuseArgs &args, std::ostream &out, std::ostream &err)
{
    const auto method = parse_fusion_method(args.method);
    if (!method) {
        err << "error: unknown method '" << args.method << "'; valid methods: "
            << fusion_method_list() << '\n';
        return exit_usage;
    }
    try {
        const MultiBandImage ms = load_ppm(args.ms);
        const Raster pan = load_pgm(args.pan);
        const MultiBandImage fused = fuse(*method, ms, pan);
        save_pnm(fused, args.out);
        out << to_string(*method) << ": " << fused.width() << "x" << fused.height() << " -> "
            << args.out.string() << '\n';
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_success;
}

int cmd_evaluate(const EvaluateArgs &args, std::ostream &out, std::ostream &err)
{
    std::vector<MetricRecord> records;
    try {
        const Raster pan = load_pgm(args.pan);
        const MultiBandImage ms = to_pan_size(load_ppm(args.ms), pan);
        const MultiBandImage fused = load_ppm(args.fused);
        if (fused.width() != pan.width() || fused.height() != pan.height()) {
            err << "error: fused image is " << fused.width() << "x" << fused.height()
                << " but PAN is " << pan.width() << "x" << pan.height() << '\n';
            return exit_failure;
        }
        const std::string method = args.method.empty() ? args.fused.stem().string() : args.method;
        records = evaluate_all(ms, pan, fused, args.pair_id, method, args.csa_percentile);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    }

    const bool fresh = !std::filesystem::exists(args.csv) || std::filesystem::file_size(args.csv) == 0;
    std::ofstream csv(args.csv, std::ios::binary | std::ios::app);
    if (!csv) {
        err << "error: cannot write '" << args.csv.string() << "'\n";
        return exit_failure;
    }
    if (fresh)
        write_metric_header(csv);
    write_metric_rows(csv, records);
    out << records.size() << " metric rows appended to " << args.csv.string() << '\n';
    return exit_success;
}

int cmd_batch(const std::filesystem::path &manifest_path, std::ostream &out, std::ostream &err)
{
    BatchManifest manifest;
    std::size_t threads = 1;
    try {
        manifest = load_manifest(manifest_path);
        threads = batch_threads_from_env();
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    BatchResult result;
    try {
        result = run_batch(manifest, threads, out);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    }

    out << "batch: " << manifest.pairs.size() - result.failures.size() << "/"
        << manifest.pairs.size() << " pairs, " << result.products << " products, "
        << result.records.size() << " metric rows -> " << result.csv_path.string() << '\n';
    if (!result.failures.empty()) {
        err << result.failures.size() << " pair(s) failed:\n";
        for (const auto &f : result.failures)
            err << "  " << f.pair_id << ": " << f.message << '\n';
        return exit_failure;
    }
    return exit_success;
}

int cmd_gen_synthetic(const GenSyntheticArgs &args, std::ostream &out, std::ostream &err)
{
    try {
        validate(args.spec);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    try {
        const SyntheticFiles files = write_synthetic(args.spec, args.out_dir, args.prefix);
        out << files.ms.string() << '\n' << files.pan.string() << '\n'
            << files.reference.string() << '\n';
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_success;
}

int cmd_report(const ReportArgs &args, std::ostream &out, std::ostream &err)
{
    std::vector<MetricRecord> records;
    std::map<std::string, std::string> labels;
    try {
        std::ifstream file(args.csv, std::ios::binary);
        if (!file) {
            err << "error: cannot open '" << args.csv.string() << "'\n";
            return exit_usage;
        }
        std::ostringstream text;
        text << file.rdbuf();
        records = parse_metric_csv(text.str());
        if (!args.manifest.empty())
            for (const auto &pair : load_manifest(args.manifest).pairs)
                labels[pair.meta.pair_id] = pair.meta.label();
    } catch (const std::exception &e) {
        err << "error: " << args.csv.string() << ": " << e.what() << '\n';
        return exit_usage;
    }
    if (records.empty()) {
        err << "error: " << args.csv.string() << ": no records\n";
        return exit_usage;
    }

    try {
        std::filesystem::create_directories(args.svg_dir);
        for (const auto &chart : collect_charts(records)) {
            const auto path = args.svg_dir / (std::string(to_string(chart.metric)) + ".svg");
            std::ofstream svg(path, std::ios::binary | std::ios::trunc);
            svg << render_svg(chart, labels);
            if (!svg)
                throw Error("failed writing '" + path.string() + "'");
            out << path.string() << '\n';
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_success;
}

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Pan-sharpening fusion and quality evaluation", "panfuse"};
    app.require_subcommand(1);

    FuseArgs fuse_args;
    auto *fuse_cmd = app.add_subcommand("fuse", "Fuse one MS/PAN pair");
    fuse_cmd->add_option("--method", fuse_args.method, "One of " + fusion_method_list())->required();
    fuse_cmd->add_option("--ms", fuse_args.ms, "3-band MS image (PPM)")->required();
    fuse_cmd->add_option("--pan", fuse_args.pan, "PAN image (PGM)")->required();
    fuse_cmd->add_option("--out", fuse_args.out, "Fused output (PPM)")->required();

    EvaluateArgs eval_args;
    auto *eval_cmd = app.add_subcommand("evaluate", "Append quality metrics of a fused image to a CSV");
    eval_cmd->add_option("--ms", eval_args.ms, "Original MS image (PPM)")->required();
    eval_cmd->add_option("--pan", eval_args.pan, "PAN image (PGM)")->required();
    eval_cmd->add_option("--fused", eval_args.fused, "Fused image (PPM)")->required();
    eval_cmd->add_option("--csv", eval_args.csv, "Metric CSV to append to")->required();
    eval_cmd->add_option("--pair-id", eval_args.pair_id, "Pair label")->capture_default_str();
    eval_cmd->add_option("--method", eval_args.method, "Method label (default: fused file stem)");
    eval_cmd->add_option("--csa-percentile", eval_args.csa_percentile,
                         "Edge-class percentile for CSA")
        ->capture_default_str()
        ->check(CLI::Range(0.0, 100.0));

    std::filesystem::path manifest;
    auto *batch_cmd = app.add_subcommand("batch", "Run every method on every pair of a manifest");
    batch_cmd->add_option("manifest,--manifest", manifest, "JSON manifest")->required();

    GenSyntheticArgs gen_args;
    auto *gen_cmd = app.add_subcommand("gen-synthetic", "Write a synthetic MS/PAN/reference triple");
    gen_cmd->add_option("--seed", gen_args.spec.seed)->capture_default_str();
    gen_cmd->add_option("--width", gen_args.spec.width)->capture_default_str();
    gen_cmd->add_option("--height", gen_args.spec.height)->capture_default_str();
    gen_cmd->add_option("--scale", gen_args.spec.scale_factor, "MS degradation ratio")
        ->capture_default_str();
    gen_cmd->add_option("--passes", gen_args.spec.smoothing_passes, "Box smoothing passes")
        ->capture_default_str();
    gen_cmd->add_option("--out-dir", gen_args.out_dir)->required();
    gen_cmd->add_option("--prefix", gen_args.prefix, "File name prefix");

    ReportArgs report_args;
    auto *report_cmd = app.add_subcommand("report", "Render SVG bar charts from a metric CSV");
    report_cmd->add_option("--csv", report_args.csv)->required();
    report_cmd->add_option("--svg-dir", report_args.svg_dir)->required();
    report_cmd->add_option("--manifest", report_args.manifest, "Manifest with sensor labels");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_success;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        if (const auto *sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front())
            err << sub->help();
        else
            err << app.help();
        return exit_usage;
    }

    if (fuse_cmd->parsed())
        return cmd_fuse(fuse_args, out, err);
    if (eval_cmd->parsed())
        return cmd_evaluate(eval_args, out, err);
    if (batch_cmd->parsed())
        return cmd_batch(manifest, out, err);
    if (gen_cmd->parsed())
        return cmd_gen_synthetic(gen_args, out, err);
    if (report_cmd->parsed())
        return cmd_report(report_args, out, err);
    return exit_usage;
}

} // namespace panfuse::app
