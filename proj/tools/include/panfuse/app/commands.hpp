// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the panfuse Project.

#pragma once

#include <panfuse/app/synthetic.hpp>
#include <panfuse/metrics.hpp>

#include <filesystem>
#include <iosfwd>
#include <string>

namespace panfuse::app {

/// Process exit codes shared by all subcommands.
enum ExitCode : int {
    exit_success = 0,
    exit_failure = 1, ///< runtime failure, or some batch pairs failed
    exit_usage = 2,   ///< bad arguments, unknown method, unparsable input
};

struct FuseArgs
{
    std::string method;
    std::filesystem::path ms;
    std::filesystem::path pan;
    std::filesystem::path out;
};

struct EvaluateArgs
{
    std::filesystem::path ms;
    std::filesystem::path pan;
    std::filesystem::path fused;
    std::filesystem::path csv;
    std::string pair_id = "pair";
    std::string method; ///< defaults to the fused file's stem
    double csa_percentile = default_csa_percentile;
};

struct GenSyntheticArgs
{
    SyntheticSpec spec;
    std::filesystem::path out_dir;
    std::string prefix;
};

struct ReportArgs
{
    std::filesystem::path csv;
    std::filesystem::path svg_dir;
    std::filesystem::path manifest; ///< optional, for sensor labels
};

int cmd_fuse(const FuseArgs &args, std::ostream &out, std::ostream &err);
int cmd_evaluate(const EvaluateArgs &args, std::ostream &out, std::ostream &err);
int cmd_batch(const std::filesystem::path &manifest, std::ostream &out, std::ostream &err);
int cmd_gen_synthetic(const GenSyntheticArgs &args, std::ostream &out, std::ostream &err);
int cmd_report(const ReportArgs &args, std::ostream &out, std::ostream &err);

/// Parses argv (argv[0] is the program name) and runs the subcommand.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace panfuse::app
