// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the panfuse Project.

#include <panfuse/app/batch.hpp>

#include <panfuse/app/csv.hpp>
#include <panfuse/fusion.hpp>
#include <panfuse/pnm.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace panfuse::app {

namespace {

struct PairOutcome
{
    std::vector<MetricRecord> records;
    std::optional<std::string> error;
    std::size_t products = 0;
};

PairOutcome run_pair(const BatchManifest &manifest, const BatchPair &pair)
{
    PairOutcome outcome;
    try {
        const MultiBandImage ms_raw = load_ppm(pair.ms_path);
        const Raster pan = load_pgm(pair.pan_path);
        if (ms_raw.band_count() != 3)
            throw std::invalid_argument("MS image must have 3 bands");
        const MultiBandImage ms = (ms_raw.width() == pan.width() && ms_raw.height() == pan.height())
                                      ? ms_raw
                                      : resample_nearest(ms_raw, pan.width(), pan.height());

        const auto dir = manifest.output_dir / pair.meta.pair_id;
        std::filesystem::create_directories(dir);
        for (FusionMethod method : manifest.methods) {
            const std::string name(to_string(method));
            const MultiBandImage fused = fuse(method, ms, pan);
            save_pnm(fused, dir / (name + ".ppm"));
            ++outcome.products;
            auto rows = evaluate_all(ms, pan, fused, pair.meta.pair_id, name,
                                     manifest.csa_percentile);
            outcome.records.insert(outcome.records.end(), rows.begin(), rows.end());
        }
    } catch (const std::exception &e) {
        outcome.records.clear();
        outcome.error = e.what();
    }
    return outcome;
}

} // namespace

std::size_t batch_threads_from_env()
{
    const char *env = std::getenv("PANFUSE_THREADS");
    if (env == nullptr || *env == '\0')
        return std::max(1u, std::thread::hardware_concurrency());
    const std::string_view text(env);
    std::size_t value = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size() || value == 0)
        throw std::invalid_argument("PANFUSE_THREADS must be a positive integer, got '" +
                                    std::string(text) + "'");
    return value;
}

BatchResult run_batch(const BatchManifest &manifest, std::size_t threads, std::ostream &log)
{
    const std::size_t n = manifest.pairs.size();
    std::vector<PairOutcome> outcomes(n);
    std::atomic<std::size_t> next{0};
    std::mutex log_mutex;

    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            const BatchPair &pair = manifest.pairs[i];
            outcomes[i] = run_pair(manifest, pair);
            std::lock_guard lock(log_mutex);
            if (outcomes[i].error)
                log << "[" << pair.meta.pair_id << "] FAILED: " << *outcomes[i].error << '\n';
            else
                log << "[" << pair.meta.pair_id << "] " << outcomes[i].products
                    << " products written\n";
        }
    };

    const std::size_t workers = std::clamp<std::size_t>(threads, 1, n);
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 1; t < workers; ++t)
            pool.emplace_back(worker);
        worker();
    }

    BatchResult result;
    for (std::size_t i = 0; i < n; ++i) {
        PairOutcome &o = outcomes[i];
        result.products += o.products;
        if (o.error) {
            result.failures.push_back({manifest.pairs[i].meta.pair_id, *o.error});
            continue;
        }
        result.records.insert(result.records.end(), std::make_move_iterator(o.records.begin()),
                              std::make_move_iterator(o.records.end()));
    }

    std::filesystem::create_directories(manifest.output_dir);
    result.csv_path = manifest.output_dir / "metrics.csv";
    std::ofstream csv(result.csv_path, std::ios::binary | std::ios::trunc);
    if (!csv)
        throw Error("cannot write '" + result.csv_path.string() + "'");
    write_metric_header(csv);
    write_metric_rows(csv, result.records);
    if (!csv)
        throw Error("failed writing '" + result.csv_path.string() + "'");
    return result;
}

} // namespace panfuse::app
