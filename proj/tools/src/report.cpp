// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the panfuse Project.

#include <panfuse/app/report.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace panfuse::app {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

std::size_t index_of(std::vector<std::string> &list, const std::string &key)
{
    const auto it = std::find(list.begin(), list.end(), key);
    if (it != list.end())
        return static_cast<std::size_t>(it - list.begin());
    list.push_back(key);
    return list.size() - 1;
}

std::string fmt(const char *spec, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

std::string escape(const std::string &s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

const char *polarity(Metric m)
{
    switch (m) {
    case Metric::DI:
    case Metric::NRMSE: return "lower is better";
    case Metric::SNR:
    case Metric::FCC:
    case Metric::HPDI: return "higher is better";
    default: return "";
    }
}

const char *method_colour(const std::string &method, std::size_t index)
{
    static const std::pair<const char *, const char *> known[] = {
        {"SF", "#1b9e77"},  {"IHS", "#d95f02"}, {"HSV", "#7570b3"}, {"HFA", "#e7298a"},
        {"HFM", "#66a61e"}, {"RVS", "#e6ab02"}, {"EF", "#a6761d"},
    };
    static const char *fallback[] = {"#666666", "#1f78b4", "#b2df8a", "#fb9a99"};
    for (const auto &[name, colour] : known)
        if (method == name)
            return colour;
    return fallback[index % 4];
}

} // namespace

std::vector<ChartData> collect_charts(const std::vector<MetricRecord> &records)
{
    std::vector<ChartData> charts;
    for (Metric metric : all_metrics) {
        ChartData chart;
        chart.metric = metric;

        struct Acc
        {
            double avg = nan;
            bool has_avg = false;
            double band_sum = 0.0;
            std::size_t band_n = 0;
            bool band_inf = false;
        };
        std::vector<std::vector<Acc>> acc;

        for (const auto &r : records) {
            if (r.metric != metric)
                continue;
            const std::size_t g = index_of(chart.pairs, r.pair_id);
            const std::size_t b = index_of(chart.methods, r.method);
            if (acc.size() <= g)
                acc.resize(g + 1);
            for (auto &row : acc)
                if (row.size() < chart.methods.size())
                    row.resize(chart.methods.size());
            Acc &a = acc[g][b];
            if (!r.band) {
                a.avg = r.value;
                a.has_avg = true;
            } else if (std::isfinite(r.value)) {
                a.band_sum += r.value;
                ++a.band_n;
            } else if (std::isinf(r.value)) {
                a.band_inf = true;
            }
        }
        if (chart.pairs.empty())
            continue;

        chart.values.assign(chart.pairs.size(), std::vector<double>(chart.methods.size(), nan));
        for (std::size_t g = 0; g < acc.size(); ++g)
            for (std::size_t b = 0; b < acc[g].size(); ++b) {
                const Acc &a = acc[g][b];
                if (a.has_avg)
                    chart.values[g][b] = a.avg;
                else if (a.band_n > 0)
                    chart.values[g][b] = a.band_sum / static_cast<double>(a.band_n);
                else if (a.band_inf)
                    chart.values[g][b] = std::numeric_limits<double>::infinity();
            }
        charts.push_back(std::move(chart));
    }
    return charts;
}

std::string render_svg(const ChartData &chart, const std::map<std::string, std::string> &pair_labels)
{
    const double bar_w = 18.0;
    const double group_gap = 24.0;
    const double left = 70.0;
    const double right = 150.0;
    const double top = 50.0;
    const double plot_h = 240.0;
    const double bottom = 70.0;

    const std::size_t groups = chart.pairs.size();
    const std::size_t per_group = chart.methods.size();
    const double group_w = per_group * bar_w + group_gap;
    const double plot_w = std::max(groups * group_w, 120.0);
    const double width = left + plot_w + right;
    const double height = top + plot_h + bottom;

    double lo = 0.0;
    double hi = 0.0;
    for (const auto &row : chart.values)
        for (double v : row)
            if (std::isfinite(v)) {
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
    if (hi == lo)
        hi = lo + 1.0;
    // Infinite values are capped slightly above the largest finite bar.
    const double cap = hi + 0.1 * (hi - lo);
    const double span = cap - lo;
    auto y_of = [&](double v) { return top + plot_h * (cap - v) / span; };
    const double zero_y = y_of(0.0);

    const std::string name(to_string(chart.metric));
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt("%.0f", width)
       << "\" height=\"" << fmt("%.0f", height) << "\" viewBox=\"0 0 " << fmt("%.0f", width) << ' '
       << fmt("%.0f", height) << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    os << "<title>" << escape(name) << " (band average)</title>\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << fmt("%.0f", width) << "\" height=\""
       << fmt("%.0f", height) << "\" fill=\"white\"/>\n";
    os << "<text x=\"" << fmt("%.1f", left) << "\" y=\"22\" font-size=\"15\" font-weight=\"bold\">"
       << escape(name) << " (band average)</text>\n";
    if (*polarity(chart.metric))
        os << "<text x=\"" << fmt("%.1f", left) << "\" y=\"38\" fill=\"#555\">"
           << polarity(chart.metric) << "</text>\n";

    // Axes and ticks.
    os << "<line class=\"axis\" x1=\"" << fmt("%.1f", left) << "\" y1=\"" << fmt("%.1f", top)
       << "\" x2=\"" << fmt("%.1f", left) << "\" y2=\"" << fmt("%.1f", top + plot_h)
       << "\" stroke=\"black\"/>\n";
    os << "<line class=\"axis\" x1=\"" << fmt("%.1f", left) << "\" y1=\"" << fmt("%.1f", zero_y)
       << "\" x2=\"" << fmt("%.1f", left + plot_w) << "\" y2=\"" << fmt("%.1f", zero_y)
       << "\" stroke=\"black\"/>\n";
    for (int t = 0; t <= 4; ++t) {
        const double v = lo + (hi - lo) * t / 4.0;
        const double y = y_of(v);
        os << "<line x1=\"" << fmt("%.1f", left - 4) << "\" y1=\"" << fmt("%.1f", y) << "\" x2=\""
           << fmt("%.1f", left) << "\" y2=\"" << fmt("%.1f", y) << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << fmt("%.1f", left - 6) << "\" y=\"" << fmt("%.1f", y + 4)
           << "\" text-anchor=\"end\">" << fmt("%.4g", v) << "</text>\n";
    }
    os << "<text class=\"axis-label\" transform=\"translate(18," << fmt("%.1f", top + plot_h / 2)
       << ") rotate(-90)\" text-anchor=\"middle\">" << escape(name) << "</text>\n";

    for (std::size_t g = 0; g < groups; ++g) {
        const double gx = left + group_gap / 2 + g * group_w;
        for (std::size_t b = 0; b < per_group; ++b) {
            const double v = chart.values[g][b];
            const double x = gx + b * bar_w;
            const double cx = x + bar_w / 2;
            if (std::isnan(v)) {
                os << "<text x=\"" << fmt("%.1f", cx) << "\" y=\"" << fmt("%.1f", zero_y - 4)
                   << "\" text-anchor=\"middle\" fill=\"#999\">n/a</text>\n";
                continue;
            }
            const bool infinite = std::isinf(v);
            const double shown = infinite ? (v > 0 ? cap : lo) : v;
            const double y0 = std::min(y_of(shown), zero_y);
            const double h = std::abs(y_of(shown) - zero_y);
            os << "<rect class=\"bar\" data-pair=\"" << escape(chart.pairs[g]) << "\" data-method=\""
               << escape(chart.methods[b]) << "\" x=\"" << fmt("%.1f", x + 1) << "\" y=\""
               << fmt("%.1f", y0) << "\" width=\"" << fmt("%.1f", bar_w - 2) << "\" height=\""
               << fmt("%.1f", h) << "\" fill=\"" << method_colour(chart.methods[b], b) << "\""
               << (infinite ? " stroke=\"black\" stroke-dasharray=\"3,2\"" : "") << "><title>"
               << escape(chart.pairs[g]) << ' ' << escape(chart.methods[b]) << ": "
               << (infinite ? std::string(v > 0 ? "inf" : "-inf") : fmt("%.6g", v))
               << "</title></rect>\n";
            if (infinite)
                os << "<text class=\"inf\" x=\"" << fmt("%.1f", cx) << "\" y=\""
                   << fmt("%.1f", y0 - 3) << "\" text-anchor=\"middle\">∞</text>\n";
        }
        const auto label_it = pair_labels.find(chart.pairs[g]);
        const std::string &label =
            label_it != pair_labels.end() ? label_it->second : chart.pairs[g];
        const double lx = gx + per_group * bar_w / 2;
        os << "<text x=\"" << fmt("%.1f", lx) << "\" y=\"" << fmt("%.1f", top + plot_h + 16)
           << "\" text-anchor=\"middle\">" << escape(label) << "</text>\n";
    }

    for (std::size_t b = 0; b < per_group; ++b) {
        const double ly = top + 10 + b * 16.0;
        const double lx = left + plot_w + 20;
        os << "<rect x=\"" << fmt("%.1f", lx) << "\" y=\"" << fmt("%.1f", ly - 9)
           << "\" width=\"10\" height=\"10\" fill=\"" << method_colour(chart.methods[b], b)
           << "\"/>\n";
        os << "<text x=\"" << fmt("%.1f", lx + 14) << "\" y=\"" << fmt("%.1f", ly) << "\">"
           << escape(chart.methods[b]) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace panfuse::app
