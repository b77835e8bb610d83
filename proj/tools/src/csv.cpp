// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the panfuse Project.

#include <panfuse/app/csv.hpp>

#include <charconv>
#include <cmath>
#include <ostream>

namespace panfuse::app {

std::string format_value(double value)
{
    if (std::isnan(value))
        return "nan";
    if (std::isinf(value))
        return value > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

void write_metric_header(std::ostream &out)
{
    out << metric_csv_header << '\n';
}

void write_metric_rows(std::ostream &out, const std::vector<MetricRecord> &records)
{
    for (const auto &r : records)
        out << r.pair_id << ',' << r.method << ',' << r.band_label() << ',' << to_string(r.metric)
            << ',' << format_value(r.value) << ',' << r.excluded_pixels << '\n';
}

namespace {

std::vector<std::string_view> split(std::string_view line, char sep)
{
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(sep, start);
        fields.push_back(line.substr(start, pos - start));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return fields;
}

template <typename T>
bool parse_number(std::string_view s, T &value)
{
    if (s.empty())
        return false;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
    return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

} // namespace

std::vector<MetricRecord> parse_metric_csv(std::string_view text)
{
    std::vector<MetricRecord> records;
    std::size_t line_no = 0;
    bool header_seen = false;

    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);

        if (!header_seen) {
            if (line != metric_csv_header)
                throw CsvError("expected header '" + std::string(metric_csv_header) + "'",
                               line_no);
            header_seen = true;
            continue;
        }
        if (line.empty())
            continue;

        const auto f = split(line, ',');
        if (f.size() != 6)
            throw CsvError("expected 6 fields, found " + std::to_string(f.size()), line_no);

        MetricRecord r;
        r.pair_id = std::string(f[0]);
        r.method = std::string(f[1]);
        if (r.pair_id.empty() || r.method.empty())
            throw CsvError("empty pair_id or method", line_no);

        if (f[2] != "avg") {
            std::size_t band = 0;
            if (!parse_number(f[2], band) || band == 0)
                throw CsvError("band must be a positive integer or 'avg'", line_no);
            r.band = band;
        }
        const auto metric = parse_metric(f[3]);
        if (!metric)
            throw CsvError("unknown metric '" + std::string(f[3]) + "'", line_no);
        r.metric = *metric;
        if (!parse_number(f[4], r.value))
            throw CsvError("value '" + std::string(f[4]) + "' is not a number", line_no);
        if (!parse_number(f[5], r.excluded_pixels))
            throw CsvError("excluded_pixels must be a non-negative integer", line_no);
        records.push_back(std::move(r));
    }
    if (!header_seen)
        throw CsvError("missing header", 1);
    return records;
}

} // namespace panfuse::app
