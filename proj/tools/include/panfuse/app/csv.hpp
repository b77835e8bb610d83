// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the panfuse Project.

#pragma once

#include <panfuse/error.hpp>
#include <panfuse/metrics.hpp>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace panfuse::app {

inline constexpr std::string_view metric_csv_header =
    "pair_id,method,band,metric,value,excluded_pixels";

/// Malformed metric CSV; line() is 1-based.
class CsvError : public Error
{
public:
    CsvError(const std::string &what, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Shortest round-trip representation; "inf" and "nan" for non-finite values.
std::string format_value(double value);

void write_metric_header(std::ostream &out);
void write_metric_rows(std::ostream &out, const std::vector<MetricRecord> &records);

/// Parses a complete CSV document (header included). Blank lines are
/// ignored. Throws CsvError naming the offending line.
std::vector<MetricRecord> parse_metric_csv(std::string_view text);

} // namespace panfuse::app
