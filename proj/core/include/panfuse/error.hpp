// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the panfuse Project.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace panfuse {

/// Base class for every error raised by the library. Precondition
/// violations on arguments (band counts, dimension mismatches) are
/// reported as std::invalid_argument instead.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A PNM stream could not be decoded. Carries the byte offset at which
/// the decoder gave up.
class FormatError : public Error
{
public:
    FormatError(const std::string &what, std::size_t offset)
        : Error(what + " at byte " + std::to_string(offset)), detail_(what), offset_(offset)
    {
    }

    std::size_t offset() const noexcept { return offset_; }

    /// Message without the offset suffix.
    const std::string &detail() const noexcept { return detail_; }

private:
    std::string detail_;
    std::size_t offset_;
};

/// A quality metric has no defined value for its inputs (zero variance,
/// all-zero denominators, an empty pixel class).
class UndefinedMetric : public Error
{
public:
    using Error::Error;
};

} // namespace panfuse
