// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the panfuse Project.

#include <panfuse/pnm.hpp>

#include <panfuse/error.hpp>

#include <cstdint>
#include <fstream>
#include <iterator>
#include <limits>
#include <stdexcept>
#include <string>

namespace panfuse {

namespace {

constexpr std::uint64_t max_samples = std::uint64_t{1} << 32;

bool is_space(unsigned char c)
{
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

bool is_digit(unsigned char c) { return c >= '0' && c <= '9'; }

class Reader
{
public:
    explicit Reader(std::span<const unsigned char> bytes) : bytes_(bytes) {}

    std::size_t offset() const noexcept { return pos_; }
    std::size_t remaining() const noexcept { return bytes_.size() - pos_; }
    bool at_end() const noexcept { return pos_ >= bytes_.size(); }

    void skip_space_and_comments()
    {
        while (!at_end()) {
            const unsigned char c = bytes_[pos_];
            if (is_space(c)) {
                ++pos_;
            } else if (c == '#') {
                while (!at_end() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r')
                    ++pos_;
            } else {
                break;
            }
        }
    }

    /// Unsigned decimal token preceded by optional whitespace/comments.
    /// `what` names the field for diagnostics; `eof_is_truncation` selects
    /// the error reported when the data runs out.
    std::uint64_t read_uint(const char *what, bool eof_is_truncation)
    {
        skip_space_and_comments();
        if (at_end()) {
            if (eof_is_truncation)
                throw FormatError("truncated payload: expected " + std::string(what), pos_);
            throw FormatError("malformed header: missing " + std::string(what), pos_);
        }
        const std::size_t start = pos_;
        if (!is_digit(bytes_[pos_]))
            throw FormatError(std::string(eof_is_truncation ? "malformed sample" : "malformed header") +
                                  ": expected " + what,
                              start);
        std::uint64_t value = 0;
        while (!at_end() && is_digit(bytes_[pos_])) {
            value = value * 10 + (bytes_[pos_] - '0');
            if (value > std::numeric_limits<std::uint32_t>::max())
                throw FormatError("malformed header: " + std::string(what) + " too large", start);
            ++pos_;
        }
        if (!at_end() && !is_space(bytes_[pos_]) && bytes_[pos_] != '#')
            throw FormatError(std::string(eof_is_truncation ? "malformed sample" : "malformed header") +
                                  ": unexpected character after " + what,
                              pos_);
        return value;
    }

    unsigned char byte() { return bytes_[pos_++]; }

private:
    std::span<const unsigned char> bytes_;
    std::size_t pos_ = 0;
};

struct Header
{
    bool ascii = false;
    std::size_t channels = 1;
    std::size_t width = 0;
    std::size_t height = 0;
    std::uint32_t maxval = 0;
};

Header read_header(Reader &in)
{
    if (in.remaining() < 2)
        throw FormatError("unsupported magic number", 0);
    const unsigned char p = in.byte();
    const unsigned char kind = in.byte();
    Header h;
    if (p != 'P')
        throw FormatError("unsupported magic number", 0);
    switch (kind) {
    case '2': h.ascii = true; h.channels = 1; break;
    case '3': h.ascii = true; h.channels = 3; break;
    case '5': h.ascii = false; h.channels = 1; break;
    case '6': h.ascii = false; h.channels = 3; break;
    default: throw FormatError("unsupported magic number", 0);
    }
    if (in.at_end() || !(is_space(in.byte())))
        throw FormatError("malformed header: expected whitespace after magic number", 2);

    std::size_t at = in.offset();
    const auto width = in.read_uint("width", false);
    const auto height = in.read_uint("height", false);
    if (width == 0 || height == 0)
        throw FormatError("malformed header: zero image dimension", at);
    if (width * height > max_samples)
        throw FormatError("malformed header: image too large", at);

    in.skip_space_and_comments();
    at = in.offset();
    const auto maxval = in.read_uint("maxval", false);
    if (maxval == 0 || maxval > 65535)
        throw FormatError("malformed header: maxval must be in 1..65535", at);

    // Exactly one whitespace byte separates the header from binary data.
    if (in.at_end())
        throw FormatError("truncated payload: no raster data", in.offset());
    in.byte();

    h.width = static_cast<std::size_t>(width);
    h.height = static_cast<std::size_t>(height);
    h.maxval = static_cast<std::uint32_t>(maxval);
    return h;
}

} // namespace

PnmImage decode_pnm(std::span<const unsigned char> bytes)
{
    Reader in(bytes);
    const Header h = read_header(in);

    const std::size_t pixels = h.width * h.height;
    std::vector<std::vector<double>> planes(h.channels, std::vector<double>(pixels));
    const double scale = 255.0 / static_cast<double>(h.maxval);
    const std::size_t sample_bytes = h.maxval > 255 ? 2 : 1;

    if (!h.ascii) {
        const std::size_t needed = pixels * h.channels * sample_bytes;
        if (in.remaining() < needed)
            throw FormatError("truncated payload: need " + std::to_string(needed) +
                                  " bytes of raster data, have " +
                                  std::to_string(in.remaining()),
                              bytes.size());
    }

    for (std::size_t p = 0; p < pixels; ++p) {
        for (std::size_t c = 0; c < h.channels; ++c) {
            const std::size_t at = in.offset();
            std::uint32_t value = 0;
            if (h.ascii) {
                value = static_cast<std::uint32_t>(in.read_uint("sample", true));
            } else if (sample_bytes == 2) {
                value = static_cast<std::uint32_t>(in.byte()) << 8;
                value |= in.byte();
            } else {
                value = in.byte();
            }
            if (value > h.maxval)
                throw FormatError("malformed sample: value " + std::to_string(value) +
                                      " exceeds maxval " + std::to_string(h.maxval),
                                  at);
            planes[c][p] = h.maxval == 255 ? static_cast<double>(value) : value * scale;
        }
    }

    if (h.channels == 1)
        return Raster(h.width, h.height, std::move(planes[0]));

    std::vector<Raster> bands;
    for (auto &plane : planes)
        bands.emplace_back(h.width, h.height, std::move(plane));
    return MultiBandImage(std::move(bands));
}

PnmImage load_pnm(const std::filesystem::path &path)
{
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw Error("cannot open '" + path.string() + "'");
    std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(file)),
                                     std::istreambuf_iterator<char>());
    if (file.bad())
        throw Error("cannot read '" + path.string() + "'");
    try {
        return decode_pnm(bytes);
    } catch (const FormatError &e) {
        throw FormatError(path.string() + ": " + e.detail(), e.offset());
    }
}

Raster load_pgm(const std::filesystem::path &path)
{
    auto image = load_pnm(path);
    if (auto *r = std::get_if<Raster>(&image))
        return std::move(*r);
    throw Error("'" + path.string() + "' is a colour PPM, expected a single-band PGM");
}

MultiBandImage load_ppm(const std::filesystem::path &path)
{
    auto image = load_pnm(path);
    if (auto *m = std::get_if<MultiBandImage>(&image))
        return std::move(*m);
    throw Error("'" + path.string() + "' is a single-band PGM, expected a 3-band PPM");
}

std::vector<unsigned char> encode_pnm(const MultiBandImage &image)
{
    const std::size_t channels = image.band_count();
    if (channels != 1 && channels != 3)
        throw std::invalid_argument("unsupported band count " + std::to_string(channels) +
                                    " (PNM output needs 1 or 3 bands)");

    const MultiBandImage q = clamp_quantize(image);
    const std::string header = std::string(channels == 1 ? "P5" : "P6") + "\n" +
                               std::to_string(q.width()) + " " + std::to_string(q.height()) +
                               "\n255\n";

    std::vector<unsigned char> out(header.begin(), header.end());
    const std::size_t pixels = q.width() * q.height();
    out.reserve(out.size() + pixels * channels);
    for (std::size_t p = 0; p < pixels; ++p)
        for (std::size_t c = 0; c < channels; ++c)
            out.push_back(static_cast<unsigned char>(q.band(c).samples()[p]));
    return out;
}

std::vector<unsigned char> encode_pnm(const Raster &raster)
{
    return encode_pnm(MultiBandImage({raster}));
}

void save_pnm(const MultiBandImage &image, const std::filesystem::path &path)
{
    const auto bytes = encode_pnm(image);
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file)
        throw Error("cannot open '" + path.string() + "' for writing");
    file.write(reinterpret_cast<const char *>(bytes.data()),
               static_cast<std::streamsize>(bytes.size()));
    if (!file)
        throw Error("failed writing '" + path.string() + "'");
}

void save_pnm(const Raster &raster, const std::filesystem::path &path)
{
    save_pnm(MultiBandImage({raster}), path);
}

} // namespace panfuse
