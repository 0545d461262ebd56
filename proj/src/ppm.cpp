#include "cupid/ppm.hpp"

#include <cstdio>
#include <cstring>
#include <limits>

#include "cupid/errors.hpp"

namespace cupid {

PixelBuffer PixelBuffer::create(int width, int height, int channels) {
    PixelBuffer buf;
    buf.width = width;
    buf.height = height;
    buf.channels = channels;
    buf.planes.assign(channels,
                      std::vector<std::uint8_t>(static_cast<std::size_t>(width) * height, 0));
    return buf;
}

namespace {

bool is_ppm_space(std::uint8_t c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

struct HeaderCursor {
    std::span<const std::uint8_t> bytes;
    std::size_t pos = 0;

    bool eof() const { return pos >= bytes.size(); }

    // Skips whitespace and # comments (which run to end of line).
    void skip_separators() {
        while (!eof()) {
            if (is_ppm_space(bytes[pos])) {
                ++pos;
            } else if (bytes[pos] == '#') {
                while (!eof() && bytes[pos] != '\n') ++pos;
            } else {
                break;
            }
        }
    }

    int read_int() {
        skip_separators();
        if (eof() || bytes[pos] < '0' || bytes[pos] > '9')
            throw MalformedHeader("expected decimal header field");
        std::int64_t value = 0;
        while (!eof() && bytes[pos] >= '0' && bytes[pos] <= '9') {
            value = value * 10 + (bytes[pos] - '0');
            if (value > std::numeric_limits<int>::max())
                throw MalformedHeader("header field out of range");
            ++pos;
        }
        return static_cast<int>(value);
    }
};

}  // namespace

PixelBuffer load_ppm(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '6'))
        throw MalformedHeader("not a binary PGM/PPM (want P5 or P6)");
    const int channels = bytes[1] == '5' ? 1 : 3;

    HeaderCursor cur{bytes, 2};
    const int width = cur.read_int();
    const int height = cur.read_int();
    const int maxval = cur.read_int();
    if (width < 1 || height < 1) throw MalformedHeader("dimensions must be >= 1");
    if (maxval != 255) throw UnsupportedMaxval("only maxval 255 is supported");
    // exactly one whitespace byte between maxval and the raster
    if (cur.eof() || !is_ppm_space(bytes[cur.pos]))
        throw MalformedHeader("missing whitespace after maxval");
    ++cur.pos;

    const std::size_t needed =
        static_cast<std::size_t>(width) * height * static_cast<std::size_t>(channels);
    if (bytes.size() - cur.pos < needed) throw TruncatedData("raster shorter than header claims");

    PixelBuffer buf = PixelBuffer::create(width, height, channels);
    const std::uint8_t* raster = bytes.data() + cur.pos;
    if (channels == 1) {
        std::memcpy(buf.planes[0].data(), raster, needed);
    } else {
        const std::size_t pixels = buf.pixel_count();
        for (std::size_t i = 0; i < pixels; ++i) {
            buf.planes[0][i] = raster[3 * i];
            buf.planes[1][i] = raster[3 * i + 1];
            buf.planes[2][i] = raster[3 * i + 2];
        }
    }
    return buf;
}

std::vector<std::uint8_t> save_ppm(const PixelBuffer& buf) {
    char header[48];
    const int len = std::snprintf(header, sizeof header, "P%c\n%d %d\n255\n",
                                  buf.channels == 1 ? '5' : '6', buf.width, buf.height);
    const std::size_t pixels = buf.pixel_count();
    std::vector<std::uint8_t> out;
    out.reserve(static_cast<std::size_t>(len) + pixels * buf.channels);
    out.insert(out.end(), header, header + len);
    if (buf.channels == 1) {
        out.insert(out.end(), buf.planes[0].begin(), buf.planes[0].end());
    } else {
        for (std::size_t i = 0; i < pixels; ++i) {
            out.push_back(buf.planes[0][i]);
            out.push_back(buf.planes[1][i]);
            out.push_back(buf.planes[2][i]);
        }
    }
    return out;
}

}  // namespace cupid
