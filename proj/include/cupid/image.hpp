#pragma once

#include <cstdint>
#include <vector>

namespace cupid {

/// Planar raster frame: 1 (gray) or 3 (RGB) planes of 8-bit samples,
/// each plane row-major with width*height entries.
struct PixelBuffer {
    int width = 0;
    int height = 0;
    int channels = 0;
    std::vector<std::vector<std::uint8_t>> planes;

    static PixelBuffer create(int width, int height, int channels);

    std::size_t pixel_count() const {
        return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    }

    std::uint8_t sample(int channel, int x, int y) const {
        return planes[channel][static_cast<std::size_t>(y) * width + x];
    }
    void set_sample(int channel, int x, int y, std::uint8_t value) {
        planes[channel][static_cast<std::size_t>(y) * width + x] = value;
    }

    bool same_shape(const PixelBuffer& other) const {
        return width == other.width && height == other.height && channels == other.channels;
    }

    friend bool operator==(const PixelBuffer&, const PixelBuffer&) = default;
};

}  // namespace cupid
