#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cupid/image.hpp"

namespace cupid {

/// Parse a binary PGM (P5) or PPM (P6) with maxval 255. Header comments
/// (# to end of line) are allowed; trailing bytes after the raster are ignored.
/// Throws MalformedHeader, UnsupportedMaxval, TruncatedData.
PixelBuffer load_ppm(std::span<const std::uint8_t> bytes);

/// Emit P5 (1 channel) or P6 (3 channels), maxval 255. Bit-exact inverse of
/// load_ppm: header is "P5\n<w> <h>\n255\n" followed by the raster.
std::vector<std::uint8_t> save_ppm(const PixelBuffer& buf);

}  // namespace cupid
