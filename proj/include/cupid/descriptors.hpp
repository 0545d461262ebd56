#pragma once

#include <cstdint>
#include <vector>

#include "cupid/image.hpp"
#include "cupid/partition.hpp"

namespace cupid {

/// Per-leaf, per-channel quantized mean intensities, leaf-major in preorder.
struct DescriptorSet {
    int leaf_count = 0;
    int channels = 0;
    std::vector<std::uint8_t> values;  // values[leaf * channels + channel]

    std::uint8_t value(int leaf, int channel) const {
        return values[static_cast<std::size_t>(leaf) * channels + channel];
    }

    friend bool operator==(const DescriptorSet&, const DescriptorSet&) = default;
};

/// Mean sample of every leaf and channel, rounded half away from zero.
/// Throws DimensionMismatch when the tree was built over other dimensions.
DescriptorSet compute_descriptors(const PixelBuffer& buf, const PartitionTree& tree);

/// Coarse full-resolution frame: every pixel of leaf i takes that leaf's
/// descriptor in each channel.
PixelBuffer reconstruct(const PartitionTree& tree, const DescriptorSet& desc);

}  // namespace cupid
