#include "cupid/descriptors.hpp"

#include <algorithm>

#include "cupid/errors.hpp"

namespace cupid {

DescriptorSet compute_descriptors(const PixelBuffer& buf, const PartitionTree& tree) {
    if (tree.frame_width() != buf.width || tree.frame_height() != buf.height)
        throw DimensionMismatch("tree frame size differs from buffer size");

    DescriptorSet desc;
    desc.leaf_count = tree.leaf_count();
    desc.channels = buf.channels;
    desc.values.reserve(static_cast<std::size_t>(desc.leaf_count) * desc.channels);

    for (const Cuboid& leaf : leaves_preorder(tree)) {
        const std::int64_t area = leaf.area();
        for (int ch = 0; ch < buf.channels; ++ch) {
            const std::vector<std::uint8_t>& plane = buf.planes[ch];
            std::int64_t sum = 0;
            for (int py = leaf.y; py < leaf.y + leaf.h; ++py) {
                const std::uint8_t* row = plane.data() + static_cast<std::size_t>(py) * buf.width;
                for (int px = leaf.x; px < leaf.x + leaf.w; ++px) sum += row[px];
            }
            // integer round half away from zero (samples are nonnegative)
            desc.values.push_back(static_cast<std::uint8_t>((2 * sum + area) / (2 * area)));
        }
    }
    return desc;
}

PixelBuffer reconstruct(const PartitionTree& tree, const DescriptorSet& desc) {
    if (desc.leaf_count != tree.leaf_count())
        throw DimensionMismatch("descriptor count differs from leaf count");

    PixelBuffer out = PixelBuffer::create(tree.frame_width(), tree.frame_height(), desc.channels);
    const std::vector<Cuboid> leaves = leaves_preorder(tree);
    for (int i = 0; i < desc.leaf_count; ++i) {
        const Cuboid& leaf = leaves[i];
        for (int ch = 0; ch < desc.channels; ++ch) {
            const std::uint8_t value = desc.value(i, ch);
            std::vector<std::uint8_t>& plane = out.planes[ch];
            for (int py = leaf.y; py < leaf.y + leaf.h; ++py) {
                std::uint8_t* row = plane.data() + static_cast<std::size_t>(py) * out.width;
                std::fill(row + leaf.x, row + leaf.x + leaf.w, value);
            }
        }
    }
    return out;
}

}  // namespace cupid
