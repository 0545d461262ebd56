#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cupid/descriptors.hpp"
#include "cupid/partition.hpp"

namespace cupid {

/// .cupd stream layout (all fixed, bit-exact):
///
///   header (10 bytes): "CUPD", version u8 = 1, channels u8,
///                      width u16 BE, height u16 BE
///   tree bits, MSB-first, depth-first preorder over nodes:
///     leaf     -> 0
///     internal -> 1, orientation bit (0 = vertical, 1 = horizontal),
///                 then offset-1 in ceil(log2(D-1)) bits, where D is the
///                 node's extent along the split axis (0 bits when D = 2).
///     first (left/top) child before second.
///   zero padding to the next byte boundary
///   descriptors: channels bytes per leaf, leaves in preorder
///
/// The decoder re-derives every node's extent top-down, so the offset field
/// widths are implicit and the tree section is self-delimiting.
using CodedStream = std::vector<std::uint8_t>;

struct DecodedFrame {
    PartitionTree tree;
    DescriptorSet descriptors;
};

/// Throws FrameTooLarge for dimensions above 65535 and DimensionMismatch
/// when the descriptor set does not match the tree.
CodedStream serialize(const PartitionTree& tree, const DescriptorSet& desc);

/// Exact inverse of serialize. Throws BadMagic, BadVersion, MalformedStream
/// (invalid header fields or trailing bytes), InfeasibleSplit (split stored
/// for a dimension it cannot cut), TruncatedStream.
DecodedFrame deserialize(std::span<const std::uint8_t> stream);

/// Exact size in bits of serialize(tree, desc) for a descriptor set with the
/// given channel count: 80 header bits + tree bits + padding + 8 per
/// descriptor byte.
std::uint64_t predicted_size_bits(const PartitionTree& tree, int channels);

}  // namespace cupid
