#include "cupid/codec.hpp"

#include <bit>
#include <cstddef>

#include "cupid/errors.hpp"

namespace cupid {

namespace {

constexpr std::size_t kHeaderBytes = 10;
constexpr std::uint8_t kVersion = 1;

// ceil(log2(extent - 1)) for extent >= 2: bits needed to store offset-1
int offset_field_width(int extent) {
    return std::bit_width(static_cast<unsigned>(extent - 2));
}

class BitWriter {
public:
    explicit BitWriter(std::vector<std::uint8_t>& sink) : sink_(sink) {}

    void put_bit(unsigned bit) {
        if (free_ == 0) {
            sink_.push_back(0);
            free_ = 8;
        }
        --free_;
        if (bit) sink_.back() |= static_cast<std::uint8_t>(1u << free_);
    }

    void put_bits(std::uint32_t value, int count) {  // MSB first
        for (int k = count - 1; k >= 0; --k) put_bit((value >> k) & 1u);
    }

private:
    std::vector<std::uint8_t>& sink_;
    int free_ = 0;
};

class BitReader {
public:
    BitReader(std::span<const std::uint8_t> bytes, std::size_t start_byte)
        : bytes_(bytes), byte_(start_byte) {}

    unsigned get_bit() {
        if (byte_ >= bytes_.size()) throw TruncatedStream("stream ends inside tree bits");
        const unsigned bit = (bytes_[byte_] >> (7 - filled_)) & 1u;
        if (++filled_ == 8) {
            filled_ = 0;
            ++byte_;
        }
        return bit;
    }

    std::uint32_t get_bits(int count) {
        std::uint32_t value = 0;
        for (int k = 0; k < count; ++k) value = (value << 1) | get_bit();
        return value;
    }

    std::size_t align_to_byte() {  // padding bit values are not inspected
        if (filled_ != 0) {
            filled_ = 0;
            ++byte_;
        }
        return byte_;
    }

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t byte_;
    int filled_ = 0;
};

}  // namespace

CodedStream serialize(const PartitionTree& tree, const DescriptorSet& desc) {
    if (tree.frame_width() > 65535 || tree.frame_height() > 65535)
        throw FrameTooLarge("frame dimensions above 65535 cannot be coded");
    if (desc.leaf_count != tree.leaf_count())
        throw DimensionMismatch("descriptor count differs from leaf count");
    if (desc.channels != 1 && desc.channels != 3)
        throw DimensionMismatch("descriptor channels must be 1 or 3");

    CodedStream out;
    out.reserve(kHeaderBytes + tree.node_count() / 4 + desc.values.size());
    out.insert(out.end(), {'C', 'U', 'P', 'D'});
    out.push_back(kVersion);
    out.push_back(static_cast<std::uint8_t>(desc.channels));
    const auto w = static_cast<std::uint16_t>(tree.frame_width());
    const auto h = static_cast<std::uint16_t>(tree.frame_height());
    out.push_back(static_cast<std::uint8_t>(w >> 8));
    out.push_back(static_cast<std::uint8_t>(w & 0xff));
    out.push_back(static_cast<std::uint8_t>(h >> 8));
    out.push_back(static_cast<std::uint8_t>(h & 0xff));

    BitWriter writer(out);
    std::vector<std::int32_t> stack{tree.root()};
    while (!stack.empty()) {
        const PartitionNode& node = tree.node(stack.back());
        stack.pop_back();
        if (node.leaf) {
            writer.put_bit(0);
            continue;
        }
        writer.put_bit(1);
        const bool horizontal = node.split.orientation == Orientation::Horizontal;
        writer.put_bit(horizontal ? 1 : 0);
        const int extent = horizontal ? node.cuboid.h : node.cuboid.w;
        writer.put_bits(static_cast<std::uint32_t>(node.split.offset - 1),
                        offset_field_width(extent));
        stack.push_back(node.second);
        stack.push_back(node.first);
    }

    out.insert(out.end(), desc.values.begin(), desc.values.end());
    return out;
}

DecodedFrame deserialize(std::span<const std::uint8_t> stream) {
    if (stream.size() < kHeaderBytes) throw TruncatedStream("stream shorter than the header");
    if (stream[0] != 'C' || stream[1] != 'U' || stream[2] != 'P' || stream[3] != 'D')
        throw BadMagic("magic bytes are not CUPD");
    if (stream[4] != kVersion) throw BadVersion("unsupported stream version");
    const int channels = stream[5];
    if (channels != 1 && channels != 3) throw MalformedStream("channels must be 1 or 3");
    const int width = (stream[6] << 8) | stream[7];
    const int height = (stream[8] << 8) | stream[9];
    if (width == 0 || height == 0) throw MalformedStream("zero frame dimension");

    PartitionTree tree(width, height);
    BitReader reader(stream, kHeaderBytes);
    std::vector<std::int32_t> stack{tree.root()};
    while (!stack.empty()) {
        const std::int32_t idx = stack.back();
        stack.pop_back();
        if (reader.get_bit() == 0) continue;  // leaf
        const Orientation orientation =
            reader.get_bit() ? Orientation::Horizontal : Orientation::Vertical;
        const Cuboid& cuboid = tree.node(idx).cuboid;
        const int extent = orientation == Orientation::Horizontal ? cuboid.h : cuboid.w;
        if (extent < 2) throw InfeasibleSplit("split stored for an extent of 1");
        const std::uint32_t raw = reader.get_bits(offset_field_width(extent));
        const int offset = static_cast<int>(raw) + 1;
        if (offset > extent - 1) throw InfeasibleSplit("split offset beyond the leaf extent");
        const auto [first, second] = tree.split_leaf(idx, SplitDecision{orientation, offset, 0.0});
        stack.push_back(second);
        stack.push_back(first);
    }

    const std::size_t descriptor_start = reader.align_to_byte();
    DescriptorSet desc;
    desc.leaf_count = tree.leaf_count();
    desc.channels = channels;
    const std::size_t descriptor_bytes =
        static_cast<std::size_t>(desc.leaf_count) * static_cast<std::size_t>(channels);
    if (stream.size() - descriptor_start < descriptor_bytes)
        throw TruncatedStream("stream ends inside descriptor bytes");
    if (stream.size() - descriptor_start > descriptor_bytes)
        throw MalformedStream("trailing bytes after the last descriptor");
    desc.values.assign(stream.begin() + descriptor_start, stream.end());
    return DecodedFrame{std::move(tree), std::move(desc)};
}

std::uint64_t predicted_size_bits(const PartitionTree& tree, int channels) {
    std::uint64_t tree_bits = 0;
    for (std::size_t i = 0; i < tree.node_count(); ++i) {
        const PartitionNode& node = tree.node(static_cast<std::int32_t>(i));
        ++tree_bits;
        if (node.leaf) continue;
        const int extent = node.split.orientation == Orientation::Horizontal ? node.cuboid.h
                                                                             : node.cuboid.w;
        tree_bits += 1 + static_cast<std::uint64_t>(offset_field_width(extent));
    }
    const std::uint64_t pad_bits = (8 - tree_bits % 8) % 8;
    return 8 * kHeaderBytes + tree_bits + pad_bits +
           8ull * static_cast<std::uint64_t>(tree.leaf_count()) * channels;
}

}  // namespace cupid
