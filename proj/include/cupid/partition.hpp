#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cupid/image.hpp"

namespace cupid {

/// Axis-aligned rectangular region of a frame.
struct Cuboid {
    int x = 0;
    int y = 0;
    int w = 0;
    int h = 0;

    std::int64_t area() const { return static_cast<std::int64_t>(w) * h; }

    friend bool operator==(const Cuboid&, const Cuboid&) = default;
};

enum class Orientation : std::uint8_t { Vertical = 0, Horizontal = 1 };

/// One binary split of a cuboid. A Vertical split at offset i cuts between
/// local columns i-1 and i (child widths i and w-i); a Horizontal split at
/// offset j gives child heights j and h-j. Valid offsets are 1..extent-1.
/// `objective` is the entropy objective value of the split pair.
struct SplitDecision {
    Orientation orientation = Orientation::Vertical;
    int offset = 0;
    double objective = 0.0;
};

enum class Weighting : std::uint8_t { PixelWeighted, Unweighted };

struct ObjectiveConfig {
    Weighting weighting = Weighting::PixelWeighted;

    static constexpr int kHistogramBins = 256;
};

/// Evaluation plane derived from a frame. `values` holds the luma samples
/// (identity for grayscale, BT.601 weights 0.299/0.587/0.114 for RGB);
/// `bins` holds the same samples rounded half away from zero to [0,255],
/// which is what all histograms are built from.
struct LumaPlane {
    int width = 0;
    int height = 0;
    std::vector<double> values;
    std::vector<std::uint8_t> bins;

    std::uint8_t bin_at(int px, int py) const {
        return bins[static_cast<std::size_t>(py) * width + px];
    }
};

LumaPlane luma_plane(const PixelBuffer& buf);

using Histogram = std::array<std::uint32_t, 256>;

/// Shannon entropy in bits per sample of a 256-bin count histogram.
/// Throws EmptyHistogram when all counts are zero.
double entropy(const Histogram& hist);

Histogram cuboid_histogram(const LumaPlane& plane, const Cuboid& cuboid);

/// Objective for one candidate split: the pixel-count-weighted (default) or
/// plain sum of the entropies of the two half-cuboids.
double split_objective(const LumaPlane& plane, const Cuboid& cuboid, Orientation orientation,
                       int offset, const ObjectiveConfig& cfg);

/// Minimizing split over all (w-1) vertical + (h-1) horizontal candidates.
/// Ties: lower objective, then Vertical before Horizontal, then smaller
/// offset. Returns nullopt only for a 1x1 cuboid. Implemented as an
/// incremental histogram sweep: one pass builds the cuboid histogram, then
/// each candidate moves one column (or row) between the two half histograms.
std::optional<SplitDecision> best_split(const LumaPlane& plane, const Cuboid& cuboid,
                                        const ObjectiveConfig& cfg);

/// Reference implementation of best_split that rebuilds both half histograms
/// from scratch for every candidate. Same selection rule; kept as an
/// independent cross-check for the sweep.
std::optional<SplitDecision> best_split_naive(const LumaPlane& plane, const Cuboid& cuboid,
                                              const ObjectiveConfig& cfg);

struct PartitionNode {
    Cuboid cuboid;
    SplitDecision split;  // meaningful only when !leaf
    bool leaf = true;
    std::int32_t first = -1;   // left / top child
    std::int32_t second = -1;  // right / bottom child
};

/// Binary split tree over a frame. Nodes live in a pool in creation order;
/// node 0 is the root (the full frame). Children always tile their parent.
class PartitionTree {
public:
    PartitionTree(int frame_width, int frame_height);

    int frame_width() const { return nodes_[0].cuboid.w; }
    int frame_height() const { return nodes_[0].cuboid.h; }
    int leaf_count() const { return leaf_count_; }
    std::int32_t root() const { return 0; }
    std::size_t node_count() const { return nodes_.size(); }
    const PartitionNode& node(std::int32_t idx) const { return nodes_[idx]; }

    /// Split leaf `idx` by `decision`; returns the (first, second) child ids.
    /// Throws InfeasibleSplit when the offset is out of range for the leaf.
    std::pair<std::int32_t, std::int32_t> split_leaf(std::int32_t idx,
                                                     const SplitDecision& decision);

    /// Structural equality: geometry and split orientation/offset. The stored
    /// objective values are annotations and do not take part.
    friend bool operator==(const PartitionTree& a, const PartitionTree& b);

private:
    std::vector<PartitionNode> nodes_;
    int leaf_count_ = 1;
};

/// Greedy hierarchical partition of the frame into exactly `cuboid_count`
/// leaves: every leaf keeps its best split, and the leaf whose split removes
/// the most objective mass (ties: earliest-created leaf) is split next.
/// Deterministic. Throws NZero / NTooLarge on an out-of-range count.
PartitionTree partition(const PixelBuffer& buf, int cuboid_count,
                        const ObjectiveConfig& cfg = {});

/// Leaf cuboids in depth-first preorder (first child before second). This is
/// the canonical leaf order used by descriptors and the coded stream.
std::vector<Cuboid> leaves_preorder(const PartitionTree& tree);

/// Node ids of the leaves, same order as leaves_preorder.
std::vector<std::int32_t> leaf_nodes_preorder(const PartitionTree& tree);

}  // namespace cupid
