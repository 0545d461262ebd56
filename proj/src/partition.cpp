#include "cupid/partition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

#include "cupid/errors.hpp"

namespace cupid {

namespace {

// Single shared entropy kernel. Every objective evaluation (sweep, naive
// oracle, public entropy()) funnels through this loop so equal histograms
// give bit-identical results.
double entropy_with_total(const Histogram& hist, std::uint64_t total) {
    double h = 0.0;
    const double n = static_cast<double>(total);
    for (int k = 0; k < ObjectiveConfig::kHistogramBins; ++k) {
        const std::uint32_t c = hist[k];
        if (c == 0) continue;
        const double p = static_cast<double>(c) / n;
        h -= p * std::log2(p);
    }
    return h < 0.0 ? 0.0 : h;
}

double combine_objective(const ObjectiveConfig& cfg, std::uint64_t n_first, double h_first,
                         std::uint64_t n_second, double h_second) {
    if (cfg.weighting == Weighting::PixelWeighted)
        return static_cast<double>(n_first) * h_first + static_cast<double>(n_second) * h_second;
    return h_first + h_second;
}

std::pair<Cuboid, Cuboid> split_halves(const Cuboid& c, Orientation orientation, int offset) {
    if (orientation == Orientation::Vertical)
        return {Cuboid{c.x, c.y, offset, c.h}, Cuboid{c.x + offset, c.y, c.w - offset, c.h}};
    return {Cuboid{c.x, c.y, c.w, offset}, Cuboid{c.x, c.y + offset, c.w, c.h - offset}};
}

void move_column(const LumaPlane& plane, const Cuboid& c, int local_col, Histogram& into,
                 Histogram& from) {
    const int px = c.x + local_col;
    for (int py = c.y; py < c.y + c.h; ++py) {
        const std::uint8_t bin = plane.bin_at(px, py);
        ++into[bin];
        --from[bin];
    }
}

void move_row(const LumaPlane& plane, const Cuboid& c, int local_row, Histogram& into,
              Histogram& from) {
    const int py = c.y + local_row;
    for (int px = c.x; px < c.x + c.w; ++px) {
        const std::uint8_t bin = plane.bin_at(px, py);
        ++into[bin];
        --from[bin];
    }
}

struct LeafEvaluation {
    double cost = 0.0;  // objective mass of the unsplit leaf
    std::optional<SplitDecision> best;
};

LeafEvaluation evaluate_leaf(const LumaPlane& plane, const Cuboid& c, const ObjectiveConfig& cfg) {
    const Histogram total = cuboid_histogram(plane, c);
    const std::uint64_t n_total = static_cast<std::uint64_t>(c.area());
    const double h_total = entropy_with_total(total, n_total);

    LeafEvaluation out;
    out.cost = cfg.weighting == Weighting::PixelWeighted
                   ? static_cast<double>(n_total) * h_total
                   : h_total;
    if (c.w == 1 && c.h == 1) return out;

    double best_objective = std::numeric_limits<double>::infinity();
    Orientation best_orientation = Orientation::Vertical;
    int best_offset = 0;

    Histogram first{};
    Histogram second = total;
    for (int i = 1; i <= c.w - 1; ++i) {
        move_column(plane, c, i - 1, first, second);
        const std::uint64_t n_first = static_cast<std::uint64_t>(i) * c.h;
        const std::uint64_t n_second = n_total - n_first;
        const double objective =
            combine_objective(cfg, n_first, entropy_with_total(first, n_first), n_second,
                              entropy_with_total(second, n_second));
        if (objective < best_objective) {
            best_objective = objective;
            best_orientation = Orientation::Vertical;
            best_offset = i;
        }
    }

    if (c.h >= 2) {
        first.fill(0);
        second = total;
        for (int j = 1; j <= c.h - 1; ++j) {
            move_row(plane, c, j - 1, first, second);
            const std::uint64_t n_first = static_cast<std::uint64_t>(j) * c.w;
            const std::uint64_t n_second = n_total - n_first;
            const double objective =
                combine_objective(cfg, n_first, entropy_with_total(first, n_first), n_second,
                                  entropy_with_total(second, n_second));
            if (objective < best_objective) {
                best_objective = objective;
                best_orientation = Orientation::Horizontal;
                best_offset = j;
            }
        }
    }

    out.best = SplitDecision{best_orientation, best_offset, best_objective};
    return out;
}

}  // namespace

LumaPlane luma_plane(const PixelBuffer& buf) {
    LumaPlane plane;
    plane.width = buf.width;
    plane.height = buf.height;
    const std::size_t count = buf.pixel_count();
    plane.values.resize(count);
    plane.bins.resize(count);
    if (buf.channels == 1) {
        for (std::size_t i = 0; i < count; ++i) {
            plane.values[i] = buf.planes[0][i];
            plane.bins[i] = buf.planes[0][i];
        }
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            const double y = 0.299 * buf.planes[0][i] + 0.587 * buf.planes[1][i] +
                             0.114 * buf.planes[2][i];
            plane.values[i] = y;
            plane.bins[i] = static_cast<std::uint8_t>(std::min<long>(std::lround(y), 255));
        }
    }
    return plane;
}

double entropy(const Histogram& hist) {
    std::uint64_t total = 0;
    for (const std::uint32_t c : hist) total += c;
    if (total == 0) throw EmptyHistogram("entropy of an empty histogram");
    return entropy_with_total(hist, total);
}

Histogram cuboid_histogram(const LumaPlane& plane, const Cuboid& cuboid) {
    Histogram hist{};
    for (int py = cuboid.y; py < cuboid.y + cuboid.h; ++py) {
        const std::uint8_t* row = plane.bins.data() + static_cast<std::size_t>(py) * plane.width;
        for (int px = cuboid.x; px < cuboid.x + cuboid.w; ++px) ++hist[row[px]];
    }
    return hist;
}

double split_objective(const LumaPlane& plane, const Cuboid& cuboid, Orientation orientation,
                       int offset, const ObjectiveConfig& cfg) {
    const auto [first, second] = split_halves(cuboid, orientation, offset);
    const Histogram hist_first = cuboid_histogram(plane, first);
    const Histogram hist_second = cuboid_histogram(plane, second);
    const std::uint64_t n_first = static_cast<std::uint64_t>(first.area());
    const std::uint64_t n_second = static_cast<std::uint64_t>(second.area());
    return combine_objective(cfg, n_first, entropy_with_total(hist_first, n_first), n_second,
                             entropy_with_total(hist_second, n_second));
}

std::optional<SplitDecision> best_split(const LumaPlane& plane, const Cuboid& cuboid,
                                        const ObjectiveConfig& cfg) {
    return evaluate_leaf(plane, cuboid, cfg).best;
}

std::optional<SplitDecision> best_split_naive(const LumaPlane& plane, const Cuboid& cuboid,
                                              const ObjectiveConfig& cfg) {
    std::optional<SplitDecision> best;
    for (int i = 1; i <= cuboid.w - 1; ++i) {
        const double objective = split_objective(plane, cuboid, Orientation::Vertical, i, cfg);
        if (!best || objective < best->objective)
            best = SplitDecision{Orientation::Vertical, i, objective};
    }
    for (int j = 1; j <= cuboid.h - 1; ++j) {
        const double objective = split_objective(plane, cuboid, Orientation::Horizontal, j, cfg);
        if (!best || objective < best->objective)
            best = SplitDecision{Orientation::Horizontal, j, objective};
    }
    return best;
}

PartitionTree::PartitionTree(int frame_width, int frame_height) {
    if (frame_width < 1 || frame_height < 1)
        throw std::invalid_argument("frame dimensions must be >= 1");
    nodes_.push_back(PartitionNode{Cuboid{0, 0, frame_width, frame_height}, {}, true, -1, -1});
}

std::pair<std::int32_t, std::int32_t> PartitionTree::split_leaf(std::int32_t idx,
                                                                const SplitDecision& decision) {
    PartitionNode& parent = nodes_[idx];
    if (!parent.leaf) throw std::logic_error("split_leaf on an internal node");
    const int extent =
        decision.orientation == Orientation::Vertical ? parent.cuboid.w : parent.cuboid.h;
    if (decision.offset < 1 || decision.offset > extent - 1)
        throw InfeasibleSplit("split offset out of range for the leaf extent");

    const auto [first_cuboid, second_cuboid] =
        split_halves(parent.cuboid, decision.orientation, decision.offset);
    const std::int32_t first_idx = static_cast<std::int32_t>(nodes_.size());
    const std::int32_t second_idx = first_idx + 1;
    parent.leaf = false;
    parent.split = decision;
    parent.first = first_idx;
    parent.second = second_idx;
    nodes_.push_back(PartitionNode{first_cuboid, {}, true, -1, -1});
    nodes_.push_back(PartitionNode{second_cuboid, {}, true, -1, -1});
    ++leaf_count_;
    return {first_idx, second_idx};
}

bool operator==(const PartitionTree& a, const PartitionTree& b) {
    std::vector<std::pair<std::int32_t, std::int32_t>> stack{{a.root(), b.root()}};
    while (!stack.empty()) {
        const auto [ia, ib] = stack.back();
        stack.pop_back();
        const PartitionNode& na = a.node(ia);
        const PartitionNode& nb = b.node(ib);
        if (na.cuboid != nb.cuboid || na.leaf != nb.leaf) return false;
        if (na.leaf) continue;
        if (na.split.orientation != nb.split.orientation || na.split.offset != nb.split.offset)
            return false;
        stack.emplace_back(na.first, nb.first);
        stack.emplace_back(na.second, nb.second);
    }
    return true;
}

PartitionTree partition(const PixelBuffer& buf, int cuboid_count, const ObjectiveConfig& cfg) {
    if (cuboid_count < 1) throw NZero("cuboid count must be >= 1");
    const std::int64_t pixels = static_cast<std::int64_t>(buf.width) * buf.height;
    if (cuboid_count > pixels) throw NTooLarge("cuboid count exceeds pixel count");

    const LumaPlane plane = luma_plane(buf);
    PartitionTree tree(buf.width, buf.height);

    struct Candidate {
        double gain;
        std::int32_t node;  // node ids grow in creation order
        SplitDecision decision;
    };
    // max gain first; ties go to the earliest-created leaf
    const auto worse = [](const Candidate& a, const Candidate& b) {
        if (a.gain != b.gain) return a.gain < b.gain;
        return a.node > b.node;
    };
    std::priority_queue<Candidate, std::vector<Candidate>, decltype(worse)> queue(worse);

    const auto enqueue = [&](std::int32_t idx) {
        const LeafEvaluation eval = evaluate_leaf(plane, tree.node(idx).cuboid, cfg);
        if (eval.best) queue.push(Candidate{eval.cost - eval.best->objective, idx, *eval.best});
    };

    enqueue(tree.root());
    while (tree.leaf_count() < cuboid_count) {
        const Candidate top = queue.top();  // non-empty while n <= pixel count
        queue.pop();
        const auto [first, second] = tree.split_leaf(top.node, top.decision);
        enqueue(first);
        enqueue(second);
    }
    return tree;
}

std::vector<std::int32_t> leaf_nodes_preorder(const PartitionTree& tree) {
    std::vector<std::int32_t> leaves;
    leaves.reserve(tree.leaf_count());
    std::vector<std::int32_t> stack{tree.root()};
    while (!stack.empty()) {
        const std::int32_t idx = stack.back();
        stack.pop_back();
        const PartitionNode& node = tree.node(idx);
        if (node.leaf) {
            leaves.push_back(idx);
        } else {
            stack.push_back(node.second);
            stack.push_back(node.first);
        }
    }
    return leaves;
}

std::vector<Cuboid> leaves_preorder(const PartitionTree& tree) {
    std::vector<Cuboid> cuboids;
    cuboids.reserve(tree.leaf_count());
    for (const std::int32_t idx : leaf_nodes_preorder(tree)) cuboids.push_back(tree.node(idx).cuboid);
    return cuboids;
}

}  // namespace cupid
