#include "cupid/metrics.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "cupid/codec.hpp"
#include "cupid/descriptors.hpp"
#include "cupid/errors.hpp"

namespace cupid {

namespace {

double plane_mse(const std::vector<double>& a, const std::vector<double>& b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return sum / static_cast<double>(a.size());
}

void whiten_ring(PixelBuffer& buf, const Cuboid& c) {
    for (int ch = 0; ch < buf.channels; ++ch) {
        std::vector<std::uint8_t>& plane = buf.planes[ch];
        std::uint8_t* top = plane.data() + static_cast<std::size_t>(c.y) * buf.width + c.x;
        std::uint8_t* bottom =
            plane.data() + static_cast<std::size_t>(c.y + c.h - 1) * buf.width + c.x;
        std::fill(top, top + c.w, 255);
        std::fill(bottom, bottom + c.w, 255);
        for (int py = c.y; py < c.y + c.h; ++py) {
            std::uint8_t* row = plane.data() + static_cast<std::size_t>(py) * buf.width;
            row[c.x] = 255;
            row[c.x + c.w - 1] = 255;
        }
    }
}

}  // namespace

std::vector<double> mse(const PixelBuffer& a, const PixelBuffer& b) {
    if (!a.same_shape(b)) throw DimensionMismatch("mse over differently shaped buffers");
    std::vector<double> out(a.channels, 0.0);
    const std::size_t count = a.pixel_count();
    for (int ch = 0; ch < a.channels; ++ch) {
        double sum = 0.0;
        for (std::size_t i = 0; i < count; ++i) {
            const double d = static_cast<double>(a.planes[ch][i]) - b.planes[ch][i];
            sum += d * d;
        }
        out[ch] = sum / static_cast<double>(count);
    }
    return out;
}

double y_psnr(const PixelBuffer& original, const PixelBuffer& recon) {
    if (!original.same_shape(recon)) throw DimensionMismatch("y_psnr over differently shaped buffers");
    const double mse_y = plane_mse(luma_plane(original).values, luma_plane(recon).values);
    if (mse_y == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(255.0 * 255.0 / mse_y);
}

PixelBuffer render_overlay(const PixelBuffer& buf, const PartitionTree& tree) {
    if (tree.frame_width() != buf.width || tree.frame_height() != buf.height)
        throw DimensionMismatch("tree frame size differs from buffer size");
    PixelBuffer out = buf;
    for (const Cuboid& leaf : leaves_preorder(tree)) whiten_ring(out, leaf);
    return out;
}

std::vector<MetricsRecord> analyze_sweep(const PixelBuffer& buf,
                                         const std::vector<int>& cuboid_counts,
                                         const ObjectiveConfig& cfg) {
    using clock = std::chrono::steady_clock;
    std::vector<MetricsRecord> records;
    records.reserve(cuboid_counts.size());
    for (const int n : cuboid_counts) {
        MetricsRecord rec;
        rec.cuboid_count = n;

        const auto start = clock::now();
        const PartitionTree tree = partition(buf, n, cfg);
        const DescriptorSet desc = compute_descriptors(buf, tree);
        const CodedStream stream = serialize(tree, desc);
        rec.encode_time_s = std::chrono::duration<double>(clock::now() - start).count();

        rec.bits = 8ull * stream.size();
        const PixelBuffer recon = reconstruct(tree, desc);
        rec.y_psnr_db = y_psnr(buf, recon);
        rec.mse = mse(buf, recon);
        records.push_back(std::move(rec));
    }
    return records;
}

void write_metrics_csv(std::ostream& out, const std::vector<MetricsRecord>& records) {
    out << "n,bits,encode_time_s,y_psnr_db\n";
    char line[128];
    for (const MetricsRecord& rec : records) {
        if (std::isinf(rec.y_psnr_db)) {
            std::snprintf(line, sizeof line, "%d,%llu,%.6f,inf\n", rec.cuboid_count,
                          static_cast<unsigned long long>(rec.bits), rec.encode_time_s);
        } else {
            std::snprintf(line, sizeof line, "%d,%llu,%.6f,%.6f\n", rec.cuboid_count,
                          static_cast<unsigned long long>(rec.bits), rec.encode_time_s,
                          rec.y_psnr_db);
        }
        out << line;
    }
}

}  // namespace cupid
