#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "cupid/image.hpp"
#include "cupid/partition.hpp"

namespace cupid {

struct MetricsRecord {
    int cuboid_count = 0;
    std::uint64_t bits = 0;
    double encode_time_s = 0.0;
    double y_psnr_db = 0.0;  // +infinity for an exact reconstruction
    std::vector<double> mse;  // per channel
};

/// Per-channel mean squared sample difference. Throws DimensionMismatch.
std::vector<double> mse(const PixelBuffer& a, const PixelBuffer& b);

/// 10*log10(255^2 / MSE) over the unrounded luma planes; +infinity when the
/// planes are identical.
double y_psnr(const PixelBuffer& original, const PixelBuffer& recon);

/// Copy of `buf` with the one-pixel ring of every leaf set to 255 in all
/// channels.
PixelBuffer render_overlay(const PixelBuffer& buf, const PartitionTree& tree);

/// For each requested cuboid count: partition, descriptors, serialize (the
/// timed encode path), then reconstruct and measure quality against `buf`.
/// Records come back in input order.
std::vector<MetricsRecord> analyze_sweep(const PixelBuffer& buf,
                                         const std::vector<int>& cuboid_counts,
                                         const ObjectiveConfig& cfg = {});

/// CSV with header n,bits,encode_time_s,y_psnr_db; reals use 6 decimals and
/// an exact reconstruction prints y_psnr_db as "inf".
void write_metrics_csv(std::ostream& out, const std::vector<MetricsRecord>& records);

}  // namespace cupid
