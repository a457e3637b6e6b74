#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "hometap/traceio/splt.hpp"

namespace hometap::features {

// Fixed time-series feature bank, 44 features per channel, computed over a
// segment's packet-length series and its inter-arrival series (88 total).
// Per channel, in order:
//   absolute energy, length, mean, median, minimum, maximum, skewness,
//   entropy (10-bin equal-width histogram, natural log),
//   standard deviation, variance                                  (10)
//   Ricker CWT coefficients, widths {2,5,10,20} x positions 0..4  (20)
//   DFT coefficient magnitudes, indices 0..9                      (10)
//   least-squares cubic fit over unit-normalized index, c3..c0    (4)
// Degenerate-series conventions: a DFT index past the series length is 0;
// the CWT input is zero-padded to length 5 and the cubic fit to length 4;
// the inter-arrival channel of a one-packet segment is the empty series,
// whose features are all 0.
struct TsFeatureVector {
    Eigen::VectorXd values;  // dimension kTsFeatureCount

    static constexpr int kPerChannel = 44;
    static constexpr int kTotal = 88;
    static const std::vector<std::string>& names();
};

// Feature bank over one series (the per-channel half of the vector).
Eigen::VectorXd series_features(const Eigen::VectorXd& series);

// Both channels of a segment's packets: lengths then inter-arrivals.
TsFeatureVector ts_features(const traceio::SpltMatrix& segment_packets);

Eigen::MatrixXd ts_feature_matrix(const std::vector<traceio::SpltMatrix>& segments);

}  // namespace hometap::features
