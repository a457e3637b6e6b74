#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "hometap/core/types.hpp"
#include "hometap/traceio/splt.hpp"

namespace hometap::features {

// Per-window statistics shared by the identification and detection stages.
// dispersion is the population std of lengths for stage 1 and the median
// absolute deviation for stage 2. Empty-window sentinels: mean_len = 0,
// mean_iat = window length, dispersion = 0; a window with one packet also
// reports mean_iat = window length (a lone packet carries no IAT).
struct WindowFeatures {
    double window_start_s = 0.0;
    double window_len_s = 0.0;
    double mean_len = 0.0;
    double mean_iat = 0.0;
    double dispersion = 0.0;
    long packet_count = 0;
    std::optional<std::string> label;

    Eigen::Vector3d vec() const { return {mean_len, mean_iat, dispersion}; }
};

// Consecutive non-overlapping windows of interval_s covering [0, trace end].
// A packet exactly at a window grid point belongs to the window starting
// there; a packet at the trace end lands in the last window.
std::vector<WindowFeatures> stage1_features(const traceio::SpltMatrix& m, double interval_s,
                                            const std::optional<std::string>& device_label = std::nullopt);

// As stage1_features but dispersion = MAD of lengths, and every window gets
// a {0,1} label: 1 iff it overlaps any DeviceActivity annotation.
std::vector<WindowFeatures> stage2_features(const traceio::SpltMatrix& m, double window_s,
                                            const std::vector<core::LabeledInterval>& annotations);

// Window-size heuristic: a quarter of the activity duration.
double recommend_window(double activity_duration_s);

// Feature matrix (rows = windows, cols = mean_len/mean_iat/dispersion).
Eigen::MatrixXd window_matrix(const std::vector<WindowFeatures>& ws);

// Header-bearing CSV: feature names first, label as the final column.
void write_features_csv(const std::vector<std::string>& names, const Eigen::MatrixXd& X,
                        const std::vector<std::string>& labels, std::ostream& out);

}  // namespace hometap::features
