#include "hometap/features/window.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace hometap::features {

namespace {

double population_std(const std::vector<double>& v) {
    if (v.empty()) return 0.0;
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    double ss = 0.0;
    for (double x : v) ss += (x - mean) * (x - mean);
    return std::sqrt(ss / static_cast<double>(v.size()));
}

double median_of(std::vector<double> v) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double median_absolute_deviation(const std::vector<double>& v) {
    if (v.empty()) return 0.0;
    const double med = median_of(v);
    std::vector<double> dev;
    dev.reserve(v.size());
    for (double x : v) dev.push_back(std::abs(x - med));
    return median_of(std::move(dev));
}

enum class Dispersion { Std, Mad };

std::vector<WindowFeatures> windowed(const traceio::SpltMatrix& m, double window_s, Dispersion kind) {
    if (window_s <= 0.0) throw core::DataError("window size must be positive");
    const Eigen::Index n = m.rows.rows();
    const double end = m.end_time();
    // Windows cover [0, ceil(end/W)*W); the boundary packet at an exact
    // multiple of W is clamped into the final window.
    auto window_count = static_cast<std::size_t>(std::max<long long>(1, std::llround(std::ceil(end / window_s))));
    if (n == 0) window_count = 1;

    std::vector<std::vector<Eigen::Index>> members(window_count);
    for (Eigen::Index i = 0; i < n; ++i) {
        auto w = static_cast<long long>(m.rows(i, 0) / window_s);
        w = std::min<long long>(w, static_cast<long long>(window_count) - 1);
        members[static_cast<std::size_t>(w)].push_back(i);
    }

    std::vector<WindowFeatures> out(window_count);
    for (std::size_t w = 0; w < window_count; ++w) {
        auto& f = out[w];
        f.window_start_s = static_cast<double>(w) * window_s;
        f.window_len_s = window_s;
        const auto& idx = members[w];
        f.packet_count = static_cast<long>(idx.size());
        if (idx.empty()) {
            f.mean_iat = window_s;
            continue;
        }
        std::vector<double> lens;
        lens.reserve(idx.size());
        double len_sum = 0.0;
        for (Eigen::Index i : idx) {
            lens.push_back(m.rows(i, 2));
            len_sum += m.rows(i, 2);
        }
        f.mean_len = len_sum / static_cast<double>(idx.size());
        if (idx.size() >= 2) {
            double iat_sum = 0.0;
            for (std::size_t j = 1; j < idx.size(); ++j) iat_sum += m.rows(idx[j], 0) - m.rows(idx[j - 1], 0);
            f.mean_iat = iat_sum / static_cast<double>(idx.size() - 1);
        } else {
            f.mean_iat = window_s;
        }
        f.dispersion = kind == Dispersion::Std ? population_std(lens) : median_absolute_deviation(lens);
    }
    return out;
}

}  // namespace

std::vector<WindowFeatures> stage1_features(const traceio::SpltMatrix& m, double interval_s,
                                            const std::optional<std::string>& device_label) {
    auto ws = windowed(m, interval_s, Dispersion::Std);
    if (device_label)
        for (auto& w : ws) w.label = *device_label;
    return ws;
}

std::vector<WindowFeatures> stage2_features(const traceio::SpltMatrix& m, double window_s,
                                            const std::vector<core::LabeledInterval>& annotations) {
    auto ws = windowed(m, window_s, Dispersion::Mad);
    for (auto& w : ws) {
        const double w_end = w.window_start_s + w.window_len_s;
        const bool active = std::any_of(annotations.begin(), annotations.end(), [&](const core::LabeledInterval& a) {
            return a.kind == core::IntervalKind::DeviceActivity && a.overlaps(w.window_start_s, w_end);
        });
        w.label = active ? "1" : "0";
    }
    return ws;
}

double recommend_window(double activity_duration_s) {
    if (activity_duration_s <= 0.0) throw core::DataError("activity duration must be positive");
    return activity_duration_s / 4.0;
}

Eigen::MatrixXd window_matrix(const std::vector<WindowFeatures>& ws) {
    Eigen::MatrixXd X(static_cast<Eigen::Index>(ws.size()), 3);
    for (Eigen::Index i = 0; i < X.rows(); ++i) X.row(i) = ws[static_cast<std::size_t>(i)].vec().transpose();
    return X;
}

void write_features_csv(const std::vector<std::string>& names, const Eigen::MatrixXd& X,
                        const std::vector<std::string>& labels, std::ostream& out) {
    if (static_cast<Eigen::Index>(names.size()) != X.cols())
        throw core::DataError("feature name count does not match matrix width");
    if (static_cast<Eigen::Index>(labels.size()) != X.rows())
        throw core::DataError("label count does not match matrix rows");
    out.precision(17);
    for (const auto& n : names) out << n << ',';
    out << "label\n";
    for (Eigen::Index i = 0; i < X.rows(); ++i) {
        for (Eigen::Index j = 0; j < X.cols(); ++j) out << X(i, j) << ',';
        out << labels[static_cast<std::size_t>(i)] << '\n';
    }
}

}  // namespace hometap::features
