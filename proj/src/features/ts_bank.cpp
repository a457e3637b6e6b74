#include "hometap/features/ts_bank.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>
#include <unsupported/Eigen/FFT>

namespace hometap::features {

namespace {

constexpr int kCwtWidths[] = {2, 5, 10, 20};
constexpr int kCwtCoeffs = 5;
constexpr int kFftCoeffs = 10;
constexpr int kPolyDegree = 3;

double series_median(Eigen::VectorXd v) {
    if (v.size() == 0) return 0.0;
    std::sort(v.data(), v.data() + v.size());
    const auto n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double series_skewness(const Eigen::VectorXd& v) {
    if (v.size() == 0) return 0.0;
    const double mean = v.mean();
    const auto centered = (v.array() - mean).eval();
    const double m2 = centered.square().mean();
    if (m2 <= 0.0) return 0.0;
    const double m3 = centered.cube().mean();
    return m3 / std::pow(m2, 1.5);
}

double histogram_entropy(const Eigen::VectorXd& v) {
    if (v.size() == 0) return 0.0;
    const double lo = v.minCoeff(), hi = v.maxCoeff();
    if (hi <= lo) return 0.0;
    constexpr int kBins = 10;
    int counts[kBins] = {0};
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        auto b = static_cast<int>((v[i] - lo) / (hi - lo) * kBins);
        counts[std::clamp(b, 0, kBins - 1)] += 1;
    }
    double h = 0.0;
    for (int c : counts) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / static_cast<double>(v.size());
        h -= p * std::log(p);
    }
    return h;
}

// Ricker (Mexican hat) wavelet at integer offset t for width a.
double ricker(double t, double a) {
    const double norm = 2.0 / (std::sqrt(3.0 * a) * std::pow(std::numbers::pi, 0.25));
    const double q = t / a;
    return norm * (1.0 - q * q) * std::exp(-t * t / (2.0 * a * a));
}

// CWT coefficient at position i: correlation of the series with the wavelet
// centered there. Support length min(10*width, n) forced odd.
void cwt_block(const Eigen::VectorXd& v, double* out) {
    Eigen::VectorXd padded = v;
    if (padded.size() < kCwtCoeffs) {
        padded = Eigen::VectorXd::Zero(kCwtCoeffs);
        padded.head(v.size()) = v;
    }
    const auto n = padded.size();
    int pos = 0;
    for (int w : kCwtWidths) {
        Eigen::Index m = std::min<Eigen::Index>(10 * w, n);
        if (m % 2 == 0) m = std::max<Eigen::Index>(1, m - 1);
        const Eigen::Index half = (m - 1) / 2;
        Eigen::VectorXd psi(2 * half + 1);
        for (Eigen::Index k = -half; k <= half; ++k) psi[k + half] = ricker(static_cast<double>(k), w);
        for (int i = 0; i < kCwtCoeffs; ++i) {
            double acc = 0.0;
            for (Eigen::Index k = -half; k <= half; ++k) {
                const Eigen::Index j = i + k;
                if (j >= 0 && j < n) acc += padded[j] * psi[k + half];
            }
            out[pos++] = acc;
        }
    }
}

void fft_block(const Eigen::VectorXd& v, double* out) {
    for (int k = 0; k < kFftCoeffs; ++k) out[k] = 0.0;
    if (v.size() == 0) return;
    Eigen::FFT<double> fft;
    std::vector<std::complex<double>> freq;
    std::vector<double> time(v.data(), v.data() + v.size());
    fft.fwd(freq, time);
    for (int k = 0; k < kFftCoeffs && k < static_cast<int>(freq.size()); ++k) out[k] = std::abs(freq[k]);
}

// OLS cubic over u_i = i/(n-1); coefficients highest degree first.
void poly_block(const Eigen::VectorXd& v, double* out) {
    Eigen::VectorXd padded = v;
    if (padded.size() < kPolyDegree + 1) {
        padded = Eigen::VectorXd::Zero(kPolyDegree + 1);
        padded.head(v.size()) = v;
    }
    const auto n = padded.size();
    Eigen::MatrixXd design(n, kPolyDegree + 1);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double u = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
        for (int d = kPolyDegree; d >= 0; --d) design(i, kPolyDegree - d) = std::pow(u, d);
    }
    Eigen::VectorXd coef = design.colPivHouseholderQr().solve(padded);
    for (int d = 0; d <= kPolyDegree; ++d) out[d] = coef[d];
}

}  // namespace

Eigen::VectorXd series_features(const Eigen::VectorXd& v) {
    Eigen::VectorXd f = Eigen::VectorXd::Zero(TsFeatureVector::kPerChannel);
    int i = 0;
    f[i++] = v.size() ? v.squaredNorm() : 0.0;               // absolute energy
    f[i++] = static_cast<double>(v.size());                  // length
    f[i++] = v.size() ? v.mean() : 0.0;                      // mean
    f[i++] = series_median(v);                               // median
    f[i++] = v.size() ? v.minCoeff() : 0.0;                  // minimum
    f[i++] = v.size() ? v.maxCoeff() : 0.0;                  // maximum
    f[i++] = series_skewness(v);                             // skewness
    f[i++] = histogram_entropy(v);                           // entropy
    const double var = v.size() ? (v.array() - v.mean()).square().mean() : 0.0;
    f[i++] = std::sqrt(var);                                 // std
    f[i++] = var;                                            // variance
    cwt_block(v, f.data() + i);
    i += static_cast<int>(std::size(kCwtWidths)) * kCwtCoeffs;
    fft_block(v, f.data() + i);
    i += kFftCoeffs;
    poly_block(v, f.data() + i);
    i += kPolyDegree + 1;
    return f;
}

const std::vector<std::string>& TsFeatureVector::names() {
    static const std::vector<std::string> all = [] {
        std::vector<std::string> base = {"abs_energy", "length", "mean",    "median",  "min",
                                         "max",        "skew",   "entropy", "std_dev", "variance"};
        for (int w : kCwtWidths)
            for (int c = 0; c < kCwtCoeffs; ++c)
                base.push_back("cwt_w" + std::to_string(w) + "_c" + std::to_string(c));
        for (int k = 0; k < kFftCoeffs; ++k) base.push_back("fft_mag_" + std::to_string(k));
        for (int d = kPolyDegree; d >= 0; --d) base.push_back("poly_c" + std::to_string(d));
        std::vector<std::string> out;
        for (const auto& n : base) out.push_back("len_" + n);
        for (const auto& n : base) out.push_back("iat_" + n);
        return out;
    }();
    return all;
}

TsFeatureVector ts_features(const traceio::SpltMatrix& seg) {
    if (seg.rows.rows() < 1) throw core::DataError("ts_features on empty segment");
    const Eigen::VectorXd lengths = seg.rows.col(2);
    Eigen::VectorXd iats(std::max<Eigen::Index>(0, seg.rows.rows() - 1));
    for (Eigen::Index i = 1; i < seg.rows.rows(); ++i) iats[i - 1] = seg.rows(i, 0) - seg.rows(i - 1, 0);

    TsFeatureVector out;
    out.values.resize(TsFeatureVector::kTotal);
    out.values.head(TsFeatureVector::kPerChannel) = series_features(lengths);
    out.values.tail(TsFeatureVector::kPerChannel) = series_features(iats);
    return out;
}

Eigen::MatrixXd ts_feature_matrix(const std::vector<traceio::SpltMatrix>& segments) {
    Eigen::MatrixXd X(static_cast<Eigen::Index>(segments.size()), TsFeatureVector::kTotal);
    for (Eigen::Index i = 0; i < X.rows(); ++i)
        X.row(i) = ts_features(segments[static_cast<std::size_t>(i)]).values.transpose();
    return X;
}

}  // namespace hometap::features
