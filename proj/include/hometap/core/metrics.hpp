#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hometap::core {

struct ConfusionCounts {
    std::int64_t tp = 0;
    std::int64_t fp = 0;
    std::int64_t tn = 0;
    std::int64_t fn = 0;

    std::int64_t total() const { return tp + fp + tn + fn; }
    ConfusionCounts& operator+=(const ConfusionCounts& o) {
        tp += o.tp;
        fp += o.fp;
        tn += o.tn;
        fn += o.fn;
        return *this;
    }
};

// The seven derived metrics. A metric with a zero denominator is left
// unset (nullopt) instead of being coerced to 0; imbalanced windows make
// that case common and silent zeros would corrupt averages.
struct MetricReport {
    std::optional<double> tpr;  // recall
    std::optional<double> fnr;
    std::optional<double> tnr;
    std::optional<double> fpr;
    std::optional<double> precision;
    std::optional<double> accuracy;
    std::optional<double> f1;
    std::int64_t support = 0;  // tp + fn

    std::string to_text() const;   // one metric per line, "name value|undefined"
    std::string to_json() const;   // values plus per-field definedness flags
};

// Appendix-style ratios: TPR, FNR, TNR, FPR, precision, accuracy, and
// standard F1 = 2*precision*recall/(precision+recall).
MetricReport compute_metrics(const ConfusionCounts& c);

// Unweighted mean of each defined field; undefined fields are excluded from
// that field's mean. Support is summed (the "Avg/Total" row convention).
MetricReport macro_average(const std::vector<MetricReport>& reports);

}  // namespace hometap::core
