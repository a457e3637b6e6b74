#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "hometap/core/types.hpp"

namespace hometap::learners {

// Maps string labels to dense ids. Names are kept sorted, so the smallest
// id is also the lexicographically smallest label; every deterministic
// tie-break below leans on that.
class LabelVocab {
public:
    LabelVocab() = default;
    explicit LabelVocab(const std::vector<std::string>& labels) {
        names_ = labels;
        std::sort(names_.begin(), names_.end());
        names_.erase(std::unique(names_.begin(), names_.end()), names_.end());
    }

    int id(const std::string& label) const {
        auto it = std::lower_bound(names_.begin(), names_.end(), label);
        if (it == names_.end() || *it != label) throw core::DataError("label not in vocabulary: " + label);
        return static_cast<int>(it - names_.begin());
    }
    const std::string& name(int id) const { return names_.at(static_cast<std::size_t>(id)); }
    int size() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }

    std::vector<int> encode(const std::vector<std::string>& labels) const {
        std::vector<int> out;
        out.reserve(labels.size());
        for (const auto& l : labels) out.push_back(id(l));
        return out;
    }

private:
    std::vector<std::string> names_;
};

struct Dataset {
    Eigen::MatrixXd X;            // rows = samples
    std::vector<int> y;           // class ids
    LabelVocab vocab;

    Eigen::Index size() const { return X.rows(); }
};

}  // namespace hometap::learners
