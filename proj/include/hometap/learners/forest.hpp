#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "hometap/learners/dataset.hpp"

namespace hometap::learners {

enum class ForestMode {
    Bagged,               // bootstrap sample, best threshold among sorted midpoints
    ExtremelyRandomized,  // full sample, one random threshold per candidate feature
};

struct ForestParams {
    int tree_count = 100;
    int max_depth = 0;          // 0 = unlimited
    int min_samples_split = 2;
    int feature_subset = 0;     // 0 = floor(sqrt(d)), min 1
    ForestMode mode = ForestMode::Bagged;
};

struct TreeNode {
    int feature = -1;           // -1 marks a leaf
    double threshold = 0.0;
    int left = -1;
    int right = -1;
    std::vector<std::int64_t> counts;  // leaf label distribution
    int majority = -1;
};

struct DecisionTree {
    std::vector<TreeNode> nodes;  // node 0 is the root
    int predict(const Eigen::VectorXd& x) const;
};

// Gini-impurity decision forest; each tree casts one vote, forest ties go to
// the lowest label id. Reproducible under seed: tree t uses an RNG derived
// from (seed, t), so per-tree fitting order cannot change the model.
struct ForestModel {
    std::vector<DecisionTree> trees;
    ForestParams params;
    std::uint64_t seed = 0;
    int feature_count = 0;
    LabelVocab vocab;
    Eigen::VectorXd importances;  // mean impurity decrease, normalized to sum 1

    int predict(const Eigen::VectorXd& x) const;
    std::vector<std::int64_t> vote_counts(const Eigen::VectorXd& x) const;

    std::string to_json() const;
    static ForestModel from_json(const std::string& text);
};

ForestModel forest_fit(const Eigen::MatrixXd& X, const std::vector<int>& y, const LabelVocab& vocab,
                       const ForestParams& params, std::uint64_t seed);

}  // namespace hometap::learners
