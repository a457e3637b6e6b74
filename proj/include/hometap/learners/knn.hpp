#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "hometap/learners/dataset.hpp"

namespace hometap::learners {

// k-nearest-neighbors on standardized features. Prediction is the majority
// label among the k nearest training points by Euclidean distance; ties go
// to the tied label with the smallest mean neighbor distance, then to the
// lowest label id.
struct KnnModel {
    Eigen::MatrixXd train;        // standardized rows
    std::vector<int> labels;
    int k = 5;
    Eigen::VectorXd feat_mean;
    Eigen::VectorXd feat_std;     // constant features carry std 1 and a flag
    std::vector<bool> constant_feature;
    LabelVocab vocab;

    int predict(const Eigen::VectorXd& x) const;
    std::pair<int, double> predict_with_distance(const Eigen::VectorXd& x) const;  // (label, mean kNN distance)

    std::string to_json() const;
    static KnnModel from_json(const std::string& text);
};

KnnModel knn_fit(const Eigen::MatrixXd& X, const std::vector<int>& y, const LabelVocab& vocab, int k = 5);

}  // namespace hometap::learners
