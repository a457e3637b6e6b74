#include "hometap/learners/knn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <json.hpp>

namespace hometap::learners {

using core::ModelError;

KnnModel knn_fit(const Eigen::MatrixXd& X, const std::vector<int>& y, const LabelVocab& vocab, int k) {
    if (k < 1 || k % 2 == 0) throw ModelError("k must be a positive odd integer");
    if (X.rows() < k) throw ModelError("k exceeds training size");
    if (static_cast<Eigen::Index>(y.size()) != X.rows()) throw ModelError("label count mismatch");

    KnnModel m;
    m.k = k;
    m.labels = y;
    m.vocab = vocab;
    m.feat_mean = X.colwise().mean();
    m.feat_std.resize(X.cols());
    m.constant_feature.assign(static_cast<std::size_t>(X.cols()), false);
    for (Eigen::Index j = 0; j < X.cols(); ++j) {
        const double var = (X.col(j).array() - m.feat_mean[j]).square().mean();
        const double sd = std::sqrt(var);
        if (sd > 0.0) {
            m.feat_std[j] = sd;
        } else {
            // Constant feature: no distance contribution.
            m.feat_std[j] = 1.0;
            m.constant_feature[static_cast<std::size_t>(j)] = true;
        }
    }
    m.train = (X.rowwise() - m.feat_mean.transpose()).array().rowwise() / m.feat_std.transpose().array();
    for (Eigen::Index j = 0; j < X.cols(); ++j)
        if (m.constant_feature[static_cast<std::size_t>(j)]) m.train.col(j).setZero();
    return m;
}

std::pair<int, double> KnnModel::predict_with_distance(const Eigen::VectorXd& x) const {
    if (x.size() != train.cols()) throw ModelError("query dimension mismatch");
    Eigen::VectorXd q = (x - feat_mean).array() / feat_std.array();
    for (Eigen::Index j = 0; j < q.size(); ++j)
        if (constant_feature[static_cast<std::size_t>(j)]) q[j] = 0.0;

    const Eigen::VectorXd d2 = (train.rowwise() - q.transpose()).rowwise().squaredNorm();
    std::vector<Eigen::Index> order(static_cast<std::size_t>(d2.size()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) { return d2[a] < d2[b]; });

    std::vector<int> votes(static_cast<std::size_t>(vocab.size()), 0);
    std::vector<double> dist_sum(static_cast<std::size_t>(vocab.size()), 0.0);
    for (int i = 0; i < k; ++i) {
        const auto lbl = static_cast<std::size_t>(labels[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]);
        votes[lbl] += 1;
        dist_sum[lbl] += std::sqrt(d2[order[static_cast<std::size_t>(i)]]);
    }

    int best = -1;
    for (std::size_t c = 0; c < votes.size(); ++c) {
        if (votes[c] == 0) continue;
        if (best < 0) {
            best = static_cast<int>(c);
            continue;
        }
        const auto b = static_cast<std::size_t>(best);
        const double mean_c = dist_sum[c] / votes[c];
        const double mean_b = dist_sum[b] / votes[b];
        if (votes[c] > votes[b] || (votes[c] == votes[b] && mean_c < mean_b)) best = static_cast<int>(c);
        // equal votes and equal mean distance: keep the lower id
    }

    double knn_mean = 0.0;
    for (int i = 0; i < k; ++i) knn_mean += std::sqrt(d2[order[static_cast<std::size_t>(i)]]);
    return {best, knn_mean / k};
}

int KnnModel::predict(const Eigen::VectorXd& x) const { return predict_with_distance(x).first; }

std::string KnnModel::to_json() const {
    nlohmann::json j;
    j["kind"] = "knn";
    j["version"] = 1;
    j["k"] = k;
    j["labels"] = labels;
    j["vocab"] = vocab.names();
    auto mat = [](const Eigen::MatrixXd& m) {
        std::vector<std::vector<double>> rows(static_cast<std::size_t>(m.rows()));
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            for (Eigen::Index c = 0; c < m.cols(); ++c) rows[static_cast<std::size_t>(i)].push_back(m(i, c));
        return rows;
    };
    j["train"] = mat(train);
    j["feat_mean"] = std::vector<double>(feat_mean.data(), feat_mean.data() + feat_mean.size());
    j["feat_std"] = std::vector<double>(feat_std.data(), feat_std.data() + feat_std.size());
    j["constant_feature"] = constant_feature;
    return j.dump();
}

KnnModel KnnModel::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (j.at("kind") != "knn") throw ModelError("not a knn model document");
    KnnModel m;
    m.k = j.at("k").get<int>();
    m.labels = j.at("labels").get<std::vector<int>>();
    m.vocab = LabelVocab(j.at("vocab").get<std::vector<std::string>>());
    const auto rows = j.at("train").get<std::vector<std::vector<double>>>();
    const auto cols = rows.empty() ? 0 : rows[0].size();
    m.train.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t c = 0; c < cols; ++c) m.train(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = rows[i][c];
    auto vec = j.at("feat_mean").get<std::vector<double>>();
    m.feat_mean = Eigen::Map<Eigen::VectorXd>(vec.data(), static_cast<Eigen::Index>(vec.size()));
    vec = j.at("feat_std").get<std::vector<double>>();
    m.feat_std = Eigen::Map<Eigen::VectorXd>(vec.data(), static_cast<Eigen::Index>(vec.size()));
    m.constant_feature = j.at("constant_feature").get<std::vector<bool>>();
    return m;
}

}  // namespace hometap::learners
