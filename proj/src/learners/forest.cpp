#include "hometap/learners/forest.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include <json.hpp>

namespace hometap::learners {

using core::ModelError;

namespace {

double gini(const std::vector<std::int64_t>& counts, std::int64_t total) {
    if (total == 0) return 0.0;
    double sum_sq = 0.0;
    for (std::int64_t c : counts) {
        const double p = static_cast<double>(c) / static_cast<double>(total);
        sum_sq += p * p;
    }
    return 1.0 - sum_sq;
}

struct SplitChoice {
    int feature = -1;
    double threshold = 0.0;
    double gain = 0.0;  // impurity decrease, unweighted by node share
};

class TreeBuilder {
public:
    TreeBuilder(const Eigen::MatrixXd& X, const std::vector<int>& y, int classes, const ForestParams& p,
                std::mt19937_64& rng, Eigen::VectorXd& importance_acc)
        : X_(X), y_(y), classes_(classes), p_(p), rng_(rng), importance_(importance_acc) {
        subset_ = p.feature_subset > 0 ? p.feature_subset
                                       : std::max(1, static_cast<int>(std::sqrt(static_cast<double>(X.cols()))));
        subset_ = std::min<int>(subset_, static_cast<int>(X.cols()));
    }

    DecisionTree build(std::vector<Eigen::Index> samples) {
        tree_.nodes.clear();
        total_ = static_cast<double>(samples.size());
        grow(std::move(samples), 0);
        return std::move(tree_);
    }

private:
    std::vector<std::int64_t> count_labels(const std::vector<Eigen::Index>& samples) const {
        std::vector<std::int64_t> c(static_cast<std::size_t>(classes_), 0);
        for (Eigen::Index i : samples) c[static_cast<std::size_t>(y_[static_cast<std::size_t>(i)])] += 1;
        return c;
    }

    int make_leaf(const std::vector<std::int64_t>& counts) {
        TreeNode n;
        n.counts = counts;
        n.majority = static_cast<int>(std::max_element(counts.begin(), counts.end()) - counts.begin());
        tree_.nodes.push_back(std::move(n));
        return static_cast<int>(tree_.nodes.size()) - 1;
    }

    std::vector<int> pick_features() {
        std::vector<int> all(static_cast<std::size_t>(X_.cols()));
        std::iota(all.begin(), all.end(), 0);
        for (int i = 0; i < subset_; ++i) {
            std::uniform_int_distribution<int> d(i, static_cast<int>(all.size()) - 1);
            std::swap(all[static_cast<std::size_t>(i)], all[static_cast<std::size_t>(d(rng_))]);
        }
        all.resize(static_cast<std::size_t>(subset_));
        return all;
    }

    // Best midpoint threshold for one feature by sweeping sorted values.
    bool best_midpoint(const std::vector<Eigen::Index>& samples, int f, const std::vector<std::int64_t>& counts,
                       double node_gini, SplitChoice& best) const {
        std::vector<std::pair<double, int>> vals;
        vals.reserve(samples.size());
        for (Eigen::Index i : samples) vals.emplace_back(X_(i, f), y_[static_cast<std::size_t>(i)]);
        std::sort(vals.begin(), vals.end());
        if (vals.front().first == vals.back().first) return false;

        std::vector<std::int64_t> left(static_cast<std::size_t>(classes_), 0);
        std::vector<std::int64_t> right = counts;
        const auto n = static_cast<std::int64_t>(vals.size());
        bool found = false;
        for (std::int64_t i = 0; i < n - 1; ++i) {
            const auto cls = static_cast<std::size_t>(vals[static_cast<std::size_t>(i)].second);
            left[cls] += 1;
            right[cls] -= 1;
            if (vals[static_cast<std::size_t>(i)].first == vals[static_cast<std::size_t>(i + 1)].first) continue;
            const double g = node_gini -
                             (static_cast<double>(i + 1) * gini(left, i + 1) +
                              static_cast<double>(n - i - 1) * gini(right, n - i - 1)) /
                                 static_cast<double>(n);
            if (g > best.gain) {
                best.gain = g;
                best.feature = f;
                best.threshold = 0.5 * (vals[static_cast<std::size_t>(i)].first +
                                        vals[static_cast<std::size_t>(i + 1)].first);
                found = true;
            }
        }
        return found;
    }

    // One uniform random threshold per candidate feature (extra-trees rule).
    bool random_threshold(const std::vector<Eigen::Index>& samples, int f, const std::vector<std::int64_t>& counts,
                          double node_gini, SplitChoice& best) {
        double lo = X_(samples[0], f), hi = lo;
        for (Eigen::Index i : samples) {
            lo = std::min(lo, X_(i, f));
            hi = std::max(hi, X_(i, f));
        }
        if (hi <= lo) return false;
        std::uniform_real_distribution<double> d(lo, hi);
        const double thr = d(rng_);

        std::vector<std::int64_t> left(static_cast<std::size_t>(classes_), 0);
        std::int64_t left_n = 0;
        for (Eigen::Index i : samples) {
            if (X_(i, f) <= thr) {
                left[static_cast<std::size_t>(y_[static_cast<std::size_t>(i)])] += 1;
                ++left_n;
            }
        }
        const auto n = static_cast<std::int64_t>(samples.size());
        if (left_n == 0 || left_n == n) return false;
        std::vector<std::int64_t> right(static_cast<std::size_t>(classes_), 0);
        for (std::size_t c = 0; c < right.size(); ++c) right[c] = counts[c] - left[c];
        const double g = node_gini - (static_cast<double>(left_n) * gini(left, left_n) +
                                      static_cast<double>(n - left_n) * gini(right, n - left_n)) /
                                         static_cast<double>(n);
        if (g > best.gain) {
            best.gain = g;
            best.feature = f;
            best.threshold = thr;
            return true;
        }
        return false;
    }

    int grow(std::vector<Eigen::Index> samples, int depth) {
        const auto counts = count_labels(samples);
        const auto n = static_cast<std::int64_t>(samples.size());
        const double node_gini = gini(counts, n);
        const bool pure = std::count_if(counts.begin(), counts.end(), [](std::int64_t c) { return c > 0; }) <= 1;
        const bool depth_capped = p_.max_depth > 0 && depth >= p_.max_depth;
        if (pure || depth_capped || n < p_.min_samples_split) return make_leaf(counts);

        SplitChoice best;
        for (int f : pick_features()) {
            if (p_.mode == ForestMode::Bagged)
                best_midpoint(samples, f, counts, node_gini, best);
            else
                random_threshold(samples, f, counts, node_gini, best);
        }
        if (best.feature < 0 || best.gain <= 0.0) return make_leaf(counts);

        std::vector<Eigen::Index> left, right;
        for (Eigen::Index i : samples) (X_(i, best.feature) <= best.threshold ? left : right).push_back(i);
        if (left.empty() || right.empty()) return make_leaf(counts);

        importance_[best.feature] += (static_cast<double>(n) / total_) * best.gain;

        const int me = static_cast<int>(tree_.nodes.size());
        tree_.nodes.emplace_back();
        tree_.nodes[static_cast<std::size_t>(me)].feature = best.feature;
        tree_.nodes[static_cast<std::size_t>(me)].threshold = best.threshold;
        const int l = grow(std::move(left), depth + 1);
        const int r = grow(std::move(right), depth + 1);
        tree_.nodes[static_cast<std::size_t>(me)].left = l;
        tree_.nodes[static_cast<std::size_t>(me)].right = r;
        return me;
    }

    const Eigen::MatrixXd& X_;
    const std::vector<int>& y_;
    int classes_;
    ForestParams p_;
    std::mt19937_64& rng_;
    Eigen::VectorXd& importance_;
    int subset_ = 1;
    double total_ = 1.0;
    DecisionTree tree_;
};

std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

}  // namespace

int DecisionTree::predict(const Eigen::VectorXd& x) const {
    int at = 0;
    while (nodes[static_cast<std::size_t>(at)].feature >= 0) {
        const auto& n = nodes[static_cast<std::size_t>(at)];
        at = x[n.feature] <= n.threshold ? n.left : n.right;
    }
    return nodes[static_cast<std::size_t>(at)].majority;
}

std::vector<std::int64_t> ForestModel::vote_counts(const Eigen::VectorXd& x) const {
    if (x.size() != feature_count) throw ModelError("query dimension mismatch");
    std::vector<std::int64_t> votes(static_cast<std::size_t>(vocab.size()), 0);
    for (const auto& t : trees) votes[static_cast<std::size_t>(t.predict(x))] += 1;
    return votes;
}

int ForestModel::predict(const Eigen::VectorXd& x) const {
    const auto votes = vote_counts(x);
    return static_cast<int>(std::max_element(votes.begin(), votes.end()) - votes.begin());
}

ForestModel forest_fit(const Eigen::MatrixXd& X, const std::vector<int>& y, const LabelVocab& vocab,
                       const ForestParams& params, std::uint64_t seed) {
    if (static_cast<Eigen::Index>(y.size()) != X.rows()) throw ModelError("label count mismatch");
    if (vocab.size() < 2) throw ModelError("forest_fit needs at least two labels");
    if (X.rows() < 2) throw ModelError("forest_fit needs at least two samples");
    if (std::set<int>(y.begin(), y.end()).size() < 2)
        throw ModelError("forest_fit needs at least two distinct labels present");

    ForestModel m;
    m.params = params;
    m.seed = seed;
    m.feature_count = static_cast<int>(X.cols());
    m.vocab = vocab;
    m.importances = Eigen::VectorXd::Zero(X.cols());

    const auto n = X.rows();
    for (int t = 0; t < params.tree_count; ++t) {
        std::mt19937_64 rng(mix(seed ^ (0xf0f0f0f0ull + static_cast<std::uint64_t>(t))));
        std::vector<Eigen::Index> samples;
        samples.reserve(static_cast<std::size_t>(n));
        if (params.mode == ForestMode::Bagged) {
            std::uniform_int_distribution<Eigen::Index> pick(0, n - 1);
            for (Eigen::Index i = 0; i < n; ++i) samples.push_back(pick(rng));
        } else {
            samples.resize(static_cast<std::size_t>(n));
            std::iota(samples.begin(), samples.end(), 0);
        }
        TreeBuilder builder(X, y, vocab.size(), params, rng, m.importances);
        m.trees.push_back(builder.build(std::move(samples)));
    }

    const double total = m.importances.sum();
    if (total > 0.0) m.importances /= total;
    return m;
}

std::string ForestModel::to_json() const {
    nlohmann::json j;
    j["kind"] = "forest";
    j["version"] = 1;
    j["mode"] = params.mode == ForestMode::Bagged ? "bagged" : "extra";
    j["tree_count"] = params.tree_count;
    j["max_depth"] = params.max_depth;
    j["min_samples_split"] = params.min_samples_split;
    j["feature_subset"] = params.feature_subset;
    j["seed"] = seed;
    j["feature_count"] = feature_count;
    j["vocab"] = vocab.names();
    j["importances"] = std::vector<double>(importances.data(), importances.data() + importances.size());
    nlohmann::json jt = nlohmann::json::array();
    for (const auto& t : trees) {
        nlohmann::json jn = nlohmann::json::array();
        for (const auto& n : t.nodes)
            jn.push_back({{"f", n.feature},
                          {"t", n.threshold},
                          {"l", n.left},
                          {"r", n.right},
                          {"c", n.counts},
                          {"m", n.majority}});
        jt.push_back(jn);
    }
    j["trees"] = jt;
    return j.dump();
}

ForestModel ForestModel::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (j.at("kind") != "forest") throw ModelError("not a forest model document");
    ForestModel m;
    m.params.mode = j.at("mode") == "bagged" ? ForestMode::Bagged : ForestMode::ExtremelyRandomized;
    m.params.tree_count = j.at("tree_count").get<int>();
    m.params.max_depth = j.at("max_depth").get<int>();
    m.params.min_samples_split = j.at("min_samples_split").get<int>();
    m.params.feature_subset = j.at("feature_subset").get<int>();
    m.seed = j.at("seed").get<std::uint64_t>();
    m.feature_count = j.at("feature_count").get<int>();
    m.vocab = LabelVocab(j.at("vocab").get<std::vector<std::string>>());
    auto imp = j.at("importances").get<std::vector<double>>();
    m.importances = Eigen::Map<Eigen::VectorXd>(imp.data(), static_cast<Eigen::Index>(imp.size()));
    for (const auto& jt : j.at("trees")) {
        DecisionTree t;
        for (const auto& jn : jt) {
            TreeNode n;
            n.feature = jn.at("f").get<int>();
            n.threshold = jn.at("t").get<double>();
            n.left = jn.at("l").get<int>();
            n.right = jn.at("r").get<int>();
            n.counts = jn.at("c").get<std::vector<std::int64_t>>();
            n.majority = jn.at("m").get<int>();
            t.nodes.push_back(std::move(n));
        }
        m.trees.push_back(std::move(t));
    }
    return m;
}

}  // namespace hometap::learners
