#include "genex/bagging.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <stdexcept>

namespace genex {

namespace {

double entropy(std::size_t ones, std::size_t total) {
    if (total == 0 || ones == 0 || ones == total) return 0.0;
    double p = static_cast<double>(ones) / static_cast<double>(total);
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double leaf_probability(std::size_t ones, std::size_t total) {
    return (static_cast<double>(ones) + 1.0) / (static_cast<double>(total) + 2.0);
}

struct Split {
    int feature = -1;
    double threshold = 0.0;
    double gain = 0.0;
};

Split best_split(const std::vector<std::array<double, kLearnableFeatures>>& rows,
                 const std::vector<int>& labels,
                 const std::vector<std::size_t>& members) {
    std::size_t total = members.size();
    std::size_t ones = 0;
    for (std::size_t m : members) ones += static_cast<std::size_t>(labels[m]);
    double parent = entropy(ones, total);

    Split best;
    std::vector<std::pair<double, int>> column(total);
    for (int f = 0; f < kLearnableFeatures; ++f) {
        for (std::size_t i = 0; i < total; ++i) {
            std::size_t m = members[i];
            column[i] = {rows[m][static_cast<std::size_t>(f)], labels[m]};
        }
        std::sort(column.begin(), column.end());
        std::size_t left_n = 0;
        std::size_t left_ones = 0;
        for (std::size_t i = 0; i + 1 < total; ++i) {
            ++left_n;
            left_ones += static_cast<std::size_t>(column[i].second);
            if (column[i].first == column[i + 1].first) continue;
            double threshold = column[i].first +
                               (column[i + 1].first - column[i].first) / 2.0;
            std::size_t right_n = total - left_n;
            std::size_t right_ones = ones - left_ones;
            double weighted =
                (static_cast<double>(left_n) / static_cast<double>(total)) *
                    entropy(left_ones, left_n) +
                (static_cast<double>(right_n) / static_cast<double>(total)) *
                    entropy(right_ones, right_n);
            double gain = parent - weighted;
            if (gain > best.gain) {
                best.feature = f;
                best.threshold = threshold;
                best.gain = gain;
            }
        }
    }
    return best;
}

int build_node(const std::vector<std::array<double, kLearnableFeatures>>& rows,
               const std::vector<int>& labels,
               const std::vector<std::size_t>& members,
               std::vector<TreeNode>& nodes) {
    std::size_t total = members.size();
    std::size_t ones = 0;
    for (std::size_t m : members) ones += static_cast<std::size_t>(labels[m]);

    int index = static_cast<int>(nodes.size());
    nodes.emplace_back();

    Split split;
    if (ones > 0 && ones < total) split = best_split(rows, labels, members);
    if (split.feature < 0) {
        nodes[static_cast<std::size_t>(index)].probability =
            leaf_probability(ones, total);
        return index;
    }

    std::vector<std::size_t> left_members;
    std::vector<std::size_t> right_members;
    for (std::size_t m : members) {
        if (rows[m][static_cast<std::size_t>(split.feature)] < split.threshold) {
            left_members.push_back(m);
        } else {
            right_members.push_back(m);
        }
    }

    nodes[static_cast<std::size_t>(index)].feature = split.feature;
    nodes[static_cast<std::size_t>(index)].threshold = split.threshold;
    int left = build_node(rows, labels, left_members, nodes);
    nodes[static_cast<std::size_t>(index)].left = left;
    int right = build_node(rows, labels, right_members, nodes);
    nodes[static_cast<std::size_t>(index)].right = right;
    return index;
}

} // namespace

void BaggingConfig::validate() const {
    if (n_trees < 1) throw std::runtime_error("n_trees must be at least 1");
    if (!(sample_rate > 0.0) || sample_rate > 1.0) {
        throw std::runtime_error("sample_rate must be in (0, 1]");
    }
    if (class1_fraction < 0.0 || class1_fraction > 1.0) {
        throw std::runtime_error("class1_fraction must be in [0, 1]");
    }
}

double DecisionTree::predict(
    const std::array<double, kLearnableFeatures>& x) const {
    std::size_t at = 0;
    while (nodes[at].feature >= 0) {
        const TreeNode& node = nodes[at];
        at = static_cast<std::size_t>(
            x[static_cast<std::size_t>(node.feature)] < node.threshold
                ? node.left
                : node.right);
    }
    return nodes[at].probability;
}

double BaggedEnsemble::predict(const FeatureVector& fv) const {
    if (trees.empty()) throw std::runtime_error("ensemble has no trees");
    auto x = learnable_features(fv);
    double sum = 0.0;
    for (const DecisionTree& tree : trees) sum += tree.predict(x);
    return sum / static_cast<double>(trees.size());
}

std::vector<std::size_t> stratified_sample(
    const std::vector<FeatureVector>& vectors, double sample_rate,
    double class1_fraction, Rng& rng) {
    std::vector<std::size_t> pool0;
    std::vector<std::size_t> pool1;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        (vectors[i].label == 1 ? pool1 : pool0).push_back(i);
    }
    auto n = static_cast<std::size_t>(std::llround(
        sample_rate * static_cast<double>(vectors.size())));
    auto n1 = static_cast<std::size_t>(
        std::llround(class1_fraction * static_cast<double>(n)));
    std::size_t n0 = n - n1;
    if (n1 > 0 && pool1.empty()) {
        throw std::runtime_error("training data has no class-1 vectors");
    }
    if (n0 > 0 && pool0.empty()) {
        throw std::runtime_error("training data has no class-0 vectors");
    }
    std::vector<std::size_t> sample;
    sample.reserve(n);
    for (std::size_t i = 0; i < n1; ++i) {
        sample.push_back(pool1[static_cast<std::size_t>(
            rng.next_below(static_cast<std::uint64_t>(pool1.size())))]);
    }
    for (std::size_t i = 0; i < n0; ++i) {
        sample.push_back(pool0[static_cast<std::size_t>(
            rng.next_below(static_cast<std::uint64_t>(pool0.size())))]);
    }
    return sample;
}

DecisionTree induce_tree(const std::vector<FeatureVector>& vectors,
                         const std::vector<std::size_t>& sample) {
    if (sample.empty()) throw std::runtime_error("cannot induce a tree from an empty sample");
    std::vector<std::array<double, kLearnableFeatures>> rows(sample.size());
    std::vector<int> labels(sample.size());
    for (std::size_t i = 0; i < sample.size(); ++i) {
        rows[i] = learnable_features(vectors[sample[i]]);
        labels[i] = vectors[sample[i]].label;
    }
    std::vector<std::size_t> members(sample.size());
    std::iota(members.begin(), members.end(), std::size_t{0});
    DecisionTree tree;
    build_node(rows, labels, members, tree.nodes);
    return tree;
}

BaggedEnsemble train_ensemble(const std::vector<FeatureVector>& training,
                              const BaggingConfig& cfg) {
    cfg.validate();
    if (training.empty()) throw std::runtime_error("no training vectors");
    BaggedEnsemble ensemble;
    ensemble.config = cfg;
    Rng master(cfg.rng_seed);
    std::vector<std::uint64_t> seeds(static_cast<std::size_t>(cfg.n_trees));
    for (auto& s : seeds) s = master.next_u64();
    ensemble.trees.reserve(seeds.size());
    for (std::uint64_t seed : seeds) {
        Rng tree_rng(seed);
        auto sample = stratified_sample(training, cfg.sample_rate,
                                        cfg.class1_fraction, tree_rng);
        ensemble.trees.push_back(induce_tree(training, sample));
    }
    return ensemble;
}

std::vector<std::string> rank_phrases(const BaggedEnsemble& ensemble,
                                      const std::vector<FeatureVector>& vectors,
                                      int k) {
    if (k < 0) k = 0;
    std::vector<std::size_t> order(vectors.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<double> probs(vectors.size());
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        probs[i] = ensemble.predict(vectors[i]);
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (probs[a] != probs[b]) return probs[a] > probs[b];
        if (vectors[a].freq_phrase != vectors[b].freq_phrase) {
            return vectors[a].freq_phrase > vectors[b].freq_phrase;
        }
        if (vectors[a].first_occur_phrase != vectors[b].first_occur_phrase) {
            return vectors[a].first_occur_phrase < vectors[b].first_occur_phrase;
        }
        return a < b;
    });
    std::size_t take = std::min(static_cast<std::size_t>(k), vectors.size());
    std::vector<std::string> out;
    out.reserve(take);
    for (std::size_t i = 0; i < take; ++i) {
        out.push_back(vectors[order[i]].whole_phrase);
    }
    return out;
}

void save_ensemble(const BaggedEnsemble& ensemble, const std::string& path) {
    nlohmann::json doc;
    doc["config"] = {{"n_trees", ensemble.config.n_trees},
                     {"sample_rate", ensemble.config.sample_rate},
                     {"class1_fraction", ensemble.config.class1_fraction},
                     {"rng_seed", ensemble.config.rng_seed}};
    nlohmann::json trees = nlohmann::json::array();
    for (const DecisionTree& tree : ensemble.trees) {
        nlohmann::json nodes = nlohmann::json::array();
        for (const TreeNode& node : tree.nodes) {
            nodes.push_back({{"feature", node.feature},
                             {"threshold", node.threshold},
                             {"left", node.left},
                             {"right", node.right},
                             {"probability", node.probability}});
        }
        trees.push_back({{"nodes", std::move(nodes)}});
    }
    doc["trees"] = std::move(trees);
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write model file: " + path);
    out << doc.dump(2) << '\n';
}

BaggedEnsemble load_ensemble(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read model file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("invalid model file " + path + ": " + e.what());
    }
    try {
        BaggedEnsemble ensemble;
        ensemble.config.n_trees = doc.at("config").at("n_trees").get<int>();
        ensemble.config.sample_rate = doc.at("config").at("sample_rate").get<double>();
        ensemble.config.class1_fraction =
            doc.at("config").at("class1_fraction").get<double>();
        ensemble.config.rng_seed =
            doc.at("config").at("rng_seed").get<std::uint64_t>();
        for (const auto& tree_json : doc.at("trees")) {
            DecisionTree tree;
            for (const auto& node_json : tree_json.at("nodes")) {
                TreeNode node;
                node.feature = node_json.at("feature").get<int>();
                node.threshold = node_json.at("threshold").get<double>();
                node.left = node_json.at("left").get<int>();
                node.right = node_json.at("right").get<int>();
                node.probability = node_json.at("probability").get<double>();
                tree.nodes.push_back(node);
            }
            ensemble.trees.push_back(std::move(tree));
        }
        return ensemble;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("invalid model file " + path + ": " + e.what());
    }
}

} // namespace genex
