#pragma once

#include "genex/features.hpp"
#include "genex/rng.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace genex {

struct BaggingConfig {
    int n_trees = 50;
    double sample_rate = 0.01;
    double class1_fraction = 0.5;
    std::uint64_t rng_seed = 0;

    void validate() const;
};

// Binary decision tree over the nine learnable features. Internal nodes
// send value < threshold left; leaves hold a Laplace-smoothed class-1
// probability (c1 + 1) / (n + 2).
struct TreeNode {
    int feature = -1; // -1 marks a leaf
    double threshold = 0.0;
    int left = -1;
    int right = -1;
    double probability = 0.0;
};

struct DecisionTree {
    std::vector<TreeNode> nodes; // node 0 is the root
    double predict(const std::array<double, kLearnableFeatures>& x) const;
};

struct BaggedEnsemble {
    std::vector<DecisionTree> trees;
    BaggingConfig config;
    double predict(const FeatureVector& fv) const; // mean over trees
};

// Sample round(rate x N) vectors with replacement: round(fraction x n)
// from class 1, the rest from class 0. Both classes must be present.
std::vector<std::size_t> stratified_sample(const std::vector<FeatureVector>& vectors,
                                           double sample_rate,
                                           double class1_fraction, Rng& rng);

// Information-gain splits on midpoints of sorted distinct values, grown
// to purity, no pruning.
DecisionTree induce_tree(const std::vector<FeatureVector>& vectors,
                         const std::vector<std::size_t>& sample);

BaggedEnsemble train_ensemble(const std::vector<FeatureVector>& training,
                              const BaggingConfig& cfg);

// Top-k whole phrases by ensemble probability; ties broken by
// (freq_phrase desc, first_occur_phrase asc, input order). Always
// returns exactly min(k, |vectors|) phrases.
std::vector<std::string> rank_phrases(const BaggedEnsemble& ensemble,
                                      const std::vector<FeatureVector>& vectors,
                                      int k);

void save_ensemble(const BaggedEnsemble& ensemble, const std::string& path);
BaggedEnsemble load_ensemble(const std::string& path);

} // namespace genex
