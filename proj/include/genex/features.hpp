#pragma once

#include "genex/extractor.hpp"
#include "genex/wordlists.hpp"

#include <array>
#include <string>
#include <vector>

namespace genex {

// One vector per unique iterated-Lovins stemmed phrase in a document.
// Positions and frequencies are normalized by the document word count,
// stop words included.
struct FeatureVector {
    std::vector<std::string> stemmed_phrase; // identifier, not learnable
    std::string whole_phrase;                // most frequent surface form
    double num_words_phrase = 0.0;
    double first_occur_phrase = 0.0;
    double first_occur_word = 0.0;
    double freq_phrase = 0.0;
    double freq_word = 0.0;
    double relative_length = 0.0;
    double proper_noun = 0.0;
    double final_adjective = 0.0;
    double common_verb = 0.0;
    int label = 0; // class: stemmed phrase matches some target
};

inline constexpr int kLearnableFeatures = 9;

// The nine learnable fields in table order.
std::array<double, kLearnableFeatures> learnable_features(const FeatureVector& fv);
const std::array<const char*, kLearnableFeatures>& learnable_feature_names();

std::vector<FeatureVector> build_feature_vectors(
    const PreparedDocument& doc, const std::vector<std::string>& targets,
    const WordLists& lists);
std::vector<FeatureVector> build_feature_vectors(
    const std::string& text, const std::vector<std::string>& targets,
    const WordLists& lists);

// One row per vector in table column order.
std::string feature_vectors_to_tsv(const std::vector<FeatureVector>& vectors);

} // namespace genex
