#pragma once

#include "genex/corpus.hpp"

#include <cstdint>
#include <string>

namespace genex {

struct SynthConfig {
    int num_docs = 30;
    std::uint64_t rng_seed = 0;
    double test_fraction = 1.0 / 3.0;
    int words_per_doc = 220;
    int targets_per_doc = 3;

    void validate() const;
};

// Deterministic corpus of pseudo-word documents. Each document plants
// targets_per_doc keyphrases (1-3 words, frequency >= 5, first occurrence
// within the first tenth of the document) in distractor text. The last
// round(test_fraction x num_docs) documents form the test split.
Corpus make_synthetic_corpus(const SynthConfig& cfg);

// Writes <id>.txt, <id>.key and a split manifest under dir.
void write_synthetic_corpus(const Corpus& corpus, const std::string& dir);

} // namespace genex
