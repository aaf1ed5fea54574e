#pragma once

#include <string>

namespace genex {

// The twelve extraction parameters. num_phrases is user-set and
// num_working is always derived from it; the remaining ten are trainable.
struct ExtractorParams {
    int num_phrases = 7;            // [5,15]
    int num_working = 35;           // 5 * num_phrases
    double factor_two_one = 2.0;    // [1,3]
    double factor_three_one = 3.0;  // [1,5]
    double min_length_low_rank = 0.9; // [0.3,3.0]
    int min_rank_low_length = 5;    // [1,20]
    int first_low_thresh = 40;      // [1,1000]
    int first_high_thresh = 400;    // [1,4000]
    double first_low_factor = 2.0;  // [1,15]
    double first_high_factor = 0.2; // [0.01,1.0]
    int stem_length = 5;            // [1,10]
    bool suppress_proper = false;

    // Throws std::invalid_argument naming the first out-of-range field.
    void validate() const;

    // Returns a copy with num_phrases = k and num_working = 5k.
    ExtractorParams with_num_phrases(int k) const;
};

struct ParamsMetadata {
    std::string corpus;
    double fitness = 0.0;
    long trials = 0;
    unsigned long seed = 0;
};

struct ParamsFile {
    ExtractorParams params;
    ParamsMetadata metadata;
};

// JSON serialization. load_params validates every field against its range
// and rejects out-of-range values naming the parameter.
void save_params(const ParamsFile& p, const std::string& path);
ParamsFile load_params(const std::string& path);

} // namespace genex
