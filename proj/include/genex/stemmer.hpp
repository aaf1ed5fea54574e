#pragma once

#include <string>
#include <vector>

namespace genex {

using StemSequence = std::vector<std::string>;

// Crude stem used inside the extraction pipeline: the first stem_length
// characters of the word. Shorter words are returned unchanged.
// stem_length must lie in [1, 10].
std::string truncate_stem(const std::string& word, int stem_length);

// Lovins stemmer: longest-match ending removal (294 endings, conditions
// A..CC, minimum stem length 2) followed by recoding (undoubling plus
// respelling). Input is expected lowercase; words containing characters
// outside [a-z] are returned unchanged.
std::string lovins_stem(const std::string& word);

// lovins_stem applied until a fixed point. The iteration cap is a safety
// net only; throws if it is ever hit.
std::string iterated_lovins_stem(const std::string& word);

// Which word stemmer to use when building a stem sequence.
struct StemmerSpec {
    enum class Kind { iterated_lovins, truncation };
    Kind kind = Kind::iterated_lovins;
    int trunc_length = 5;

    static StemmerSpec iterated() { return {Kind::iterated_lovins, 0}; }
    static StemmerSpec truncation(int length) { return {Kind::truncation, length}; }
};

// Per-word stems of a whitespace-separated phrase, lowercased before
// stemming. Sequence equality is element-wise and order-sensitive.
// Empty phrase (no words) is an error.
StemSequence stem_sequence(const std::string& phrase, const StemmerSpec& stemmer);

} // namespace genex
