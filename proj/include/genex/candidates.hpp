#pragma once

#include "genex/tokenizer.hpp"
#include "genex/wordlists.hpp"

#include <map>
#include <string>
#include <vector>

namespace genex {

// A candidate phrase: 1 to 3 consecutive non-stop words with no
// punctuation boundary inside the span, aggregated over all occurrences
// of the same lowercase word sequence.
struct CandidatePhrase {
    std::vector<std::string> words;        // lowercase word sequence
    int first_position = 0;                // position of first token, earliest occurrence
    int frequency = 0;                     // total occurrences
    std::map<std::string, int> surface_forms; // space-joined surface -> count

    std::string joined() const;            // words joined with single spaces
};

// True if the token can be part of a candidate phrase.
inline bool candidate_member(const Token& t) {
    return !t.is_stop && t.has_letter;
}

// Enumerate candidate phrases. Single-word candidates require at least
// 3 characters; multi-word candidates may contain shorter members.
// Candidates are returned in first-encounter order.
std::vector<CandidatePhrase> enumerate_candidates(const std::vector<Token>& tokens,
                                                  const WordLists& lists);

} // namespace genex
