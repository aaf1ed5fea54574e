#pragma once

#include "genex/wordlists.hpp"

#include <string>
#include <vector>

namespace genex {

struct Token {
    std::string surface;       // original case
    std::string lower;
    int position = 0;          // 1-based word index, stop words included
    bool is_stop = false;
    bool preceded_by_punct = false;
    bool sentence_start = false; // document start or after . ! ?
    bool has_letter = false;     // false for pure numerals
};

// Splits text into word tokens. A token is a maximal alphanumeric run;
// hyphens and apostrophes are kept when they sit between two such
// characters. Any other non-whitespace character is punctuation and sets
// preceded_by_punct on the following token. Bytes >= 0x80 are treated as
// letters so multi-byte characters survive intact; case folding is ASCII.
// Whitespace-only input yields an empty list.
std::vector<Token> tokenize(const std::string& raw_text, const WordLists& lists);

} // namespace genex
