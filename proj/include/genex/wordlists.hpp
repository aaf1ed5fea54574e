#pragma once

#include <string>
#include <unordered_set>
#include <vector>

namespace genex {

struct WordLists {
    std::unordered_set<std::string> stop_words;
    std::unordered_set<std::string> common_verbs;
    std::vector<std::string> adjective_suffixes; // kept in file order
    std::unordered_set<std::string> stop_phrases;

    bool is_stop(const std::string& lower) const {
        return stop_words.count(lower) != 0;
    }
    bool is_common_verb(const std::string& lower) const {
        return common_verbs.count(lower) != 0;
    }
    // Final-word test: does `lower_word` end in one of the adjective
    // suffixes (word strictly longer than the suffix)?
    bool has_adjective_suffix(const std::string& lower_word) const;
};

struct WordListPaths {
    std::string stop_words;
    std::string common_verbs;
    std::string adjective_suffixes;
    std::string stop_phrases;
};

// Load the four lists. Entries are lowercased and deduplicated; blank
// lines are skipped. A missing or empty stop-word list is an error; the
// other files may be absent (warned on stderr, treated as empty).
WordLists load_word_lists(const WordListPaths& paths);

// Same, using conventional file names inside one directory:
// stopwords.txt, common_verbs.txt, adjective_suffixes.txt, stop_phrases.txt
WordLists load_word_lists_dir(const std::string& dir);

} // namespace genex
