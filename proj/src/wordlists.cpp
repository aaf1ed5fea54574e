#include "genex/wordlists.hpp"

#include <fstream>
#include <iostream>
#include <stdexcept>

namespace genex {

namespace {

std::string lowercase(std::string s) {
    for (char& c : s)
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    return s;
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// Reads one entry per line, lowercased, deduplicated, order preserved.
// Returns false if the file could not be opened.
bool read_list(const std::string& path, std::vector<std::string>& out) {
    std::ifstream in(path);
    if (!in) return false;
    std::unordered_set<std::string> seen;
    std::string line;
    while (std::getline(in, line)) {
        std::string entry = lowercase(trim(line));
        if (entry.empty()) continue;
        if (seen.insert(entry).second) out.push_back(entry);
    }
    return true;
}

} // namespace

bool WordLists::has_adjective_suffix(const std::string& lower_word) const {
    for (const std::string& suf : adjective_suffixes) {
        if (lower_word.size() > suf.size() &&
            lower_word.compare(lower_word.size() - suf.size(), suf.size(), suf) == 0)
            return true;
    }
    return false;
}

WordLists load_word_lists(const WordListPaths& paths) {
    WordLists lists;

    std::vector<std::string> stops;
    if (!read_list(paths.stop_words, stops))
        throw std::runtime_error("word lists: cannot open stop-word list: " +
                                 paths.stop_words);
    if (stops.empty())
        throw std::runtime_error("word lists: stop-word list is empty: " +
                                 paths.stop_words);
    lists.stop_words.insert(stops.begin(), stops.end());

    std::vector<std::string> verbs;
    if (!paths.common_verbs.empty() && read_list(paths.common_verbs, verbs)) {
        lists.common_verbs.insert(verbs.begin(), verbs.end());
    } else {
        std::cerr << "warning: no common-verb list loaded ("
                  << (paths.common_verbs.empty() ? "not given" : paths.common_verbs)
                  << "), using empty set\n";
    }

    if (paths.adjective_suffixes.empty() ||
        !read_list(paths.adjective_suffixes, lists.adjective_suffixes)) {
        std::cerr << "warning: no adjective-suffix list loaded, using empty list\n";
    }

    std::vector<std::string> phrases;
    if (!paths.stop_phrases.empty()) read_list(paths.stop_phrases, phrases);
    lists.stop_phrases.insert(phrases.begin(), phrases.end());

    return lists;
}

WordLists load_word_lists_dir(const std::string& dir) {
    WordListPaths paths;
    paths.stop_words = dir + "/stopwords.txt";
    paths.common_verbs = dir + "/common_verbs.txt";
    paths.adjective_suffixes = dir + "/adjective_suffixes.txt";
    paths.stop_phrases = dir + "/stop_phrases.txt";
    return load_word_lists(paths);
}

} // namespace genex
