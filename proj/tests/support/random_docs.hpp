#pragma once

#include "genex/rng.hpp"

#include <string>
#include <vector>

// Random short documents exercising capitalization, abbreviations,
// numerals, hyphens, stop words and shared stems.
inline std::string generate_random_doc(genex::Rng& rng, int max_words) {
    static const std::vector<std::string> kContent = {
        "evolution",  "evolutionary", "evolved",    "psychology", "psychological",
        "network",    "networks",     "genetic",    "algorithm",  "algorithms",
        "market",     "markets",      "rate",       "rates",      "base",
        "basic",      "learning",     "learner",    "model",      "models",
        "system",     "systems",      "neural",     "data",       "test",
        "tests",      "value",        "values",     "analysis",   "signal",
        "signals",    "economic",     "economy",    "adaptive",   "adaptation",
        "search",     "selection",    "mutation",   "fitness",    "stem",
        "plan-executing", "self-organizing", "law",  "act",       "agent"};
    static const std::vector<std::string> kStops = {
        "the", "of", "and", "to", "in", "a", "is", "that", "for", "it"};
    static const std::vector<std::string> kProper = {
        "Turing", "Darwin", "Holland", "Ottawa"};
    static const std::vector<std::string> kAbbrev = {"IBM", "NASA", "GA", "US"};
    static const std::vector<std::string> kVerbs = {"make", "take", "run", "keep"};
    static const std::vector<std::string> kNumbers = {"42", "1997", "3", "x86"};

    int n = 1 + static_cast<int>(rng.next_below(static_cast<unsigned>(max_words)));
    std::string doc;
    bool sentence_open = false;
    for (int i = 0; i < n; ++i) {
        unsigned pick = static_cast<unsigned>(rng.next_below(100));
        std::string w;
        if (pick < 40) {
            w = kContent[rng.next_below(kContent.size())];
        } else if (pick < 70) {
            w = kStops[rng.next_below(kStops.size())];
        } else if (pick < 78) {
            w = kProper[rng.next_below(kProper.size())];
        } else if (pick < 84) {
            w = kAbbrev[rng.next_below(kAbbrev.size())];
        } else if (pick < 90) {
            w = kVerbs[rng.next_below(kVerbs.size())];
        } else if (pick < 94) {
            w = kNumbers[rng.next_below(kNumbers.size())];
        } else {
            w = kContent[rng.next_below(kContent.size())];
            if (!w.empty() && w[0] >= 'a' && w[0] <= 'z')
                w[0] = static_cast<char>(w[0] - 'a' + 'A');
        }
        if (!sentence_open && !w.empty() && w[0] >= 'a' && w[0] <= 'z' &&
            rng.next_below(2) == 0)
            w[0] = static_cast<char>(w[0] - 'a' + 'A');
        sentence_open = true;

        doc += w;
        unsigned tail = static_cast<unsigned>(rng.next_below(100));
        if (tail < 12) {
            doc += '.';
            sentence_open = false;
        } else if (tail < 18) {
            doc += ',';
        } else if (tail < 20) {
            doc += sentence_open ? ';' : '.';
        }
        doc += ' ';
    }
    doc += "End.";
    return doc;
}
