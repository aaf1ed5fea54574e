#include <doctest.h>

#include "genex/candidates.hpp"
#include "genex/tokenizer.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

using namespace genex;

namespace {

WordLists tiny_lists() {
    WordLists lists;
    lists.stop_words = {"the", "of", "a", "an", "and", "is", "to", "in",
                        "during", "across", "some"};
    return lists;
}

std::set<std::string> joined_set(const std::vector<CandidatePhrase>& cands) {
    std::set<std::string> out;
    for (const auto& c : cands) out.insert(c.joined());
    return out;
}

const CandidatePhrase* find_candidate(const std::vector<CandidatePhrase>& cands,
                                      const std::string& joined) {
    for (const auto& c : cands)
        if (c.joined() == joined) return &c;
    return nullptr;
}

// Independent reference: scan every 1-3 token window directly.
struct WindowStats {
    int frequency = 0;
    int first_position = 0;
    std::map<std::string, int> surface_forms;
};

std::map<std::string, WindowStats> window_scan(const std::vector<Token>& toks) {
    std::map<std::string, WindowStats> out;
    for (std::size_t i = 0; i < toks.size(); ++i) {
        for (std::size_t len = 1; len <= 3 && i + len <= toks.size(); ++len) {
            bool ok = true;
            for (std::size_t j = i; j < i + len; ++j) {
                if (toks[j].is_stop || !toks[j].has_letter) ok = false;
                if (j > i && toks[j].preceded_by_punct) ok = false;
            }
            if (len == 1 && toks[i].lower.size() < 3) ok = false;
            if (!ok) continue;
            std::string key, surface;
            for (std::size_t j = i; j < i + len; ++j) {
                if (j > i) { key += ' '; surface += ' '; }
                key += toks[j].lower;
                surface += toks[j].surface;
            }
            auto& st = out[key];
            if (st.frequency == 0) st.first_position = toks[i].position;
            st.frequency += 1;
            st.surface_forms[surface] += 1;
        }
    }
    return out;
}

void check_against_window_scan(const std::string& text) {
    auto lists = tiny_lists();
    auto toks = tokenize(text, lists);
    auto cands = enumerate_candidates(toks, lists);
    auto expected = window_scan(toks);

    REQUIRE(cands.size() == expected.size());
    for (const auto& c : cands) {
        auto it = expected.find(c.joined());
        REQUIRE(it != expected.end());
        CHECK(c.frequency == it->second.frequency);
        CHECK(c.first_position == it->second.first_position);
        CHECK(c.surface_forms == it->second.surface_forms);
    }
}

} // namespace

TEST_CASE("windows of 1-3 consecutive non-stop words") {
    auto lists = tiny_lists();
    auto toks = tokenize("the quick brown fox", lists);
    auto cands = enumerate_candidates(toks, lists);
    CHECK(joined_set(cands) == std::set<std::string>{
        "quick", "brown", "fox", "quick brown", "brown fox", "quick brown fox"});
}

TEST_CASE("no candidate spans punctuation") {
    auto lists = tiny_lists();
    auto toks = tokenize("a fast, red car", lists);
    auto cands = enumerate_candidates(toks, lists);
    CHECK(joined_set(cands) ==
          std::set<std::string>{"fast", "red", "car", "red car"});
}

TEST_CASE("single-word candidates need three characters, members do not") {
    auto lists = tiny_lists();
    auto toks = tokenize("US law", lists);
    auto cands = enumerate_candidates(toks, lists);
    CHECK(joined_set(cands) == std::set<std::string>{"law", "us law"});
}

TEST_CASE("numerals never join candidate phrases") {
    auto lists = tiny_lists();
    auto toks = tokenize("version 3 beta", lists);
    auto cands = enumerate_candidates(toks, lists);
    CHECK(joined_set(cands) == std::set<std::string>{"version", "beta"});
}

TEST_CASE("occurrences differing only in case aggregate") {
    auto lists = tiny_lists();
    auto toks = tokenize("Neural networks learn. We like neural networks.", lists);
    auto cands = enumerate_candidates(toks, lists);
    const auto* c = find_candidate(cands, "neural networks");
    REQUIRE(c != nullptr);
    CHECK(c->frequency == 2);
    CHECK(c->first_position == 1);
    CHECK(c->surface_forms ==
          std::map<std::string, int>{{"Neural networks", 1}, {"neural networks", 1}});
}

TEST_CASE("repeated pair aggregates with min first position") {
    std::string text =
        "The committee reviewed seven economic reports during the early "
        "spring session. Base rates influence lending. Analysts compared "
        "base rates across regions. Higher base rates slowed housing. "
        "Some banks ignored base rates entirely.";
    auto lists = tiny_lists();
    auto toks = tokenize(text, lists);
    REQUIRE(toks.size() == 32);
    auto cands = enumerate_candidates(toks, lists);
    const auto* c = find_candidate(cands, "base rates");
    REQUIRE(c != nullptr);
    CHECK(c->frequency == 4);
    CHECK(c->first_position == 12);

    check_against_window_scan(text);
}

TEST_CASE("window-scan reference agrees on punctuation-heavy text") {
    check_against_window_scan(
        "Dr. Smith's lab (the first of its kind) re-ran 12 trials; "
        "trial 7 failed! Why? Noise, they said: noise. The U.S. team "
        "re-ran the trials and the noise returned.");
    check_against_window_scan("One. Two! Three? Four; five, six.");
    check_against_window_scan("");
}

TEST_CASE("candidate invariants hold") {
    auto lists = tiny_lists();
    std::string text =
        "Genetic algorithms evolve populations. A genetic algorithm "
        "evolves one population of genetic algorithms at a time.";
    auto toks = tokenize(text, lists);
    auto cands = enumerate_candidates(toks, lists);
    REQUIRE_FALSE(cands.empty());

    int adjacent_pairs = 0;
    for (std::size_t i = 0; i + 1 < toks.size(); ++i) {
        if (candidate_member(toks[i]) && candidate_member(toks[i + 1]) &&
            !toks[i + 1].preceded_by_punct)
            ++adjacent_pairs;
    }
    int two_word_freq = 0;
    for (const auto& c : cands) {
        CHECK(c.words.size() >= 1);
        CHECK(c.words.size() <= 3);
        int surface_total = 0;
        for (const auto& [form, n] : c.surface_forms) surface_total += n;
        CHECK(c.frequency == surface_total);
        for (const auto& w : c.words) CHECK_FALSE(lists.is_stop(w));
        if (c.words.size() == 2) two_word_freq += c.frequency;
    }
    CHECK(two_word_freq <= adjacent_pairs);
}
