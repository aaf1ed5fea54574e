#pragma once

#include "genex/candidates.hpp"
#include "genex/params.hpp"
#include "genex/tokenizer.hpp"
#include "genex/wordlists.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace genex {

struct ScoredStem {
    std::string stem;       // truncated form
    int frequency = 0;
    int first_position = 0;
    double score = 0.0;
};

struct ScoredStemPhrase {
    std::vector<std::string> stems; // 1-3 truncated stems
    int frequency = 0;
    int first_position = 0;
    double score = 0.0;      // phrase score (length multiplier applied)
    double rank_score = 0.0; // step-2 score of the source single stem
};

struct Keyphrase {
    std::string display;                  // suffixed, capitalized
    std::vector<std::string> stem_phrase; // truncated stems
    double rank_score = 0.0;
    int rank = 0;            // 1-based position in the deduplicated list
    bool proper_noun = false;
};

// Casing evidence for one lowercase word across the document.
struct WordCasing {
    std::set<std::string> forms;        // observed surface spellings
    bool all_capitalized = true;        // every occurrence starts uppercase
    bool capital_elsewhere = false;     // some occurrence not sentence-initial
};
using CasingMap = std::unordered_map<std::string, WordCasing>;

// Tokenization, candidate enumeration and the statistics that do not
// depend on the parameter vector. Computed once per document; extraction
// with many parameter settings then reuses it.
struct PreparedDocument {
    std::vector<Token> tokens;
    std::vector<CandidatePhrase> candidates;
    CasingMap casings;
    double avg_phrase_chars = 0.0; // mean chars over unique candidate phrases
    int word_count = 0;
    // iterated-Lovins stem per distinct candidate-member word
    std::unordered_map<std::string, std::string> word_stems;
};

PreparedDocument prepare_document(const std::string& text, const WordLists& lists);

// Scoring steps. A stem's score is frequency times a position factor:
// first_low_factor before first_low_thresh, first_high_factor after
// first_high_thresh (the low test wins when the ranges overlap), else 1.
std::vector<ScoredStem> score_single_stems(const std::vector<Token>& tokens,
                                           const ExtractorParams& params,
                                           const WordLists& lists);

// Top num_working stems by (score desc, first_position asc, stem asc).
std::vector<ScoredStem> top_single_stems(std::vector<ScoredStem> scored,
                                         int num_working);

// Candidate phrases scored like single stems on phrase frequency and
// first position, times factor_two_one / factor_three_one by length.
std::vector<ScoredStemPhrase> score_stem_phrases(
    const std::vector<CandidatePhrase>& candidates,
    const ExtractorParams& params);

// For each top stem, the best-scoring phrase containing it; output keeps
// the stem order and carries each stem's score as rank_score.
std::vector<ScoredStemPhrase> expand_stems(
    const std::vector<ScoredStem>& top_stems,
    const std::vector<ScoredStemPhrase>& scored_phrases);

// Keeps the first occurrence of each stem phrase.
std::vector<ScoredStemPhrase> drop_duplicates(
    const std::vector<ScoredStemPhrase>& expanded);

// Most frequent whole form, with counts zeroed for forms ending in an
// adjective suffix or containing a common verb. Forms are lowercase;
// ties go to the lexicographically smaller form. Empty result means the
// candidate is dropped.
std::optional<std::string> choose_whole_phrase(
    const std::vector<std::string>& stem_phrase,
    const std::map<std::string, int>& whole_forms,
    const WordLists& lists);

// Per-word fewest-capitals casing; on a proper/lowercase mix, lowercase
// words retry with their second-fewest form; an irreparable mix stands.
std::string best_capitalization(
    const std::vector<std::string>& phrase_words,
    const std::vector<std::set<std::string>>& observed_casings);

// Final output filter: tests (1) proper nouns suppressed, (2) adjective
// ending, (6) common verb, (7) stop phrase must all pass, plus at least
// one of (3) relative length, (4) rank, (5) abbreviation pattern.
std::vector<Keyphrase> filter_output(const std::vector<Keyphrase>& candidates,
                                     const ExtractorParams& params,
                                     const WordLists& lists,
                                     double avg_phrase_chars);

// The whole pipeline.
std::vector<Keyphrase> extract(const std::string& document,
                               const ExtractorParams& params,
                               const WordLists& lists);
std::vector<Keyphrase> extract_prepared(const PreparedDocument& doc,
                                        const ExtractorParams& params,
                                        const WordLists& lists);

} // namespace genex
