#include "genex/extractor.hpp"

#include "genex/stemmer.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace genex {
namespace {

bool is_member_word(const Token& t) { return !t.is_stop && t.has_letter; }

bool counts_as_single(const Token& t) {
    return is_member_word(t) && t.lower.size() >= 3;
}

double position_factor(int first_position, const ExtractorParams& params) {
    if (first_position < params.first_low_thresh) return params.first_low_factor;
    if (first_position > params.first_high_thresh) return params.first_high_factor;
    return 1.0;
}

std::string join_words(const std::vector<std::string>& words) {
    std::string out;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i > 0) out += ' ';
        out += words[i];
    }
    return out;
}

std::vector<std::string> split_words(const std::string& joined) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : joined) {
        if (c == ' ') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::string stem_key(const std::vector<std::string>& stems) {
    std::string key;
    for (const auto& s : stems) {
        key += s;
        key += '\x1f';
    }
    return key;
}

std::vector<std::string> truncated_stems(const std::vector<std::string>& words,
                                         int stem_length) {
    std::vector<std::string> stems;
    stems.reserve(words.size());
    for (const auto& w : words) stems.push_back(truncate_stem(w, stem_length));
    return stems;
}

int count_capitals(const std::string& w) {
    int n = 0;
    for (unsigned char c : w)
        if (c >= 'A' && c <= 'Z') ++n;
    return n;
}

bool all_letters_upper(const std::string& w) {
    int letters = 0;
    for (unsigned char c : w) {
        if (std::isalpha(c)) {
            ++letters;
            if (!std::isupper(c)) return false;
        }
    }
    return letters > 0;
}

// First letter capitalized but not an all-caps token.
bool proper_word_form(const std::string& w) {
    if (w.empty()) return false;
    unsigned char c = static_cast<unsigned char>(w[0]);
    if (c < 'A' || c > 'Z') return false;
    return !all_letters_upper(w);
}

bool mixes_proper_and_lower(const std::vector<std::string>& words) {
    bool any_proper = false;
    bool any_lower = false;
    for (const auto& w : words) {
        if (proper_word_form(w)) any_proper = true;
        if (count_capitals(w) == 0) any_lower = true;
    }
    return any_proper && any_lower;
}

bool abbreviation_word(const std::string& w) {
    int caps = count_capitals(w);
    if (caps >= 2 && w.size() >= 2 && w.size() <= 6) return true;
    return w.size() >= 2 && all_letters_upper(w);
}

bool abbreviation_phrase(const std::string& display) {
    auto words = split_words(display);
    if (words.empty()) return false;
    for (const auto& w : words)
        if (!abbreviation_word(w)) return false;
    return true;
}

std::string to_lower_ascii(const std::string& s) {
    std::string out = s;
    for (auto& c : out)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

} // namespace

PreparedDocument prepare_document(const std::string& text, const WordLists& lists) {
    PreparedDocument doc;
    doc.tokens = tokenize(text, lists);
    doc.candidates = enumerate_candidates(doc.tokens, lists);
    doc.word_count = static_cast<int>(doc.tokens.size());

    for (const auto& t : doc.tokens) {
        if (!t.has_letter) continue;
        auto& casing = doc.casings[t.lower];
        casing.forms.insert(t.surface);
        bool starts_upper = !t.surface.empty() && t.surface[0] >= 'A' && t.surface[0] <= 'Z';
        if (!starts_upper) casing.all_capitalized = false;
        if (starts_upper && !t.sentence_start) casing.capital_elsewhere = true;
    }

    if (!doc.candidates.empty()) {
        std::size_t total = 0;
        for (const auto& c : doc.candidates) total += c.joined().size();
        doc.avg_phrase_chars =
            static_cast<double>(total) / static_cast<double>(doc.candidates.size());
    }

    for (const auto& c : doc.candidates) {
        for (const auto& w : c.words) {
            if (!doc.word_stems.count(w)) doc.word_stems[w] = iterated_lovins_stem(w);
        }
    }
    return doc;
}

std::vector<ScoredStem> score_single_stems(const std::vector<Token>& tokens,
                                           const ExtractorParams& params,
                                           const WordLists& lists) {
    (void)lists; // stop words are already marked on the tokens
    std::vector<ScoredStem> out;
    std::unordered_map<std::string, std::size_t> index;
    for (const auto& t : tokens) {
        if (!counts_as_single(t)) continue;
        std::string stem = truncate_stem(t.lower, params.stem_length);
        auto it = index.find(stem);
        if (it == index.end()) {
            index.emplace(stem, out.size());
            out.push_back({stem, 1, t.position, 0.0});
        } else {
            auto& entry = out[it->second];
            entry.frequency += 1;
            entry.first_position = std::min(entry.first_position, t.position);
        }
    }
    for (auto& entry : out)
        entry.score = entry.frequency * position_factor(entry.first_position, params);
    return out;
}

std::vector<ScoredStem> top_single_stems(std::vector<ScoredStem> scored,
                                         int num_working) {
    std::stable_sort(scored.begin(), scored.end(),
                     [](const ScoredStem& a, const ScoredStem& b) {
                         if (a.score != b.score) return a.score > b.score;
                         if (a.first_position != b.first_position)
                             return a.first_position < b.first_position;
                         return a.stem < b.stem;
                     });
    if (static_cast<int>(scored.size()) > num_working)
        scored.resize(static_cast<std::size_t>(num_working));
    return scored;
}

std::vector<ScoredStemPhrase> score_stem_phrases(
    const std::vector<CandidatePhrase>& candidates,
    const ExtractorParams& params) {
    std::vector<ScoredStemPhrase> out;
    std::unordered_map<std::string, std::size_t> index;
    for (const auto& c : candidates) {
        auto stems = truncated_stems(c.words, params.stem_length);
        std::string key = stem_key(stems);
        auto it = index.find(key);
        if (it == index.end()) {
            index.emplace(key, out.size());
            out.push_back({std::move(stems), c.frequency, c.first_position, 0.0, 0.0});
        } else {
            auto& entry = out[it->second];
            entry.frequency += c.frequency;
            entry.first_position = std::min(entry.first_position, c.first_position);
        }
    }
    for (auto& entry : out) {
        double score =
            entry.frequency * position_factor(entry.first_position, params);
        if (entry.stems.size() == 2) score *= params.factor_two_one;
        if (entry.stems.size() == 3) score *= params.factor_three_one;
        entry.score = score;
    }
    return out;
}

std::vector<ScoredStemPhrase> expand_stems(
    const std::vector<ScoredStem>& top_stems,
    const std::vector<ScoredStemPhrase>& scored_phrases) {
    std::vector<ScoredStemPhrase> out;
    out.reserve(top_stems.size());
    for (const auto& single : top_stems) {
        const ScoredStemPhrase* best = nullptr;
        for (const auto& phrase : scored_phrases) {
            bool contains = std::find(phrase.stems.begin(), phrase.stems.end(),
                                      single.stem) != phrase.stems.end();
            if (!contains) continue;
            if (!best || phrase.score > best->score ||
                (phrase.score == best->score &&
                 (phrase.first_position < best->first_position ||
                  (phrase.first_position == best->first_position &&
                   phrase.stems < best->stems)))) {
                best = &phrase;
            }
        }
        if (!best) continue;
        ScoredStemPhrase chosen = *best;
        chosen.rank_score = single.score;
        out.push_back(std::move(chosen));
    }
    return out;
}

std::vector<ScoredStemPhrase> drop_duplicates(
    const std::vector<ScoredStemPhrase>& expanded) {
    std::vector<ScoredStemPhrase> out;
    std::unordered_set<std::string> seen;
    for (const auto& phrase : expanded) {
        if (seen.insert(stem_key(phrase.stems)).second) out.push_back(phrase);
    }
    return out;
}

std::optional<std::string> choose_whole_phrase(
    const std::vector<std::string>& stem_phrase,
    const std::map<std::string, int>& whole_forms,
    const WordLists& lists) {
    (void)stem_phrase;
    const std::string* best = nullptr;
    int best_count = 0;
    for (const auto& [form, count] : whole_forms) {
        if (count <= 0) continue;
        auto words = split_words(form);
        if (words.empty()) continue;
        if (lists.has_adjective_suffix(words.back())) continue;
        bool verb = false;
        for (const auto& w : words)
            if (lists.is_common_verb(w)) { verb = true; break; }
        if (verb) continue;
        if (!best || count > best_count) {
            best = &form;
            best_count = count;
        }
    }
    if (!best) return std::nullopt;
    return *best;
}

std::string best_capitalization(
    const std::vector<std::string>& phrase_words,
    const std::vector<std::set<std::string>>& observed_casings) {
    std::vector<std::vector<std::string>> ranked(phrase_words.size());
    for (std::size_t i = 0; i < phrase_words.size(); ++i) {
        ranked[i].assign(observed_casings[i].begin(), observed_casings[i].end());
        std::stable_sort(ranked[i].begin(), ranked[i].end(),
                         [](const std::string& a, const std::string& b) {
                             int ca = count_capitals(a), cb = count_capitals(b);
                             if (ca != cb) return ca < cb;
                             return a < b;
                         });
        if (ranked[i].empty()) ranked[i].push_back(phrase_words[i]);
    }

    std::vector<std::string> chosen;
    chosen.reserve(phrase_words.size());
    for (const auto& forms : ranked) chosen.push_back(forms.front());

    if (mixes_proper_and_lower(chosen)) {
        std::vector<std::string> retry = chosen;
        for (std::size_t i = 0; i < retry.size(); ++i) {
            if (count_capitals(retry[i]) == 0 && ranked[i].size() >= 2)
                retry[i] = ranked[i][1];
        }
        if (!mixes_proper_and_lower(retry)) chosen = retry;
    }
    return join_words(chosen);
}

std::vector<Keyphrase> filter_output(const std::vector<Keyphrase>& candidates,
                                     const ExtractorParams& params,
                                     const WordLists& lists,
                                     double avg_phrase_chars) {
    std::vector<Keyphrase> out;
    for (const auto& kp : candidates) {
        if (static_cast<int>(out.size()) >= params.num_phrases) break;
        auto lower = to_lower_ascii(kp.display);
        auto words = split_words(lower);
        if (words.empty()) continue;

        if (params.suppress_proper && kp.proper_noun) continue;
        if (lists.has_adjective_suffix(words.back())) continue;
        bool verb = false;
        for (const auto& w : words)
            if (lists.is_common_verb(w)) { verb = true; break; }
        if (verb) continue;
        if (lists.stop_phrases.count(lower)) continue;

        bool long_enough =
            avg_phrase_chars > 0.0 &&
            static_cast<double>(kp.display.size()) / avg_phrase_chars >
                params.min_length_low_rank;
        bool high_rank = kp.rank < params.min_rank_low_length;
        bool abbrev = abbreviation_phrase(kp.display);
        if (!(long_enough || high_rank || abbrev)) continue;

        out.push_back(kp);
    }
    return out;
}

std::vector<Keyphrase> extract_prepared(const PreparedDocument& doc,
                                        const ExtractorParams& params,
                                        const WordLists& lists) {
    params.validate();
    if (doc.candidates.empty()) return {};

    auto singles = score_single_stems(doc.tokens, params, lists);
    auto top = top_single_stems(std::move(singles), params.num_working);
    auto phrases = score_stem_phrases(doc.candidates, params);
    auto expanded = expand_stems(top, phrases);
    auto dedup = drop_duplicates(expanded);

    // whole forms per stem phrase, counted by candidate frequency
    std::unordered_map<std::string, std::map<std::string, int>> group_forms;
    for (const auto& c : doc.candidates) {
        auto stems = truncated_stems(c.words, params.stem_length);
        group_forms[stem_key(stems)][c.joined()] += c.frequency;
    }

    std::vector<Keyphrase> kps;
    kps.reserve(dedup.size());
    for (std::size_t i = 0; i < dedup.size(); ++i) {
        const auto& phrase = dedup[i];
        const auto& forms = group_forms.at(stem_key(phrase.stems));
        auto whole = choose_whole_phrase(phrase.stems, forms, lists);
        if (!whole) continue;

        auto words = split_words(*whole);
        std::vector<std::set<std::string>> casings;
        casings.reserve(words.size());
        bool proper = true;
        for (const auto& w : words) {
            auto it = doc.casings.find(w);
            if (it == doc.casings.end()) {
                casings.emplace_back();
                proper = false;
                continue;
            }
            casings.push_back(it->second.forms);
            if (!(it->second.all_capitalized && it->second.capital_elsewhere))
                proper = false;
        }

        Keyphrase kp;
        kp.display = best_capitalization(words, casings);
        kp.stem_phrase = phrase.stems;
        kp.rank_score = phrase.rank_score;
        kp.rank = static_cast<int>(i) + 1;
        kp.proper_noun = proper;
        kps.push_back(std::move(kp));
    }

    return filter_output(kps, params, lists, doc.avg_phrase_chars);
}

std::vector<Keyphrase> extract(const std::string& document,
                               const ExtractorParams& params,
                               const WordLists& lists) {
    return extract_prepared(prepare_document(document, lists), params, lists);
}

} // namespace genex
