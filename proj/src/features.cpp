#include "genex/features.hpp"

#include "genex/stemmer.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>
#include <unordered_map>

namespace genex {

namespace {

std::string key_of(const std::vector<std::string>& stems) {
    std::string key;
    for (const auto& s : stems) {
        key += s;
        key += '\x1f';
    }
    return key;
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

std::string lower_of(const std::string& s) {
    std::string out = s;
    for (auto& c : out)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

bool word_capitalized(const std::string& w) {
    return !w.empty() && w[0] >= 'A' && w[0] <= 'Z';
}

struct Group {
    std::vector<std::string> stems;
    int frequency = 0;
    int first_position = 0;
    std::map<std::string, int> surfaces;
};

} // namespace

std::array<double, kLearnableFeatures> learnable_features(const FeatureVector& fv) {
    return {fv.num_words_phrase, fv.first_occur_phrase, fv.first_occur_word,
            fv.freq_phrase,      fv.freq_word,          fv.relative_length,
            fv.proper_noun,      fv.final_adjective,    fv.common_verb};
}

const std::array<const char*, kLearnableFeatures>& learnable_feature_names() {
    static const std::array<const char*, kLearnableFeatures> names = {
        "num_words_phrase", "first_occur_phrase", "first_occur_word",
        "freq_phrase",      "freq_word",          "relative_length",
        "proper_noun",      "final_adjective",    "common_verb"};
    return names;
}

std::vector<FeatureVector> build_feature_vectors(
    const PreparedDocument& doc, const std::vector<std::string>& targets,
    const WordLists& lists) {
    std::vector<FeatureVector> out;
    if (doc.candidates.empty() || doc.word_count == 0) return out;
    double words = static_cast<double>(doc.word_count);

    // per word-stem statistics over candidate-member tokens
    std::unordered_map<std::string, std::pair<int, int>> word_stats; // (first, freq)
    for (const auto& t : doc.tokens) {
        if (t.is_stop || !t.has_letter) continue;
        auto it = doc.word_stems.find(t.lower);
        std::string stem =
            it != doc.word_stems.end() ? it->second : iterated_lovins_stem(t.lower);
        auto ws = word_stats.find(stem);
        if (ws == word_stats.end())
            word_stats.emplace(stem, std::make_pair(t.position, 1));
        else {
            ws->second.first = std::min(ws->second.first, t.position);
            ws->second.second += 1;
        }
    }

    std::vector<Group> groups;
    std::unordered_map<std::string, std::size_t> index;
    for (const auto& c : doc.candidates) {
        std::vector<std::string> stems;
        stems.reserve(c.words.size());
        for (const auto& w : c.words) stems.push_back(doc.word_stems.at(w));
        std::string key = key_of(stems);
        auto it = index.find(key);
        if (it == index.end()) {
            index.emplace(key, groups.size());
            Group g;
            g.stems = std::move(stems);
            g.frequency = c.frequency;
            g.first_position = c.first_position;
            g.surfaces = c.surface_forms;
            groups.push_back(std::move(g));
        } else {
            Group& g = groups[it->second];
            g.frequency += c.frequency;
            g.first_position = std::min(g.first_position, c.first_position);
            for (const auto& [form, n] : c.surface_forms) g.surfaces[form] += n;
        }
    }

    std::map<std::string, int> target_keys;
    for (const auto& t : targets)
        target_keys[key_of(stem_sequence(t, StemmerSpec::iterated()))] += 1;

    for (const auto& g : groups) {
        FeatureVector fv;
        fv.stemmed_phrase = g.stems;

        const std::string* best = nullptr;
        int best_count = 0;
        for (const auto& [form, count] : g.surfaces) {
            if (!best || count > best_count) {
                best = &form;
                best_count = count;
            }
        }
        fv.whole_phrase = *best;

        int word_first = 0, word_freq = 0;
        for (const auto& s : g.stems) {
            const auto& ws = word_stats.at(s);
            if (word_first == 0 || ws.first < word_first) word_first = ws.first;
            word_freq = std::max(word_freq, ws.second);
        }

        fv.num_words_phrase = static_cast<double>(g.stems.size());
        fv.first_occur_phrase = static_cast<double>(g.first_position) / words;
        fv.first_occur_word = static_cast<double>(word_first) / words;
        fv.freq_phrase = static_cast<double>(g.frequency) / words;
        fv.freq_word = static_cast<double>(word_freq) / words;
        fv.relative_length =
            static_cast<double>(fv.whole_phrase.size()) / doc.avg_phrase_chars;

        auto display_words = split_words(fv.whole_phrase);
        bool proper = !display_words.empty();
        for (const auto& w : display_words)
            if (!word_capitalized(w)) proper = false;
        fv.proper_noun = proper ? 1.0 : 0.0;
        fv.final_adjective =
            lists.has_adjective_suffix(lower_of(display_words.back())) ? 1.0 : 0.0;
        bool verb = false;
        for (const auto& w : display_words)
            if (lists.is_common_verb(lower_of(w))) verb = true;
        fv.common_verb = verb ? 1.0 : 0.0;

        fv.label = target_keys.count(key_of(g.stems)) ? 1 : 0;
        out.push_back(std::move(fv));
    }
    return out;
}

std::vector<FeatureVector> build_feature_vectors(
    const std::string& text, const std::vector<std::string>& targets,
    const WordLists& lists) {
    return build_feature_vectors(prepare_document(text, lists), targets, lists);
}

std::string feature_vectors_to_tsv(const std::vector<FeatureVector>& vectors) {
    std::string out =
        "stemmed_phrase\twhole_phrase\tnum_words_phrase\tfirst_occur_phrase\t"
        "first_occur_word\tfreq_phrase\tfreq_word\trelative_length\t"
        "proper_noun\tfinal_adjective\tcommon_verb\tclass\n";
    char buf[64];
    for (const auto& fv : vectors) {
        std::string stems;
        for (std::size_t i = 0; i < fv.stemmed_phrase.size(); ++i) {
            if (i) stems += ' ';
            stems += fv.stemmed_phrase[i];
        }
        out += stems + "\t" + fv.whole_phrase;
        std::snprintf(buf, sizeof(buf), "\t%.0f", fv.num_words_phrase);
        out += buf;
        for (double v : {fv.first_occur_phrase, fv.first_occur_word,
                         fv.freq_phrase, fv.freq_word, fv.relative_length}) {
            std::snprintf(buf, sizeof(buf), "\t%.6f", v);
            out += buf;
        }
        std::snprintf(buf, sizeof(buf), "\t%.0f\t%.0f\t%.0f\t%d\n",
                      fv.proper_noun, fv.final_adjective, fv.common_verb,
                      fv.label);
        out += buf;
    }
    return out;
}

} // namespace genex
