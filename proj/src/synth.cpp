#include "genex/synth.hpp"

#include "genex/rng.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace genex {

namespace {

// Two-syllable pseudo-words. Syllable endings avoid the adjective
// suffixes and every pair differs within its first five characters, so
// truncated stems never merge distinct words.
const std::vector<std::string>& pseudo_vocabulary() {
    static const std::vector<std::string> vocab = [] {
        const char* syllables[] = {"bem", "dok", "fen", "gup", "hon", "jat",
                                   "kur", "lom", "nep", "pir", "rud", "sot",
                                   "tev", "vun", "wok", "yub", "zam", "quin"};
        std::vector<std::string> out;
        for (const char* a : syllables) {
            for (const char* b : syllables) {
                if (a == b) continue;
                out.push_back(std::string(a) + b);
            }
        }
        return out;
    }();
    return vocab;
}

const std::vector<std::string>& stop_fillers() {
    static const std::vector<std::string> stops = {"the", "of",   "and", "a",
                                                   "in",  "to",   "is",  "for",
                                                   "with", "that"};
    return stops;
}

using Atom = std::vector<std::string>;

std::string draw_filler(const std::vector<std::string>& pool, Rng& rng) {
    if (rng.next_below(10) < 3) {
        return stop_fillers()[static_cast<std::size_t>(
            rng.next_below(stop_fillers().size()))];
    }
    return pool[static_cast<std::size_t>(rng.next_below(pool.size()))];
}

// Draws `count` distinct words from pool[from..from+span).
std::vector<std::string> draw_distinct(const std::vector<std::string>& pool,
                                       std::size_t from, std::size_t span,
                                       std::size_t count, Rng& rng) {
    std::set<std::size_t> picked;
    while (picked.size() < count) {
        picked.insert(from + static_cast<std::size_t>(rng.next_below(span)));
    }
    std::vector<std::string> out;
    for (std::size_t i : picked) out.push_back(pool[i]);
    return out;
}

std::string assemble_sentences(const std::vector<Atom>& atoms, Rng& rng) {
    std::ostringstream text;
    std::size_t at = 0;
    bool first_sentence = true;
    while (at < atoms.size()) {
        std::size_t want = 8 + static_cast<std::size_t>(rng.next_below(7));
        std::vector<std::string> words;
        while (at < atoms.size() && words.size() < want) {
            for (const std::string& w : atoms[at]) words.push_back(w);
            ++at;
            if (at < atoms.size() && words.size() + 2 < want &&
                rng.next_below(10) == 0) {
                words.back() += ",";
            }
        }
        if (words.empty()) break;
        words[0][0] = static_cast<char>(
            std::toupper(static_cast<unsigned char>(words[0][0])));
        std::uint64_t punct = rng.next_below(10);
        words.back() += punct < 8 ? "." : (punct == 8 ? "?" : "!");
        if (!first_sentence) text << '\n';
        first_sentence = false;
        for (std::size_t i = 0; i < words.size(); ++i) {
            if (i > 0) text << ' ';
            text << words[i];
        }
    }
    text << '\n';
    return text.str();
}

std::size_t total_words(const std::vector<Atom>& atoms) {
    std::size_t n = 0;
    for (const Atom& a : atoms) n += a.size();
    return n;
}

struct PlantedDoc {
    std::string text;
    std::vector<std::string> targets;
};

PlantedDoc generate_document(const SynthConfig& cfg, Rng& rng) {
    const auto& vocab = pseudo_vocabulary();
    std::size_t third = vocab.size() / 3;

    auto n_targets = static_cast<std::size_t>(cfg.targets_per_doc);
    std::size_t n_distractors = 7 + static_cast<std::size_t>(rng.next_below(2));
    auto special = draw_distinct(vocab, 0, third,
                                 3 * n_targets + 3 * n_distractors, rng);
    std::size_t next_special = 0;
    auto take_phrase = [&](std::size_t len) {
        Atom phrase;
        for (std::size_t i = 0; i < len; ++i) {
            phrase.push_back(special[next_special++]);
        }
        return phrase;
    };

    std::vector<Atom> target_phrases;
    for (std::size_t i = 0; i < n_targets; ++i) {
        target_phrases.push_back(
            take_phrase(1 + static_cast<std::size_t>(rng.next_below(3))));
    }
    std::vector<Atom> distractor_phrases;
    for (std::size_t i = 0; i < n_distractors; ++i) {
        distractor_phrases.push_back(
            take_phrase(1 + static_cast<std::size_t>(rng.next_below(3))));
    }

    std::vector<std::string> filler_pool(vocab.begin() + static_cast<long>(third),
                                         vocab.end());

    // Zone A: every target's first occurrence, near the start.
    std::vector<Atom> atoms;
    for (std::uint64_t i = rng.next_below(3); i > 0; --i) {
        atoms.push_back({draw_filler(filler_pool, rng)});
    }
    for (const Atom& phrase : target_phrases) {
        atoms.push_back(phrase);
        for (std::uint64_t i = 1 + rng.next_below(3); i > 0; --i) {
            atoms.push_back({draw_filler(filler_pool, rng)});
        }
    }

    // Buffer zone: pure filler separating the target introductions from
    // everything else, so first-occurrence position carries real signal.
    for (std::size_t i = 0;
         i < static_cast<std::size_t>(cfg.words_per_doc) / 4; ++i) {
        atoms.push_back({draw_filler(filler_pool, rng)});
    }

    // Zone B: filler with repeat target occurrences and heavier, later
    // distractor phrases spliced in at distinct points. Distractors beat
    // targets on raw frequency; only their position separates them.
    std::vector<Atom> blocks;
    for (const Atom& phrase : target_phrases) {
        std::uint64_t repeats = 4 + rng.next_below(3); // total frequency 5-7
        for (std::uint64_t i = 0; i < repeats; ++i) blocks.push_back(phrase);
    }
    for (const Atom& phrase : distractor_phrases) {
        std::uint64_t repeats = 8 + rng.next_below(3);
        for (std::uint64_t i = 0; i < repeats; ++i) blocks.push_back(phrase);
    }

    std::size_t planted = total_words(atoms) + total_words(blocks);
    std::size_t fill = planted < static_cast<std::size_t>(cfg.words_per_doc)
                           ? static_cast<std::size_t>(cfg.words_per_doc) - planted
                           : 0;
    fill = std::max(fill, 2 * blocks.size() + 10);
    std::vector<Atom> zone_b;
    for (std::size_t i = 0; i < fill; ++i) {
        zone_b.push_back({draw_filler(filler_pool, rng)});
    }
    std::set<std::size_t> slots;
    while (slots.size() < blocks.size()) {
        slots.insert(static_cast<std::size_t>(rng.next_below(zone_b.size())));
    }
    std::size_t block_at = 0;
    std::vector<Atom> zone_b_final;
    for (std::size_t i = 0; i < zone_b.size(); ++i) {
        if (slots.count(i)) zone_b_final.push_back(blocks[block_at++]);
        zone_b_final.push_back(zone_b[i]);
    }
    atoms.insert(atoms.end(), zone_b_final.begin(), zone_b_final.end());

    // Keep every first occurrence inside the first tenth of the document.
    std::vector<std::size_t> first_pos(target_phrases.size(), 0);
    {
        std::size_t pos = 1;
        std::vector<bool> seen(target_phrases.size(), false);
        for (const Atom& a : atoms) {
            for (std::size_t t = 0; t < target_phrases.size(); ++t) {
                if (!seen[t] && a == target_phrases[t]) {
                    seen[t] = true;
                    first_pos[t] = pos;
                }
            }
            pos += a.size();
        }
    }
    std::size_t latest = *std::max_element(first_pos.begin(), first_pos.end());
    while (latest * 10 > total_words(atoms)) {
        atoms.push_back({draw_filler(filler_pool, rng)});
    }

    PlantedDoc doc;
    doc.text = assemble_sentences(atoms, rng);
    for (const Atom& phrase : target_phrases) {
        std::string joined;
        for (std::size_t i = 0; i < phrase.size(); ++i) {
            if (i > 0) joined += ' ';
            joined += phrase[i];
        }
        doc.targets.push_back(joined);
    }
    return doc;
}

std::string doc_id_for(int index) {
    std::ostringstream id;
    id << "synth";
    std::string n = std::to_string(index + 1);
    for (std::size_t i = n.size(); i < 3; ++i) id << '0';
    id << n;
    return id.str();
}

} // namespace

void SynthConfig::validate() const {
    if (num_docs < 1) throw std::runtime_error("num_docs must be at least 1");
    if (test_fraction < 0.0 || test_fraction >= 1.0) {
        throw std::runtime_error("test_fraction must be in [0, 1)");
    }
    if (words_per_doc < 40) {
        throw std::runtime_error("words_per_doc must be at least 40");
    }
    if (targets_per_doc < 1 || targets_per_doc > 6) {
        throw std::runtime_error("targets_per_doc must be in [1, 6]");
    }
}

Corpus make_synthetic_corpus(const SynthConfig& cfg) {
    cfg.validate();
    Corpus corpus;
    auto n_test = static_cast<int>(
        std::llround(cfg.test_fraction * static_cast<double>(cfg.num_docs)));
    for (int i = 0; i < cfg.num_docs; ++i) {
        Rng rng(splitmix64(cfg.rng_seed ^ (0x5eed0000ULL + static_cast<std::uint64_t>(i))));
        PlantedDoc doc = generate_document(cfg, rng);
        std::string id = doc_id_for(i);
        corpus.documents.emplace_back(id, doc.text);
        corpus.targets[id] = doc.targets;
        corpus.split[id] =
            i < cfg.num_docs - n_test ? Split::train : Split::test;
    }
    return corpus;
}

void write_synthetic_corpus(const Corpus& corpus, const std::string& dir) {
    std::filesystem::create_directories(dir);
    std::ofstream manifest(std::filesystem::path(dir) / "manifest");
    if (!manifest) throw std::runtime_error("cannot write manifest in " + dir);
    for (const auto& [id, text] : corpus.documents) {
        std::ofstream txt(std::filesystem::path(dir) / (id + ".txt"));
        txt << text;
        std::ofstream key(std::filesystem::path(dir) / (id + ".key"));
        auto it = corpus.targets.find(id);
        if (it != corpus.targets.end()) {
            for (const std::string& phrase : it->second) key << phrase << '\n';
        }
        auto split_it = corpus.split.find(id);
        bool test = split_it != corpus.split.end() && split_it->second == Split::test;
        manifest << id << '\t' << (test ? "test" : "train") << '\n';
    }
}

} // namespace genex
