#include <doctest.h>

#include "genex/corpus.hpp"
#include "genex/synth.hpp"
#include "genex/tokenizer.hpp"
#include "genex/wordlists.hpp"

#include <unistd.h>

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace genex;

namespace {

const WordLists& default_lists() {
    static const WordLists lists =
        load_word_lists_dir(std::string(GENEX_SOURCE_DIR) + "/data/wordlists");
    return lists;
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        static int counter = 0;
        path = std::filesystem::temp_directory_path() /
               ("genex_synth_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter++));
        std::filesystem::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }
};

std::vector<std::string> split_on_spaces(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

// occurrences of the phrase as a consecutive lowercase token run
void phrase_occurrences(const std::vector<Token>& tokens,
                        const std::vector<std::string>& words, int& count,
                        int& first_position) {
    count = 0;
    first_position = 0;
    if (words.empty() || tokens.size() < words.size()) return;
    for (std::size_t i = 0; i + words.size() <= tokens.size(); ++i) {
        bool hit = true;
        for (std::size_t j = 0; j < words.size(); ++j) {
            if (tokens[i + j].lower != words[j]) {
                hit = false;
                break;
            }
        }
        if (hit) {
            ++count;
            if (first_position == 0) first_position = tokens[i].position;
        }
    }
}

} // namespace

TEST_CASE("generator configuration is validated") {
    SynthConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    SynthConfig bad = cfg;
    bad.num_docs = 0;
    CHECK_THROWS_AS(bad.validate(), std::runtime_error);
    bad = cfg;
    bad.test_fraction = 1.0;
    CHECK_THROWS_AS(bad.validate(), std::runtime_error);
    bad = cfg;
    bad.test_fraction = -0.2;
    CHECK_THROWS_AS(bad.validate(), std::runtime_error);
    bad = cfg;
    bad.words_per_doc = 10;
    CHECK_THROWS_AS(bad.validate(), std::runtime_error);
    bad = cfg;
    bad.targets_per_doc = 0;
    CHECK_THROWS_AS(bad.validate(), std::runtime_error);
}

TEST_CASE("default corpus splits thirty documents twenty-ten") {
    SynthConfig cfg;
    cfg.rng_seed = 12;
    Corpus corpus = make_synthetic_corpus(cfg);
    REQUIRE(corpus.documents.size() == 30);
    CHECK(corpus.ids_in_split(Split::train).size() == 20);
    CHECK(corpus.ids_in_split(Split::test).size() == 10);
    CHECK(corpus.documents.front().first == "synth001");
    CHECK(corpus.documents.back().first == "synth030");
    for (const auto& [id, text] : corpus.documents) {
        CHECK(corpus.targets.count(id) == 1);
        CHECK(corpus.split.count(id) == 1);
        CHECK(!text.empty());
    }
}

TEST_CASE("the same seed reproduces the corpus exactly") {
    SynthConfig cfg;
    cfg.num_docs = 6;
    cfg.rng_seed = 2718;
    Corpus a = make_synthetic_corpus(cfg);
    Corpus b = make_synthetic_corpus(cfg);
    CHECK(a.documents == b.documents);
    CHECK(a.targets == b.targets);

    cfg.rng_seed = 2719;
    Corpus c = make_synthetic_corpus(cfg);
    CHECK(a.documents != c.documents);
}

TEST_CASE("planted targets are frequent, early, and short") {
    SynthConfig cfg;
    cfg.num_docs = 10;
    cfg.rng_seed = 31;
    Corpus corpus = make_synthetic_corpus(cfg);
    const WordLists& lists = default_lists();

    for (const auto& [id, text] : corpus.documents) {
        auto tokens = tokenize(text, lists);
        int total = static_cast<int>(tokens.size());
        REQUIRE(total > 0);

        const auto& targets = corpus.targets.at(id);
        REQUIRE(static_cast<int>(targets.size()) == cfg.targets_per_doc);
        for (const auto& phrase : targets) {
            auto words = split_on_spaces(phrase);
            REQUIRE(!words.empty());
            CHECK(words.size() <= 3);
            for (const auto& w : words) {
                CHECK(w.size() >= 3);
                CHECK_FALSE(lists.is_stop(w));
                CHECK_FALSE(lists.is_common_verb(w));
            }
            CHECK_FALSE(lists.has_adjective_suffix(words.back()));

            int count = 0;
            int first_position = 0;
            phrase_occurrences(tokens, words, count, first_position);
            CHECK(count >= 5);
            REQUIRE(first_position > 0);
            CHECK(first_position * 10 <= total);
        }
    }
}

TEST_CASE("written corpus loads back identically") {
    SynthConfig cfg;
    cfg.num_docs = 20;
    cfg.rng_seed = 77;
    Corpus corpus = make_synthetic_corpus(cfg);

    TempDir dir;
    write_synthetic_corpus(corpus, dir.path.string());

    std::size_t txt = 0, key = 0;
    bool manifest = false;
    for (const auto& entry : std::filesystem::directory_iterator(dir.path)) {
        auto name = entry.path().filename().string();
        if (name == "manifest") manifest = true;
        else if (entry.path().extension() == ".txt") ++txt;
        else if (entry.path().extension() == ".key") ++key;
    }
    CHECK(txt == 20);
    CHECK(key == 20);
    CHECK(manifest);

    Corpus loaded = load_corpus(dir.path.string());
    REQUIRE(loaded.documents.size() == corpus.documents.size());
    for (std::size_t i = 0; i < corpus.documents.size(); ++i) {
        CHECK(loaded.documents[i].first == corpus.documents[i].first);
        CHECK(loaded.documents[i].second == corpus.documents[i].second);
    }
    CHECK(loaded.targets == corpus.targets);
    for (const auto& [id, split] : corpus.split) {
        CHECK(loaded.split.at(id) == split);
    }
}

TEST_CASE("documents read as punctuated sentences") {
    SynthConfig cfg;
    cfg.num_docs = 2;
    cfg.rng_seed = 55;
    Corpus corpus = make_synthetic_corpus(cfg);
    for (const auto& [id, text] : corpus.documents) {
        CHECK(text.find('.') != std::string::npos);
        // sentences start uppercase
        REQUIRE(!text.empty());
        CHECK(std::isupper(static_cast<unsigned char>(text[0])));
        // document ends with a newline after final punctuation
        CHECK(text.back() == '\n');
    }
}
