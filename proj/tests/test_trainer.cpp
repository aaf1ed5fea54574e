#include <doctest.h>

#include "genex/genome.hpp"
#include "genex/rng.hpp"
#include "genex/stemmer.hpp"
#include "genex/synth.hpp"
#include "genex/trainer.hpp"
#include "genex/wordlists.hpp"
#include "support/oracle_extractor.hpp"

#include <algorithm>
#include <cmath>
#include <map>
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

Corpus small_corpus(std::uint64_t seed, int docs = 6) {
    SynthConfig cfg;
    cfg.num_docs = docs;
    cfg.rng_seed = seed;
    cfg.test_fraction = 1.0 / 3.0;
    cfg.words_per_doc = 90;
    cfg.targets_per_doc = 2;
    return make_synthetic_corpus(cfg);
}

// Fitness recomputed through the naive pipeline oracle and ordered-map
// match counting.
double reference_fitness(const Genome& g, const Corpus& corpus, int num_phrases,
                         const WordLists& lists) {
    auto params = decode_genome(g, num_phrases);
    long emitted = 0;
    long matches = 0;
    long docs = 0;
    std::map<std::string, std::string> texts(corpus.documents.begin(),
                                             corpus.documents.end());
    for (const auto& id : corpus.ids_in_split(Split::train)) {
        ++docs;
        auto phrases = oracle_extract(texts.at(id), params, lists);
        emitted += static_cast<long>(phrases.size());
        std::map<std::vector<std::string>, int> remaining;
        for (const auto& t : corpus.targets.at(id)) {
            remaining[stem_sequence(t, StemmerSpec::iterated())] += 1;
        }
        for (const auto& kp : phrases) {
            auto it =
                remaining.find(stem_sequence(kp.display, StemmerSpec::iterated()));
            if (it != remaining.end() && it->second > 0) {
                it->second -= 1;
                ++matches;
            }
        }
    }
    if (emitted == 0) return 0.0;
    double desired = static_cast<double>(docs) * num_phrases;
    double precision =
        static_cast<double>(matches) / static_cast<double>(emitted);
    double ratio = static_cast<double>(emitted) / desired;
    return precision * ratio * ratio;
}

Genome zero_genome() {
    Genome g;
    g.bits.fill(false);
    return g;
}

} // namespace

TEST_CASE("fitness equals the independent equation chain") {
    Corpus corpus = small_corpus(41);
    const WordLists& lists = default_lists();
    Rng rng(7);
    for (int i = 0; i < 12; ++i) {
        Genome g = random_genome(rng);
        double got = fitness(g, corpus, 7, lists);
        double want = reference_fitness(g, corpus, 7, lists);
        CHECK(got == doctest::Approx(want).epsilon(1e-9));
        CHECK(got >= 0.0);
        CHECK(got <= 1.0);
    }
}

TEST_CASE("fitness is zero when nothing can be emitted") {
    Corpus corpus;
    corpus.documents.emplace_back("only", "The of and to in a the of and.");
    corpus.targets["only"] = {"anything"};
    corpus.split["only"] = Split::train;
    auto ts = build_training_set(corpus, Split::train, default_lists());
    CHECK(fitness(zero_genome(), ts, 7, default_lists()) == 0.0);
}

TEST_CASE("fitness on an empty training set is an error") {
    TrainingSet ts;
    CHECK_THROWS_AS(fitness(zero_genome(), ts, 7, default_lists()),
                    std::runtime_error);
}

TEST_CASE("parallel fitness matches sequential") {
    Corpus corpus = small_corpus(43, 8);
    auto ts = build_training_set(corpus, Split::train, default_lists());
    Rng rng(3);
    for (int i = 0; i < 5; ++i) {
        Genome g = random_genome(rng);
        CHECK(fitness(g, ts, 7, default_lists(), 1) ==
              fitness(g, ts, 7, default_lists(), 4));
    }
}

TEST_CASE("selection with bias 1 is uniform") {
    Rng rng(123);
    const int pop = 50;
    const int draws = 100000;
    std::vector<int> counts(pop, 0);
    for (int i = 0; i < draws; ++i) {
        int idx = select_parent_index(pop, 1.0, rng);
        REQUIRE(idx >= 0);
        REQUIRE(idx < pop);
        counts[static_cast<std::size_t>(idx)]++;
    }
    for (int c : counts) {
        CHECK(c > 1600);
        CHECK(c < 2400);
    }
}

TEST_CASE("selection with bias 2 picks the best about twice the median") {
    Rng rng(321);
    const int pop = 50;
    const int draws = 200000;
    std::vector<int> counts(pop, 0);
    for (int i = 0; i < draws; ++i) {
        counts[static_cast<std::size_t>(select_parent_index(pop, 2.0, rng))]++;
    }
    double best = counts[0];
    double median = counts[25];
    CHECK(best / median > 1.7);
    CHECK(best / median < 2.4);
    // rank probabilities decrease with index
    CHECK(counts[0] > counts[15]);
    CHECK(counts[15] > counts[35]);
    CHECK(counts[35] > counts[49]);
}

TEST_CASE("crossover of identical parents returns the parent") {
    Rng rng(1);
    Genome a = random_genome(rng);
    Genome child = reduced_surrogate_crossover(a, a, rng);
    CHECK(child == a);
}

TEST_CASE("crossover cuts only at differing positions") {
    Genome a = zero_genome();
    Genome b = zero_genome();
    b.bits[2] = true;
    b.bits[3] = true;

    // cut at 2 copies b from bit 2 on; cut at 3 keeps a's bit 2
    Genome cut2 = b;
    Genome cut3 = zero_genome();
    cut3.bits[3] = true;

    Rng rng(17);
    bool saw_cut2 = false;
    bool saw_cut3 = false;
    for (int i = 0; i < 200; ++i) {
        Genome child = reduced_surrogate_crossover(a, b, rng);
        if (child == cut2) saw_cut2 = true;
        else if (child == cut3) saw_cut3 = true;
        else FAIL("child came from a cut outside the differing positions");
    }
    CHECK(saw_cut2);
    CHECK(saw_cut3);
}

TEST_CASE("crossover preserves every agreeing position") {
    Rng rng(29);
    for (int trial = 0; trial < 100; ++trial) {
        Genome a = random_genome(rng);
        Genome b = random_genome(rng);
        Genome child = reduced_surrogate_crossover(a, b, rng);
        for (int i = 0; i < kGenomeBits; ++i) {
            std::size_t at = static_cast<std::size_t>(i);
            if (a.bits[at] == b.bits[at]) {
                CHECK(child.bits[at] == a.bits[at]);
            }
        }
        // child must be a's prefix then b's suffix at some differing cut
        bool valid = false;
        for (int cut = 0; cut < kGenomeBits && !valid; ++cut) {
            if (a.bits[static_cast<std::size_t>(cut)] ==
                b.bits[static_cast<std::size_t>(cut)])
                continue;
            bool match = true;
            for (int i = 0; i < kGenomeBits; ++i) {
                std::size_t at = static_cast<std::size_t>(i);
                bool want = i < cut ? a.bits[at] : b.bits[at];
                if (child.bits[at] != want) {
                    match = false;
                    break;
                }
            }
            valid = match;
        }
        CHECK(valid);
    }
}

TEST_CASE("mutation is disabled for maximally different parents") {
    Genome a = zero_genome();
    Genome b = zero_genome();
    for (auto& bit : b.bits) bit = true;
    Rng rng(5);
    Genome child = adaptive_mutate(a, a, b, 0.9, rng);
    CHECK(child == a);
}

TEST_CASE("mutation rate for identical parents is the base rate") {
    Rng rng(77);
    const double rate = 0.2;
    const int runs = 10000;
    long flips = 0;
    Genome zero = zero_genome();
    for (int i = 0; i < runs; ++i) {
        Genome child = adaptive_mutate(zero, zero, zero, rate, rng);
        for (bool bit : child.bits) flips += bit ? 1 : 0;
    }
    // binomial(72 * runs, 0.2): mean 144000, sigma ~339; allow 4 sigma
    double expected = 72.0 * runs * rate;
    double sigma = std::sqrt(72.0 * runs * rate * (1.0 - rate));
    CHECK(std::fabs(static_cast<double>(flips) - expected) < 4.0 * sigma);
}

TEST_CASE("mutation scales with parent similarity") {
    Rng rng(88);
    Genome a = zero_genome();
    Genome b = zero_genome();
    for (int i = 0; i < 36; ++i) b.bits[static_cast<std::size_t>(i)] = true;
    const int runs = 10000;
    long flips = 0;
    Genome zero = zero_genome();
    for (int i = 0; i < runs; ++i) {
        Genome child = adaptive_mutate(zero, a, b, 0.2, rng);
        for (bool bit : child.bits) flips += bit ? 1 : 0;
    }
    // hamming 36 halves the rate: p = 0.1
    double expected = 72.0 * runs * 0.1;
    double sigma = std::sqrt(72.0 * runs * 0.1 * 0.9);
    CHECK(std::fabs(static_cast<double>(flips) - expected) < 4.0 * sigma);
}

TEST_CASE("trainer configuration is validated") {
    GaConfig cfg;
    CHECK_NOTHROW(cfg.validate());

    GaConfig bad = cfg;
    bad.population_size = 1;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = cfg;
    bad.trials = 10;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = cfg;
    bad.selection_bias = 2.5;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = cfg;
    bad.selection_bias = 0.5;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = cfg;
    bad.mutation_rate = 1.5;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = cfg;
    bad.num_phrases = 4;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = cfg;
    bad.num_phrases = 16;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = cfg;
    bad.jobs = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("training with zero steady-state steps returns the best of the initial population") {
    Corpus corpus = small_corpus(51);
    const WordLists& lists = default_lists();

    GaConfig cfg;
    cfg.population_size = 10;
    cfg.trials = 10;
    cfg.rng_seed = 2024;
    cfg.num_phrases = 7;

    TrainResult result = train(corpus, cfg, lists);

    // replay the initial population draw
    auto ts = build_training_set(corpus, Split::train, lists);
    Rng rng(cfg.rng_seed);
    Genome best;
    double best_fit = -1.0;
    for (int i = 0; i < cfg.population_size; ++i) {
        Genome g = random_genome(rng);
        double f = fitness(g, ts, cfg.num_phrases, lists);
        if (f > best_fit) {
            best_fit = f;
            best = g;
        }
    }
    CHECK(result.best_fitness == doctest::Approx(best_fit));
    CHECK(result.best_genome == best);
    CHECK(result.best_params.num_phrases == 7);
    CHECK(result.best_params.num_working == 35);
}

TEST_CASE("training is reproducible and its history is sound") {
    Corpus corpus = small_corpus(52);
    const WordLists& lists = default_lists();

    GaConfig cfg;
    cfg.population_size = 8;
    cfg.trials = 60;
    cfg.rng_seed = 7;

    std::vector<std::pair<long, double>> observed;
    TrainResult first = train(corpus, cfg, lists,
                              [&](long trial, double fit) {
                                  observed.emplace_back(trial, fit);
                              });
    TrainResult second = train(corpus, cfg, lists);

    CHECK(first.best_genome == second.best_genome);
    CHECK(first.best_fitness == second.best_fitness);
    CHECK(first.fitness_history == second.fitness_history);
    CHECK(observed == first.fitness_history);

    REQUIRE(!first.fitness_history.empty());
    double prev_fit = -1.0;
    long prev_trial = 0;
    for (const auto& [trial, fit] : first.fitness_history) {
        CHECK(trial > prev_trial);
        CHECK(trial <= cfg.trials);
        CHECK(fit > prev_fit);
        prev_trial = trial;
        prev_fit = fit;
    }
    CHECK(first.fitness_history.back().second ==
          doctest::Approx(first.best_fitness));
    CHECK(first.best_fitness >= 0.0);
    CHECK(first.best_fitness <= 1.0);

    ExtractorParams decoded = decode_genome(first.best_genome, cfg.num_phrases);
    CHECK(decoded.factor_two_one == first.best_params.factor_two_one);
    CHECK(decoded.stem_length == first.best_params.stem_length);
}

TEST_CASE("training on an empty train split is an error") {
    SynthConfig synth;
    synth.num_docs = 2;
    synth.rng_seed = 3;
    synth.test_fraction = 0.0;
    Corpus corpus = make_synthetic_corpus(synth);
    for (auto& [id, split] : corpus.split) split = Split::test;

    GaConfig cfg;
    cfg.population_size = 4;
    cfg.trials = 8;
    CHECK_THROWS_AS(train(corpus, cfg, default_lists()), std::runtime_error);
}
