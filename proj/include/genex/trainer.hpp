#pragma once

#include "genex/corpus.hpp"
#include "genex/extractor.hpp"
#include "genex/genome.hpp"
#include "genex/params.hpp"
#include "genex/rng.hpp"
#include "genex/wordlists.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace genex {

struct GaConfig {
    int population_size = 50;
    long trials = 1050; // total fitness evaluations, initial population included
    double selection_bias = 2.0;
    double mutation_rate = 0.2;
    std::uint64_t rng_seed = 0;
    int num_phrases = 7;
    int jobs = 1;

    void validate() const;
};

struct TrainResult {
    Genome best_genome;
    ExtractorParams best_params;
    double best_fitness = 0.0;
    // (trial index, best-so-far fitness), one entry per improvement
    std::vector<std::pair<long, double>> fitness_history;
};

// Documents of one split prepared once, with target stem sequences.
struct TrainingSet {
    std::vector<PreparedDocument> docs;
    std::vector<std::vector<std::string>> target_keys; // per-doc stem keys
};

TrainingSet build_training_set(const Corpus& corpus, Split split,
                               const WordLists& lists);

// precision x penalty: (matches / emitted) x (emitted / desired)^2 with
// desired = num_docs x num_phrases; zero when nothing is emitted.
// Matching uses iterated-Lovins stem sequences.
double fitness(const Genome& g, const TrainingSet& training, int num_phrases,
               const WordLists& lists, int jobs = 1);
double fitness(const Genome& g, const Corpus& training_corpus, int num_phrases,
               const WordLists& lists);

// Linear-rank selection over a population sorted best-first.
int select_parent_index(int population_size, double bias, Rng& rng);

// Crossover restricted to positions where the parents differ; the child
// copies a before the cut and b from the cut on. Identical parents
// reproduce unchanged.
Genome reduced_surrogate_crossover(const Genome& a, const Genome& b, Rng& rng);

// Per-bit flip probability base_rate x (1 - hamming(a,b)/72): similar
// parents mutate more.
Genome adaptive_mutate(const Genome& child, const Genome& a, const Genome& b,
                       double base_rate, Rng& rng);

using TrainObserver =
    std::function<void(long trial, double best_fitness)>;

// Steady-state loop: evaluate a random population, then one child per
// step replaces the current least-fit individual until the trial budget
// is spent. Duplicate genomes hit a fitness cache but still consume
// trials. Reproducible bit-exactly from cfg.rng_seed.
TrainResult train(const Corpus& corpus, const GaConfig& cfg,
                  const WordLists& lists,
                  const TrainObserver& on_improvement = nullptr);

} // namespace genex
