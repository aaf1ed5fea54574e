#include "genex/trainer.hpp"

#include "genex/stemmer.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace genex {

namespace {

std::string phrase_stem_key(const Keyphrase& kp, const PreparedDocument& doc) {
    std::string key;
    std::string word;
    auto add = [&](const std::string& w) {
        auto it = doc.word_stems.find(w);
        key += it != doc.word_stems.end() ? it->second : iterated_lovins_stem(w);
        key += '\x1f';
    };
    for (char c : kp.display) {
        if (c == ' ') {
            if (!word.empty()) add(word);
            word.clear();
        } else {
            word += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        }
    }
    if (!word.empty()) add(word);
    return key;
}

std::string target_stem_key(const std::string& phrase) {
    auto stems = stem_sequence(phrase, StemmerSpec::iterated());
    std::string key;
    for (const auto& s : stems) {
        key += s;
        key += '\x1f';
    }
    return key;
}

struct DocCounts {
    int emitted = 0;
    int matches = 0;
};

DocCounts evaluate_doc(const PreparedDocument& doc,
                       const std::vector<std::string>& target_keys,
                       const ExtractorParams& params, const WordLists& lists) {
    auto out = extract_prepared(doc, params, lists);
    std::map<std::string, int> remaining;
    for (const auto& key : target_keys) remaining[key] += 1;
    DocCounts counts;
    counts.emitted = static_cast<int>(out.size());
    for (const auto& kp : out) {
        auto it = remaining.find(phrase_stem_key(kp, doc));
        if (it != remaining.end() && it->second > 0) {
            it->second -= 1;
            ++counts.matches;
        }
    }
    return counts;
}

struct Individual {
    Genome genome;
    double fit = 0.0;
    long created = 0;
};

} // namespace

void GaConfig::validate() const {
    if (population_size < 2)
        throw std::invalid_argument("trainer: population_size must be >= 2");
    if (trials < population_size)
        throw std::invalid_argument("trainer: trials must be >= population_size");
    if (selection_bias < 1.0 || selection_bias > 2.0)
        throw std::invalid_argument("trainer: selection_bias must be in [1,2]");
    if (mutation_rate < 0.0 || mutation_rate > 1.0)
        throw std::invalid_argument("trainer: mutation_rate must be in [0,1]");
    if (num_phrases < 5 || num_phrases > 15)
        throw std::invalid_argument("trainer: num_phrases must be in [5,15]");
    if (jobs < 1) throw std::invalid_argument("trainer: jobs must be >= 1");
}

TrainingSet build_training_set(const Corpus& corpus, Split split,
                               const WordLists& lists) {
    TrainingSet ts;
    std::map<std::string, const std::string*> text_by_id;
    for (const auto& [id, text] : corpus.documents) text_by_id[id] = &text;
    for (const auto& id : corpus.ids_in_split(split)) {
        ts.docs.push_back(prepare_document(*text_by_id.at(id), lists));
        std::vector<std::string> keys;
        for (const auto& phrase : corpus.targets.at(id))
            keys.push_back(target_stem_key(phrase));
        ts.target_keys.push_back(std::move(keys));
    }
    return ts;
}

double fitness(const Genome& g, const TrainingSet& training, int num_phrases,
               const WordLists& lists, int jobs) {
    if (training.docs.empty())
        throw std::runtime_error("fitness: empty training set");
    auto params = decode_genome(g, num_phrases);

    std::vector<DocCounts> counts(training.docs.size());
    auto eval_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
            counts[i] = evaluate_doc(training.docs[i], training.target_keys[i],
                                     params, lists);
    };
    if (jobs <= 1 || training.docs.size() <= 1) {
        eval_range(0, training.docs.size());
    } else {
        std::size_t workers = std::min<std::size_t>(
            static_cast<std::size_t>(jobs), training.docs.size());
        std::vector<std::thread> pool;
        std::size_t per = (training.docs.size() + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            std::size_t begin = w * per;
            std::size_t end = std::min(begin + per, training.docs.size());
            if (begin >= end) break;
            pool.emplace_back(eval_range, begin, end);
        }
        for (auto& t : pool) t.join();
    }

    long emitted = 0, matches = 0;
    for (const auto& c : counts) {
        emitted += c.emitted;
        matches += c.matches;
    }
    if (emitted == 0) return 0.0;
    double desired = static_cast<double>(training.docs.size()) *
                     static_cast<double>(num_phrases);
    double precision = static_cast<double>(matches) / static_cast<double>(emitted);
    double penalty = (static_cast<double>(emitted) / desired) *
                     (static_cast<double>(emitted) / desired);
    return precision * penalty;
}

double fitness(const Genome& g, const Corpus& training_corpus, int num_phrases,
               const WordLists& lists) {
    auto ts = build_training_set(training_corpus, Split::train, lists);
    return fitness(g, ts, num_phrases, lists);
}

int select_parent_index(int population_size, double bias, Rng& rng) {
    double u = rng.next_unit();
    double x;
    if (bias <= 1.0) {
        x = u * population_size;
    } else {
        x = population_size *
            (bias - std::sqrt(bias * bias - 4.0 * (bias - 1.0) * u)) /
            (2.0 * (bias - 1.0));
    }
    int idx = static_cast<int>(x);
    if (idx < 0) idx = 0;
    if (idx >= population_size) idx = population_size - 1;
    return idx;
}

Genome reduced_surrogate_crossover(const Genome& a, const Genome& b, Rng& rng) {
    std::vector<int> diffs;
    for (int i = 0; i < kGenomeBits; ++i)
        if (a.bits[static_cast<std::size_t>(i)] !=
            b.bits[static_cast<std::size_t>(i)])
            diffs.push_back(i);
    if (diffs.empty()) return a;
    int cut = diffs[rng.next_below(diffs.size())];
    Genome child = a;
    for (int i = cut; i < kGenomeBits; ++i)
        child.bits[static_cast<std::size_t>(i)] =
            b.bits[static_cast<std::size_t>(i)];
    return child;
}

Genome adaptive_mutate(const Genome& child, const Genome& a, const Genome& b,
                       double base_rate, Rng& rng) {
    int hamming = 0;
    for (int i = 0; i < kGenomeBits; ++i)
        if (a.bits[static_cast<std::size_t>(i)] !=
            b.bits[static_cast<std::size_t>(i)])
            ++hamming;
    double p = base_rate *
               (1.0 - static_cast<double>(hamming) /
                          static_cast<double>(kGenomeBits));
    Genome out = child;
    for (auto& bit : out.bits)
        if (rng.next_unit() < p) bit = !bit;
    return out;
}

TrainResult train(const Corpus& corpus, const GaConfig& cfg,
                  const WordLists& lists, const TrainObserver& on_improvement) {
    cfg.validate();
    auto training = build_training_set(corpus, Split::train, lists);
    if (training.docs.empty())
        throw std::runtime_error("trainer: training split is empty");

    Rng rng(cfg.rng_seed);
    std::unordered_map<std::string, double> cache;
    long evals = 0;
    auto evaluate = [&](const Genome& g) {
        ++evals;
        auto key = genome_to_string(g);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        double f = fitness(g, training, cfg.num_phrases, lists, cfg.jobs);
        cache.emplace(std::move(key), f);
        return f;
    };

    std::vector<Individual> pop;
    pop.reserve(static_cast<std::size_t>(cfg.population_size));
    TrainResult result;
    long creations = 0;
    bool have_best = false;
    auto consider_best = [&](const Individual& ind) {
        if (!have_best || ind.fit > result.best_fitness) {
            have_best = true;
            result.best_genome = ind.genome;
            result.best_fitness = ind.fit;
            result.fitness_history.emplace_back(evals, ind.fit);
            if (on_improvement) on_improvement(evals, ind.fit);
        }
    };

    for (int i = 0; i < cfg.population_size; ++i) {
        Individual ind;
        ind.genome = random_genome(rng);
        ind.fit = evaluate(ind.genome);
        ind.created = creations++;
        pop.push_back(ind);
        consider_best(ind);
    }

    std::vector<std::size_t> order(pop.size());
    while (evals < cfg.trials) {
        std::iota(order.begin(), order.end(), 0u);
        std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
            if (pop[x].fit != pop[y].fit) return pop[x].fit > pop[y].fit;
            return x < y;
        });
        const Genome& pa =
            pop[order[static_cast<std::size_t>(select_parent_index(
                cfg.population_size, cfg.selection_bias, rng))]].genome;
        const Genome& pb =
            pop[order[static_cast<std::size_t>(select_parent_index(
                cfg.population_size, cfg.selection_bias, rng))]].genome;

        Individual child;
        child.genome = adaptive_mutate(reduced_surrogate_crossover(pa, pb, rng),
                                       pa, pb, cfg.mutation_rate, rng);
        child.fit = evaluate(child.genome);
        child.created = creations++;

        std::size_t victim = 0;
        for (std::size_t i = 1; i < pop.size(); ++i)
            if (pop[i].fit < pop[victim].fit) victim = i;
        pop[victim] = child;
        consider_best(child);
    }

    result.best_params = decode_genome(result.best_genome, cfg.num_phrases);
    return result;
}

} // namespace genex
