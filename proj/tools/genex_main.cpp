#include <CLI11.hpp>

#include "genex/bagging.hpp"
#include "genex/corpus.hpp"
#include "genex/evaluation.hpp"
#include "genex/extractor.hpp"
#include "genex/features.hpp"
#include "genex/params.hpp"
#include "genex/synth.hpp"
#include "genex/trainer.hpp"
#include "genex/wordlists.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#ifndef GENEX_DATA_DIR
#define GENEX_DATA_DIR "data/wordlists"
#endif

namespace {

using namespace genex;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
            line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

void emit(const std::string& data, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << data;
    } else {
        write_file(out_path, data);
    }
}

// Pools per-document vectors from one split; targets label the classes.
std::vector<FeatureVector> split_vectors(const Corpus& corpus, Split split,
                                         const WordLists& lists) {
    std::map<std::string, const std::string*> texts;
    for (const auto& [id, text] : corpus.documents) texts[id] = &text;
    std::vector<FeatureVector> pooled;
    for (const auto& id : corpus.ids_in_split(split)) {
        auto vectors =
            build_feature_vectors(*texts.at(id), corpus.targets.at(id), lists);
        pooled.insert(pooled.end(), vectors.begin(), vectors.end());
    }
    return pooled;
}

EvalReport score_baseline(const Corpus& corpus, const BaggedEnsemble& ensemble,
                          const std::vector<int>& ks, const WordLists& lists) {
    auto ids = corpus.ids_in_split(Split::test);
    if (ids.empty())
        throw std::runtime_error("evaluate: no documents in the requested split");
    std::map<std::string, const std::string*> texts;
    for (const auto& [id, text] : corpus.documents) texts[id] = &text;

    EvalReport report;
    std::map<int, std::vector<double>> by_k;
    for (const auto& id : ids) {
        const auto& targets = corpus.targets.at(id);
        auto vectors = build_feature_vectors(*texts.at(id), targets, lists);
        for (int k : ks) {
            auto ranked = rank_phrases(ensemble, vectors, k);
            DocEval row;
            row.doc_id = id;
            row.k = k;
            row.emitted = static_cast<int>(ranked.size());
            row.matches = count_matches(ranked, targets);
            row.precision = precision_at_k(ranked, targets, k);
            by_k[k].push_back(row.precision);
            report.per_doc.push_back(std::move(row));
        }
    }
    for (int k : ks) {
        const auto& values = by_k.at(k);
        double mean = 0.0;
        for (double v : values) mean += v;
        mean /= static_cast<double>(values.size());
        double var = 0.0;
        for (double v : values) var += (v - mean) * (v - mean);
        var /= static_cast<double>(values.size());
        report.per_corpus.push_back({k, mean, std::sqrt(var)});
    }
    return report;
}

int cmd_extract(const std::string& input, const std::string& params_path,
                std::optional<int> phrases, const std::string& lists_dir) {
    WordLists lists = load_word_lists_dir(lists_dir);
    ExtractorParams params;
    if (!params_path.empty()) params = load_params(params_path).params;
    if (phrases) params = params.with_num_phrases(*phrases);
    std::string text = read_file(input);
    for (const auto& kp : extract(text, params, lists)) {
        std::cout << kp.display << '\n';
    }
    return 0;
}

int cmd_train(const std::string& corpus_dir, const GaConfig& cfg,
              const std::string& out_path, std::string history_path,
              const std::string& lists_dir) {
    WordLists lists = load_word_lists_dir(lists_dir);
    Corpus corpus = load_corpus(corpus_dir);
    std::cerr << "training on " << corpus.ids_in_split(Split::train).size()
              << " documents, " << cfg.trials << " trials\n";

    TrainResult result =
        train(corpus, cfg, lists, [](long trial, double fit) {
            std::fprintf(stderr, "trial %ld: best fitness %.6f\n", trial, fit);
        });

    ParamsFile file;
    file.params = result.best_params;
    file.metadata.corpus = corpus_dir;
    file.metadata.fitness = result.best_fitness;
    file.metadata.trials = cfg.trials;
    file.metadata.seed = cfg.rng_seed;
    save_params(file, out_path);

    if (history_path.empty()) history_path = out_path + ".history";
    std::string history;
    char line[64];
    for (const auto& [trial, fit] : result.fitness_history) {
        std::snprintf(line, sizeof line, "%ld\t%.9f\n", trial, fit);
        history += line;
    }
    write_file(history_path, history);

    std::fprintf(stdout, "%.9f\n", result.best_fitness);
    return 0;
}

int cmd_eval(const std::string& corpus_dir, const std::string& params_path,
             const std::vector<int>& ks, const std::string& split_name,
             int jobs, const std::string& out_path,
             const std::string& lists_dir) {
    WordLists lists = load_word_lists_dir(lists_dir);
    Corpus corpus = load_corpus(corpus_dir);
    ExtractorParams params;
    if (!params_path.empty()) params = load_params(params_path).params;
    Split split = split_name == "train" ? Split::train : Split::test;
    EvalReport report = evaluate_corpus(corpus, params, lists, ks, split, jobs);
    emit(report_to_tsv(report), out_path);
    return 0;
}

int cmd_baseline_train(const std::string& corpus_dir, const BaggingConfig& cfg,
                       const std::string& out_path,
                       const std::string& lists_dir) {
    WordLists lists = load_word_lists_dir(lists_dir);
    Corpus corpus = load_corpus(corpus_dir);
    auto vectors = split_vectors(corpus, Split::train, lists);
    if (vectors.empty())
        throw std::runtime_error("baseline-train: no training vectors");
    int positives = 0;
    for (const auto& fv : vectors) positives += fv.label;
    std::cerr << "training " << cfg.n_trees << " trees on " << vectors.size()
              << " vectors (" << positives << " positive)\n";
    BaggedEnsemble ensemble = train_ensemble(vectors, cfg);
    save_ensemble(ensemble, out_path);
    std::cerr << "model written to " << out_path << '\n';
    return 0;
}

int cmd_baseline_eval(const std::string& corpus_dir,
                      const std::string& model_path, const std::vector<int>& ks,
                      const std::string& out_path,
                      const std::string& lists_dir) {
    WordLists lists = load_word_lists_dir(lists_dir);
    Corpus corpus = load_corpus(corpus_dir);
    BaggedEnsemble ensemble = load_ensemble(model_path);
    EvalReport report = score_baseline(corpus, ensemble, ks, lists);
    emit(report_to_tsv(report), out_path);
    return 0;
}

int cmd_features(const std::string& input, const std::string& key_path,
                 const std::string& out_path, const std::string& lists_dir) {
    WordLists lists = load_word_lists_dir(lists_dir);
    std::vector<std::string> targets;
    if (!key_path.empty()) targets = read_lines(key_path);
    auto vectors = build_feature_vectors(read_file(input), targets, lists);
    emit(feature_vectors_to_tsv(vectors), out_path);
    return 0;
}

int cmd_synth(const SynthConfig& cfg, const std::string& out_dir) {
    Corpus corpus = make_synthetic_corpus(cfg);
    write_synthetic_corpus(corpus, out_dir);
    std::cerr << "wrote " << corpus.documents.size() << " documents to "
              << out_dir << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"keyphrase extraction toolkit"};
    app.require_subcommand(1);
    std::string lists_dir = GENEX_DATA_DIR;
    app.add_option("--lists", lists_dir, "word-list directory")
        ->capture_default_str();

    auto* extract_cmd = app.add_subcommand("extract", "extract keyphrases");
    std::string extract_input, extract_params;
    int extract_phrases = 0;
    extract_cmd->add_option("--input", extract_input, "document path")
        ->required();
    extract_cmd->add_option("--params", extract_params, "parameter file");
    auto* phrases_opt =
        extract_cmd->add_option("--phrases", extract_phrases, "output count")
            ->check(CLI::Range(5, 15));

    auto* train_cmd = app.add_subcommand("train", "tune parameters");
    std::string train_corpus, train_out, train_history;
    GaConfig ga;
    train_cmd->add_option("--corpus", train_corpus, "corpus directory")
        ->required();
    train_cmd->add_option("--out", train_out, "output parameter file")
        ->required();
    train_cmd->add_option("--history", train_history, "fitness history path");
    train_cmd->add_option("--phrases", ga.num_phrases, "output count")
        ->check(CLI::Range(5, 15))
        ->capture_default_str();
    train_cmd->add_option("--trials", ga.trials, "total fitness evaluations")
        ->capture_default_str();
    train_cmd->add_option("--pop", ga.population_size, "population size")
        ->capture_default_str();
    train_cmd->add_option("--bias", ga.selection_bias, "selection bias")
        ->capture_default_str();
    train_cmd
        ->add_option("--mutation", ga.mutation_rate, "base mutation rate")
        ->capture_default_str();
    train_cmd->add_option("--seed", ga.rng_seed, "random seed")
        ->capture_default_str();
    train_cmd->add_option("--jobs", ga.jobs, "parallel document workers")
        ->capture_default_str();

    auto* eval_cmd = app.add_subcommand("eval", "score a corpus split");
    std::string eval_corpus, eval_params, eval_out;
    std::string eval_split = "test";
    std::vector<int> eval_ks = default_eval_ks();
    int eval_jobs = 1;
    eval_cmd->add_option("--corpus", eval_corpus, "corpus directory")
        ->required();
    eval_cmd->add_option("--params", eval_params, "parameter file");
    eval_cmd->add_option("--ks", eval_ks, "cutoffs")
        ->delimiter(',')
        ->check(CLI::Range(5, 15));
    eval_cmd->add_option("--split", eval_split, "train or test")
        ->check(CLI::IsMember({"train", "test"}))
        ->capture_default_str();
    eval_cmd->add_option("--jobs", eval_jobs, "parallel document workers")
        ->capture_default_str();
    eval_cmd->add_option("--out", eval_out, "write TSV here instead of stdout");

    auto* btrain_cmd =
        app.add_subcommand("baseline-train", "train the bagged-tree baseline");
    std::string btrain_corpus, btrain_out;
    BaggingConfig bagging;
    btrain_cmd->add_option("--corpus", btrain_corpus, "corpus directory")
        ->required();
    btrain_cmd->add_option("--out", btrain_out, "output model file")
        ->required();
    btrain_cmd->add_option("--trees", bagging.n_trees, "ensemble size")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    btrain_cmd->add_option("--rate", bagging.sample_rate, "sample rate")
        ->capture_default_str();
    btrain_cmd
        ->add_option("--fraction", bagging.class1_fraction,
                     "class-1 sample fraction")
        ->capture_default_str();
    btrain_cmd->add_option("--seed", bagging.rng_seed, "random seed")
        ->capture_default_str();

    auto* beval_cmd =
        app.add_subcommand("baseline-eval", "score the baseline on a corpus");
    std::string beval_corpus, beval_model, beval_out;
    std::vector<int> beval_ks = default_eval_ks();
    beval_cmd->add_option("--corpus", beval_corpus, "corpus directory")
        ->required();
    beval_cmd->add_option("--model", beval_model, "model file")->required();
    beval_cmd->add_option("--ks", beval_ks, "cutoffs")
        ->delimiter(',')
        ->check(CLI::Range(5, 15));
    beval_cmd->add_option("--out", beval_out,
                          "write TSV here instead of stdout");

    auto* features_cmd =
        app.add_subcommand("features", "dump feature vectors for a document");
    std::string features_input, features_key, features_out;
    features_cmd->add_option("--input", features_input, "document path")
        ->required();
    features_cmd->add_option("--key", features_key,
                             "target keyphrases, one per line");
    features_cmd->add_option("--out", features_out,
                             "write TSV here instead of stdout");

    auto* synth_cmd =
        app.add_subcommand("synth", "generate a synthetic corpus");
    std::string synth_out;
    SynthConfig synth;
    synth_cmd->add_option("--out", synth_out, "output directory")->required();
    synth_cmd->add_option("--docs", synth.num_docs, "document count")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    synth_cmd->add_option("--seed", synth.rng_seed, "random seed")
        ->capture_default_str();
    synth_cmd->add_option("--words", synth.words_per_doc, "words per document")
        ->capture_default_str();
    synth_cmd
        ->add_option("--targets-per-doc", synth.targets_per_doc,
                     "planted keyphrases per document")
        ->capture_default_str();
    synth_cmd
        ->add_option("--test-fraction", synth.test_fraction,
                     "share of documents in the test split")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(extract_cmd)) {
            std::optional<int> phrases;
            if (phrases_opt->count()) phrases = extract_phrases;
            return cmd_extract(extract_input, extract_params, phrases,
                               lists_dir);
        }
        if (app.got_subcommand(train_cmd)) {
            return cmd_train(train_corpus, ga, train_out, train_history,
                             lists_dir);
        }
        if (app.got_subcommand(eval_cmd)) {
            return cmd_eval(eval_corpus, eval_params, eval_ks, eval_split,
                            eval_jobs, eval_out, lists_dir);
        }
        if (app.got_subcommand(btrain_cmd)) {
            return cmd_baseline_train(btrain_corpus, bagging, btrain_out,
                                      lists_dir);
        }
        if (app.got_subcommand(beval_cmd)) {
            return cmd_baseline_eval(beval_corpus, beval_model, beval_ks,
                                     beval_out, lists_dir);
        }
        if (app.got_subcommand(features_cmd)) {
            return cmd_features(features_input, features_key, features_out,
                                lists_dir);
        }
        if (app.got_subcommand(synth_cmd)) {
            return cmd_synth(synth, synth_out);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
