#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "genex/bagging.hpp"
#include "genex/corpus.hpp"
#include "genex/evaluation.hpp"
#include "genex/extractor.hpp"
#include "genex/features.hpp"
#include "genex/genome.hpp"
#include "genex/params.hpp"
#include "genex/stemmer.hpp"
#include "genex/synth.hpp"
#include "genex/trainer.hpp"
#include "genex/wordlists.hpp"

#include <cstdint>
#include <string>
#include <vector>

#ifndef GENEX_DATA_DIR
#define GENEX_DATA_DIR "data/wordlists"
#endif

namespace py = pybind11;
using namespace genex;

PYBIND11_MODULE(_genex, m) {
    m.doc() = "keyphrase extraction toolkit";
    m.attr("DEFAULT_WORDLISTS_DIR") = GENEX_DATA_DIR;

    py::class_<WordLists>(m, "WordLists")
        .def("is_stop", &WordLists::is_stop)
        .def("is_common_verb", &WordLists::is_common_verb)
        .def("has_adjective_suffix", &WordLists::has_adjective_suffix);

    m.def("load_word_lists", &load_word_lists_dir, py::arg("dir"),
          "load stopwords.txt, common_verbs.txt, adjective_suffixes.txt and "
          "stop_phrases.txt from a directory");

    py::class_<ExtractorParams>(m, "ExtractorParams")
        .def(py::init<>())
        .def_readwrite("num_phrases", &ExtractorParams::num_phrases)
        .def_readwrite("num_working", &ExtractorParams::num_working)
        .def_readwrite("factor_two_one", &ExtractorParams::factor_two_one)
        .def_readwrite("factor_three_one", &ExtractorParams::factor_three_one)
        .def_readwrite("min_length_low_rank",
                       &ExtractorParams::min_length_low_rank)
        .def_readwrite("min_rank_low_length",
                       &ExtractorParams::min_rank_low_length)
        .def_readwrite("first_low_thresh", &ExtractorParams::first_low_thresh)
        .def_readwrite("first_high_thresh", &ExtractorParams::first_high_thresh)
        .def_readwrite("first_low_factor", &ExtractorParams::first_low_factor)
        .def_readwrite("first_high_factor", &ExtractorParams::first_high_factor)
        .def_readwrite("stem_length", &ExtractorParams::stem_length)
        .def_readwrite("suppress_proper", &ExtractorParams::suppress_proper)
        .def("validate", &ExtractorParams::validate)
        .def("with_num_phrases", &ExtractorParams::with_num_phrases,
             py::arg("k"));

    m.def(
        "load_params",
        [](const std::string& path) { return load_params(path).params; },
        py::arg("path"));
    m.def(
        "save_params",
        [](const ExtractorParams& params, const std::string& path,
           const std::string& corpus, double fitness, long trials,
           unsigned long seed) {
            ParamsFile file;
            file.params = params;
            file.metadata.corpus = corpus;
            file.metadata.fitness = fitness;
            file.metadata.trials = trials;
            file.metadata.seed = seed;
            save_params(file, path);
        },
        py::arg("params"), py::arg("path"), py::arg("corpus") = "",
        py::arg("fitness") = 0.0, py::arg("trials") = 0, py::arg("seed") = 0);

    m.def("lovins_stem", &lovins_stem, py::arg("word"));
    m.def("iterated_lovins_stem", &iterated_lovins_stem, py::arg("word"));
    m.def(
        "stem_sequence",
        [](const std::string& phrase) {
            return stem_sequence(phrase, StemmerSpec::iterated());
        },
        py::arg("phrase"), "iterated-Lovins stem per word of the phrase");

    py::class_<Keyphrase>(m, "Keyphrase")
        .def_readonly("display", &Keyphrase::display)
        .def_readonly("stems", &Keyphrase::stem_phrase)
        .def_readonly("rank", &Keyphrase::rank)
        .def_readonly("score", &Keyphrase::rank_score)
        .def_readonly("proper_noun", &Keyphrase::proper_noun)
        .def("__repr__", [](const Keyphrase& kp) {
            return "Keyphrase(" + std::to_string(kp.rank) + ", '" + kp.display +
                   "')";
        });

    m.def(
        "extract",
        [](const std::string& text, const ExtractorParams& params,
           const WordLists& lists) {
            py::gil_scoped_release release;
            return extract(text, params, lists);
        },
        py::arg("text"), py::arg("params") = ExtractorParams{},
        py::arg("lists"), "run the ten-step pipeline over one document");

    m.def("phrases_match", &phrases_match, py::arg("machine"),
          py::arg("human"));
    m.def("count_matches", &count_matches, py::arg("machine"),
          py::arg("human"));
    m.def("precision_at_k", &precision_at_k, py::arg("machine"),
          py::arg("human"), py::arg("k"));

    m.def(
        "decode_genome",
        [](const std::string& bits, int num_phrases) {
            return decode_genome(genome_from_string(bits), num_phrases);
        },
        py::arg("bits"), py::arg("num_phrases"),
        "decode a 72-character bit string into parameters");
    m.def(
        "random_genome",
        [](std::uint64_t seed) {
            Rng rng(seed);
            return genome_to_string(random_genome(rng));
        },
        py::arg("seed"));

    m.def(
        "train",
        [](const std::string& corpus_dir, long trials, int population, int phrases,
           double bias, double mutation, std::uint64_t seed, int jobs,
           const std::string& lists_dir) {
            WordLists lists = load_word_lists_dir(lists_dir);
            Corpus corpus = load_corpus(corpus_dir);
            GaConfig cfg;
            cfg.trials = trials;
            cfg.population_size = population;
            cfg.num_phrases = phrases;
            cfg.selection_bias = bias;
            cfg.mutation_rate = mutation;
            cfg.rng_seed = seed;
            cfg.jobs = jobs;
            TrainResult result;
            {
                py::gil_scoped_release release;
                result = train(corpus, cfg, lists);
            }
            py::dict out;
            out["best_fitness"] = result.best_fitness;
            out["best_genome"] = genome_to_string(result.best_genome);
            out["best_params"] = result.best_params;
            out["history"] = result.fitness_history;
            return out;
        },
        py::arg("corpus_dir"), py::arg("trials") = 1050,
        py::arg("population") = 50, py::arg("phrases") = 7,
        py::arg("bias") = 2.0, py::arg("mutation") = 0.2, py::arg("seed") = 0,
        py::arg("jobs") = 1, py::arg("lists_dir") = GENEX_DATA_DIR,
        "tune the ten trainable parameters on the corpus train split");

    m.def(
        "evaluate",
        [](const std::string& corpus_dir, const ExtractorParams& params,
           const std::vector<int>& ks, const std::string& split, int jobs,
           const std::string& lists_dir) {
            WordLists lists = load_word_lists_dir(lists_dir);
            Corpus corpus = load_corpus(corpus_dir);
            Split s = split == "train" ? Split::train : Split::test;
            EvalReport report;
            {
                py::gil_scoped_release release;
                report = evaluate_corpus(corpus, params, lists, ks, s, jobs);
            }
            return report_to_tsv(report);
        },
        py::arg("corpus_dir"), py::arg("params") = ExtractorParams{},
        py::arg("ks") = default_eval_ks(), py::arg("split") = "test",
        py::arg("jobs") = 1, py::arg("lists_dir") = GENEX_DATA_DIR,
        "score one corpus split, returning the TSV report");

    m.def(
        "make_synthetic_corpus",
        [](const std::string& out_dir, int docs, std::uint64_t seed,
           int words_per_doc, int targets_per_doc, double test_fraction) {
            SynthConfig cfg;
            cfg.num_docs = docs;
            cfg.rng_seed = seed;
            cfg.words_per_doc = words_per_doc;
            cfg.targets_per_doc = targets_per_doc;
            cfg.test_fraction = test_fraction;
            write_synthetic_corpus(make_synthetic_corpus(cfg), out_dir);
        },
        py::arg("out_dir"), py::arg("docs") = 30, py::arg("seed") = 0,
        py::arg("words_per_doc") = 220, py::arg("targets_per_doc") = 3,
        py::arg("test_fraction") = 1.0 / 3.0,
        "write a planted-keyphrase corpus to a directory");

    m.def(
        "feature_vectors_tsv",
        [](const std::string& text, const std::vector<std::string>& targets,
           const std::string& lists_dir) {
            WordLists lists = load_word_lists_dir(lists_dir);
            return feature_vectors_to_tsv(
                build_feature_vectors(text, targets, lists));
        },
        py::arg("text"), py::arg("targets") = std::vector<std::string>{},
        py::arg("lists_dir") = GENEX_DATA_DIR,
        "learning features for one document as TSV");
}
