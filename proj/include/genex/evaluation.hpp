#pragma once

#include "genex/corpus.hpp"
#include "genex/params.hpp"
#include "genex/wordlists.hpp"

#include <string>
#include <vector>

namespace genex {

struct DocEval {
    std::string doc_id;
    int k = 0;
    int emitted = 0;
    int matches = 0;
    double precision = 0.0;
};

struct CorpusSummary {
    int k = 0;
    double mean = 0.0;
    double stddev = 0.0; // population standard deviation
};

struct EvalReport {
    std::vector<DocEval> per_doc;        // doc_id order, then k order
    std::vector<CorpusSummary> per_corpus; // one row per k
};

// True iff the two phrases have the same ordered iterated-Lovins stem
// sequence.
bool phrases_match(const std::string& machine, const std::string& human);

// Maximum one-to-one matching size; equals the multiset intersection of
// stem sequences, so duplicate machine phrases credit one target at most.
int count_matches(const std::vector<std::string>& machine,
                  const std::vector<std::string>& human);

// matches / k. The denominator is the desired count, never the emitted
// count, so emitting fewer phrases cannot inflate the score.
double precision_at_k(const std::vector<std::string>& machine,
                      const std::vector<std::string>& human, int k);

std::vector<int> default_eval_ks();

// Extract from every document in the chosen split at each cutoff in ks
// (num_phrases set to k per run) and score against the targets.
EvalReport evaluate_corpus(const Corpus& corpus, const ExtractorParams& params,
                           const WordLists& lists,
                           const std::vector<int>& ks = default_eval_ks(),
                           Split split = Split::test, int jobs = 1);

// Tab-separated rows (doc_id, k, emitted, matches, precision) followed
// by a mean +/- stddev summary block per k.
std::string report_to_tsv(const EvalReport& report);

} // namespace genex
