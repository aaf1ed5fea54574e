#include "genex/evaluation.hpp"

#include "genex/extractor.hpp"
#include "genex/stemmer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <stdexcept>
#include <thread>

namespace genex {

namespace {

std::string stem_key(const std::string& phrase) {
    auto stems = stem_sequence(phrase, StemmerSpec::iterated());
    std::string key;
    for (const auto& s : stems) {
        key += s;
        key += '\x1f';
    }
    return key;
}

void run_jobs(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace

bool phrases_match(const std::string& machine, const std::string& human) {
    return stem_sequence(machine, StemmerSpec::iterated()) ==
           stem_sequence(human, StemmerSpec::iterated());
}

int count_matches(const std::vector<std::string>& machine,
                  const std::vector<std::string>& human) {
    std::map<std::string, int> targets;
    for (const auto& h : human) targets[stem_key(h)] += 1;
    int matches = 0;
    for (const auto& m : machine) {
        auto it = targets.find(stem_key(m));
        if (it != targets.end() && it->second > 0) {
            it->second -= 1;
            ++matches;
        }
    }
    return matches;
}

double precision_at_k(const std::vector<std::string>& machine,
                      const std::vector<std::string>& human, int k) {
    if (k < 1) throw std::invalid_argument("precision_at_k: k must be >= 1");
    return static_cast<double>(count_matches(machine, human)) /
           static_cast<double>(k);
}

std::vector<int> default_eval_ks() { return {5, 7, 9, 11, 13, 15}; }

EvalReport evaluate_corpus(const Corpus& corpus, const ExtractorParams& params,
                           const WordLists& lists, const std::vector<int>& ks,
                           Split split, int jobs) {
    auto ids = corpus.ids_in_split(split);
    if (ids.empty())
        throw std::runtime_error("evaluate: no documents in the requested split");
    if (ks.empty()) throw std::invalid_argument("evaluate: no cutoffs given");
    for (int k : ks)
        if (k < 1) throw std::invalid_argument("evaluate: k must be >= 1");

    std::map<std::string, const std::string*> text_by_id;
    for (const auto& [id, text] : corpus.documents) text_by_id[id] = &text;

    std::vector<std::vector<DocEval>> rows(ids.size());
    run_jobs(ids.size(), jobs, [&](std::size_t i) {
        const auto& id = ids[i];
        auto doc = prepare_document(*text_by_id.at(id), lists);
        const auto& targets = corpus.targets.at(id);
        for (int k : ks) {
            auto out = extract_prepared(doc, params.with_num_phrases(k), lists);
            std::vector<std::string> machine;
            machine.reserve(out.size());
            for (const auto& kp : out) machine.push_back(kp.display);
            DocEval row;
            row.doc_id = id;
            row.k = k;
            row.emitted = static_cast<int>(machine.size());
            row.matches = count_matches(machine, targets);
            row.precision = static_cast<double>(row.matches) / k;
            rows[i].push_back(row);
        }
    });

    EvalReport report;
    for (auto& doc_rows : rows)
        for (auto& row : doc_rows) report.per_doc.push_back(std::move(row));

    for (int k : ks) {
        std::vector<double> ps;
        for (const auto& row : report.per_doc)
            if (row.k == k) ps.push_back(row.precision);
        double mean = 0.0;
        for (double p : ps) mean += p;
        mean /= static_cast<double>(ps.size());
        double var = 0.0;
        for (double p : ps) var += (p - mean) * (p - mean);
        var /= static_cast<double>(ps.size());
        report.per_corpus.push_back({k, mean, std::sqrt(var)});
    }
    return report;
}

std::string report_to_tsv(const EvalReport& report) {
    std::string out = "doc_id\tk\temitted\tmatches\tprecision\n";
    char buf[64];
    for (const auto& row : report.per_doc) {
        std::snprintf(buf, sizeof(buf), "%.3f", row.precision);
        out += row.doc_id + "\t" + std::to_string(row.k) + "\t" +
               std::to_string(row.emitted) + "\t" + std::to_string(row.matches) +
               "\t" + buf + "\n";
    }
    out += "\nk\tmean_precision\tstddev\n";
    for (const auto& s : report.per_corpus) {
        char line[96];
        std::snprintf(line, sizeof(line), "%d\t%.3f\t%.3f\n", s.k, s.mean,
                      s.stddev);
        out += line;
    }
    return out;
}

} // namespace genex
