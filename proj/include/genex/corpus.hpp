#pragma once

#include <map>
#include <string>
#include <vector>

namespace genex {

enum class Split { train, test };

// Optional per-length-band parameter routing, read from manifest
// directives. Documents shorter than word_boundary words use
// short_params_path, the rest long_params_path.
struct LengthRouting {
    int word_boundary = 3000;
    std::string short_params_path;
    std::string long_params_path;
    bool configured() const {
        return !short_params_path.empty() || !long_params_path.empty();
    }
};

struct Corpus {
    std::vector<std::pair<std::string, std::string>> documents; // (doc_id, raw_text)
    std::map<std::string, std::vector<std::string>> targets;    // doc_id -> keyphrases
    std::map<std::string, Split> split;
    LengthRouting routing;

    std::vector<std::string> ids_in_split(Split s) const;
};

// Loads a flat directory of <id>.txt documents with sibling <id>.key
// target files (one keyphrase per line). An optional `manifest` file
// assigns splits with `id<TAB>{train|test}` lines; @params-short,
// @params-long and @length-boundary directives configure routing.
// Documents without a manifest entry default to the train split.
Corpus load_corpus(const std::string& root_path);

// Minimal preprocessing helper: removes <...> tag spans from text.
std::string strip_tags(const std::string& text);

} // namespace genex
