#include "genex/candidates.hpp"

#include <unordered_map>

namespace genex {

std::string CandidatePhrase::joined() const {
    std::string out;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i > 0) out.push_back(' ');
        out += words[i];
    }
    return out;
}

std::vector<CandidatePhrase> enumerate_candidates(const std::vector<Token>& tokens,
                                                  const WordLists&) {
    std::vector<CandidatePhrase> out;
    std::unordered_map<std::string, std::size_t> index; // key -> position in out

    const std::size_t n = tokens.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!candidate_member(tokens[i])) continue;
        std::string key;
        std::string surface;
        std::vector<std::string> words;
        for (std::size_t len = 1; len <= 3; ++len) {
            const std::size_t at = i + len - 1;
            if (at >= n) break;
            const Token& t = tokens[at];
            if (len > 1 && (t.preceded_by_punct || !candidate_member(t))) break;
            if (len > 1) {
                key.push_back('\x1f');
                surface.push_back(' ');
            }
            key += t.lower;
            surface += t.surface;
            words.push_back(t.lower);
            if (len == 1 && t.lower.size() < 3) continue; // too short on its own

            auto it = index.find(key);
            if (it == index.end()) {
                index.emplace(key, out.size());
                CandidatePhrase cp;
                cp.words = words;
                cp.first_position = tokens[i].position;
                cp.frequency = 1;
                cp.surface_forms[surface] = 1;
                out.push_back(std::move(cp));
            } else {
                CandidatePhrase& cp = out[it->second];
                cp.frequency += 1;
                cp.surface_forms[surface] += 1;
                if (tokens[i].position < cp.first_position)
                    cp.first_position = tokens[i].position;
            }
        }
    }
    return out;
}

} // namespace genex
