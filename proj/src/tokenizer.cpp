#include "genex/tokenizer.hpp"

namespace genex {

namespace {

inline bool word_char(unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c >= 0x80;
}

inline bool space_char(unsigned char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
           c == '\v';
}

inline char fold(char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

} // namespace

std::vector<Token> tokenize(const std::string& raw_text, const WordLists& lists) {
    std::vector<Token> out;
    const std::size_t n = raw_text.size();
    bool pending_punct = false;
    bool pending_sentence = true; // document start behaves like a boundary
    std::size_t i = 0;
    while (i < n) {
        unsigned char c = raw_text[i];
        if (!word_char(c)) {
            if (!space_char(c)) pending_punct = true;
            if (c == '.' || c == '!' || c == '?') pending_sentence = true;
            ++i;
            continue;
        }
        Token tok;
        std::size_t j = i;
        while (j < n) {
            unsigned char cj = raw_text[j];
            if (word_char(cj)) {
                tok.surface.push_back(raw_text[j]);
                if (!tok.has_letter && !(cj >= '0' && cj <= '9'))
                    tok.has_letter = true;
                ++j;
                continue;
            }
            if ((cj == '-' || cj == '\'') && j + 1 < n &&
                word_char(static_cast<unsigned char>(raw_text[j + 1]))) {
                tok.surface.push_back(raw_text[j]);
                ++j;
                continue;
            }
            break;
        }
        i = j;
        tok.lower.reserve(tok.surface.size());
        for (char sc : tok.surface) tok.lower.push_back(fold(sc));
        tok.position = static_cast<int>(out.size()) + 1;
        tok.is_stop = lists.is_stop(tok.lower);
        tok.preceded_by_punct = pending_punct;
        tok.sentence_start = pending_sentence;
        pending_punct = false;
        pending_sentence = false;
        out.push_back(std::move(tok));
    }
    return out;
}

} // namespace genex
