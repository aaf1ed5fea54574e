#include "genex/stemmer.hpp"

#include <cstring>
#include <stdexcept>

namespace genex {

namespace {

// Context conditions attached to endings. A is unconditional beyond the
// global minimum stem length of 2.
enum Cond {
    A, B, C, D, E, F, G, H, I, J, K, L, M, N, O, P, Q, R, S, T, U, V, W, X,
    Y, Z, AA, BB, CC
};

bool ends_with(const std::string& s, const char* suf) {
    const std::size_t n = std::strlen(suf);
    return s.size() >= n && s.compare(s.size() - n, n, suf) == 0;
}

// True if `stem` (the word with the candidate ending removed) satisfies
// condition `c`. The caller has already enforced the global minimum of 2.
bool cond_ok(Cond c, const std::string& s) {
    const std::size_t n = s.size();
    switch (c) {
        case A: return true;
        case B: return n >= 3;
        case C: return n >= 4;
        case D: return n >= 5;
        case E: return !ends_with(s, "e");
        case F: return n >= 3 && !ends_with(s, "e");
        case G: return n >= 3 && ends_with(s, "f");
        case H: return ends_with(s, "t") || ends_with(s, "ll");
        case I: return !ends_with(s, "o") && !ends_with(s, "e");
        case J: return !ends_with(s, "a") && !ends_with(s, "e");
        case K: return n >= 3 && (ends_with(s, "l") || ends_with(s, "i") ||
                                  (s[n - 1] == 'e' && s[n - 3] == 'u'));
        case L:
            if (ends_with(s, "u") || ends_with(s, "x")) return false;
            if (ends_with(s, "s") && !ends_with(s, "os")) return false;
            return true;
        case M:
            return !ends_with(s, "a") && !ends_with(s, "c") &&
                   !ends_with(s, "e") && !ends_with(s, "m");
        case N:
            // minimum stem length 4 after s**, elsewhere 3
            if (n < 3) return false;
            if (s[n - 3] == 's') return n >= 4;
            return true;
        case O: return ends_with(s, "l") || ends_with(s, "i");
        case P: return !ends_with(s, "c");
        case Q: return n >= 3 && !ends_with(s, "l") && !ends_with(s, "n");
        case R: return ends_with(s, "n") || ends_with(s, "r");
        case S: return ends_with(s, "dr") ||
                       (ends_with(s, "t") && !ends_with(s, "tt"));
        case T: return ends_with(s, "s") ||
                       (ends_with(s, "t") && !ends_with(s, "ot"));
        case U: return ends_with(s, "l") || ends_with(s, "m") ||
                       ends_with(s, "n") || ends_with(s, "r");
        case V: return ends_with(s, "c");
        case W: return !ends_with(s, "s") && !ends_with(s, "u");
        case X: return ends_with(s, "l") || ends_with(s, "i") ||
                       (n >= 3 && s[n - 1] == 'e' && s[n - 3] == 'u');
        case Y: return ends_with(s, "in");
        case Z: return !ends_with(s, "f");
        case AA:
            return ends_with(s, "d") || ends_with(s, "f") ||
                   ends_with(s, "ph") || ends_with(s, "th") ||
                   ends_with(s, "l") || ends_with(s, "er") ||
                   ends_with(s, "or") || ends_with(s, "es") ||
                   ends_with(s, "t");
        case BB:
            return n >= 3 && !ends_with(s, "met") && !ends_with(s, "ryst");
        case CC: return ends_with(s, "l");
    }
    return false;
}

struct Ending {
    const char* suffix;
    Cond cond;
};

// The 294 endings, grouped by length (longest first within the scan).
const Ending kEndings11[] = {
    {"alistically", B}, {"arizability", A}, {"izationally", B},
};
const Ending kEndings10[] = {
    {"antialness", A}, {"arisations", A}, {"arizations", A}, {"entialness", A},
};
const Ending kEndings9[] = {
    {"allically", C},  {"antaneous", A}, {"antiality", A}, {"arisation", A},
    {"arization", A},  {"ationally", B}, {"ativeness", A}, {"eableness", E},
    {"entations", A},  {"entiality", A}, {"entialize", A}, {"entiation", A},
    {"ionalness", A},  {"istically", A}, {"itousness", A}, {"izability", A},
    {"izational", A},
};
const Ending kEndings8[] = {
    {"ableness", A}, {"arizable", A}, {"entation", A}, {"entially", A},
    {"eousness", A}, {"ibleness", A}, {"icalness", A}, {"ionalism", A},
    {"ionality", A}, {"ionalize", A}, {"iousness", A}, {"izations", A},
    {"lessness", A},
};
const Ending kEndings7[] = {
    {"ability", A}, {"aically", A}, {"alistic", B}, {"alities", A},
    {"ariness", E}, {"aristic", A}, {"arizing", A}, {"ateness", A},
    {"atingly", A}, {"ational", B}, {"atively", A}, {"ativism", A},
    {"elihood", E}, {"encible", A}, {"entally", A}, {"entials", A},
    {"entiate", A}, {"entness", A}, {"fulness", A}, {"ibility", A},
    {"icalism", A}, {"icalist", A}, {"icality", A}, {"icalize", A},
    {"ication", G}, {"icianry", A}, {"ination", A}, {"ingness", A},
    {"ionally", A}, {"isation", A}, {"ishness", A}, {"istical", A},
    {"iteness", A}, {"iveness", A}, {"ivistic", A}, {"ivities", A},
    {"ization", F}, {"izement", A}, {"oidally", A}, {"ousness", A},
};
const Ending kEndings6[] = {
    {"aceous", A}, {"acious", B}, {"action", G}, {"alness", A},
    {"ancial", A}, {"ancies", A}, {"ancing", B}, {"ariser", A},
    {"arized", A}, {"arizer", A}, {"atable", A}, {"ations", B},
    {"atives", A}, {"eature", Z}, {"efully", A}, {"encies", A},
    {"encing", A}, {"ential", A}, {"enting", C}, {"entist", A},
    {"eously", A}, {"ialist", A}, {"iality", A}, {"ialize", A},
    {"ically", A}, {"icance", A}, {"icians", A}, {"icists", A},
    {"ifully", A}, {"ionals", A}, {"ionate", D}, {"ioning", A},
    {"ionist", A}, {"iously", A}, {"istics", A}, {"izable", E},
    {"lessly", A}, {"nesses", A}, {"oidism", A},
};
const Ending kEndings5[] = {
    {"acies", A},  {"acity", A}, {"aging", B}, {"aical", A},
    {"alist", A},  {"alism", B}, {"ality", A}, {"alize", A},
    {"allic", BB}, {"anced", B}, {"ances", B}, {"antic", C},
    {"arial", A},  {"aries", A}, {"arily", A}, {"arity", B},
    {"arize", A},  {"aroid", A}, {"ately", A}, {"ating", I},
    {"ation", B},  {"ative", A}, {"ators", A}, {"atory", A},
    {"ature", E},  {"early", Y}, {"ehood", A}, {"eless", A},
    {"elity", A},  {"ement", A}, {"enced", A}, {"ences", A},
    {"eness", E},  {"ening", E}, {"ental", A}, {"ented", C},
    {"ently", A},  {"fully", A}, {"ially", A}, {"icant", A},
    {"ician", A},  {"icide", A}, {"icism", A}, {"icist", A},
    {"icity", A},  {"idine", I}, {"iedly", A}, {"ihood", A},
    {"inate", A},  {"iness", A}, {"ingly", B}, {"inism", J},
    {"inity", CC}, {"ional", A}, {"ioned", A}, {"ished", A},
    {"istic", A},  {"ities", A}, {"itous", A}, {"ively", A},
    {"ivity", A},  {"izers", F}, {"izing", F}, {"oidal", A},
    {"oides", A},  {"otide", A}, {"ously", A},
};
const Ending kEndings4[] = {
    {"able", A}, {"ably", A}, {"ages", B}, {"ally", B},
    {"ance", B}, {"ancy", B}, {"ants", B}, {"aric", A},
    {"arly", K}, {"ated", I}, {"ates", A}, {"atic", B},
    {"ator", A}, {"ealy", Y}, {"edly", E}, {"eful", A},
    {"eity", A}, {"ence", A}, {"ency", A}, {"ened", E},
    {"enly", E}, {"eous", A}, {"hood", A}, {"ials", A},
    {"ians", A}, {"ible", A}, {"ibly", A}, {"ical", A},
    {"ides", L}, {"iers", A}, {"iful", A}, {"ines", M},
    {"ings", N}, {"ions", B}, {"ious", A}, {"isms", B},
    {"ists", A}, {"itic", H}, {"ized", F}, {"izer", F},
    {"less", A}, {"lily", A}, {"ness", A}, {"ogen", A},
    {"ward", A}, {"wise", A}, {"ying", B}, {"yish", A},
};
const Ending kEndings3[] = {
    {"acy", A}, {"age", B}, {"aic", A}, {"als", BB},
    {"ant", B}, {"ars", O}, {"ary", F}, {"ata", A},
    {"ate", A}, {"eal", Y}, {"ear", Y}, {"ely", E},
    {"ene", E}, {"ent", C}, {"ery", E}, {"ese", A},
    {"ful", A}, {"ial", A}, {"ian", A}, {"ics", A},
    {"ide", L}, {"ied", A}, {"ier", A}, {"ies", P},
    {"ily", A}, {"ine", M}, {"ing", N}, {"ion", Q},
    {"ish", C}, {"ism", B}, {"ist", A}, {"ite", AA},
    {"ity", A}, {"ium", A}, {"ive", A}, {"ize", F},
    {"oid", A}, {"one", R}, {"ous", A},
};
const Ending kEndings2[] = {
    {"ae", A}, {"al", BB}, {"ar", X}, {"as", B},
    {"ed", E}, {"en", F},  {"es", E}, {"ia", A},
    {"ic", A}, {"is", A},  {"ly", B}, {"on", S},
    {"or", T}, {"um", U},  {"us", V}, {"yl", R},
    {"'s", A}, {"s'", A},
};
const Ending kEndings1[] = {
    {"a", A}, {"e", A}, {"i", A}, {"o", A}, {"s", W}, {"y", B},
};

struct Bucket {
    const Ending* entries;
    std::size_t count;
};

const Bucket kBuckets[12] = {
    {nullptr, 0},
    {kEndings1, sizeof(kEndings1) / sizeof(Ending)},
    {kEndings2, sizeof(kEndings2) / sizeof(Ending)},
    {kEndings3, sizeof(kEndings3) / sizeof(Ending)},
    {kEndings4, sizeof(kEndings4) / sizeof(Ending)},
    {kEndings5, sizeof(kEndings5) / sizeof(Ending)},
    {kEndings6, sizeof(kEndings6) / sizeof(Ending)},
    {kEndings7, sizeof(kEndings7) / sizeof(Ending)},
    {kEndings8, sizeof(kEndings8) / sizeof(Ending)},
    {kEndings9, sizeof(kEndings9) / sizeof(Ending)},
    {kEndings10, sizeof(kEndings10) / sizeof(Ending)},
    {kEndings11, sizeof(kEndings11) / sizeof(Ending)},
};

// Longest ending whose condition holds is removed; the stem always keeps
// at least 2 characters.
std::string remove_ending(const std::string& word) {
    int max_len = static_cast<int>(word.size()) - 2;
    if (max_len > 11) max_len = 11;
    for (int len = max_len; len >= 1; --len) {
        const Bucket& bucket = kBuckets[len];
        const char* tail = word.c_str() + word.size() - len;
        for (std::size_t i = 0; i < bucket.count; ++i) {
            if (std::strcmp(tail, bucket.entries[i].suffix) != 0) continue;
            std::string stem = word.substr(0, word.size() - len);
            if (cond_ok(bucket.entries[i].cond, stem)) return stem;
            break; // only one ending per length can match
        }
    }
    return word;
}

void undouble(std::string& s) {
    if (s.size() < 2) return;
    char c = s[s.size() - 1];
    if (c == s[s.size() - 2] && std::strchr("bdglmnprst", c) != nullptr)
        s.pop_back();
}

struct Respell {
    const char* pattern;
    const char* replacement;
    const char* not_after; // chars that block the rule when just before pattern
};

// Respelling rules, longest pattern first. The first pattern that matches
// the tail decides: if its exception applies nothing is respelled.
const Respell kRespell[] = {
    {"umpt", "um", nullptr},  {"istr", "ister", nullptr},
    {"metr", "meter", nullptr}, {"erid", "eris", nullptr},
    {"pand", "pans", nullptr},
    {"iev", "ief", nullptr},  {"uct", "uc", nullptr},
    {"rpt", "rb", nullptr},   {"urs", "ur", nullptr},
    {"olv", "olut", nullptr}, {"bex", "bic", nullptr},
    {"dex", "dic", nullptr},  {"pex", "pic", nullptr},
    {"tex", "tic", nullptr},  {"lux", "luc", nullptr},
    {"uad", "uas", nullptr},  {"vad", "vas", nullptr},
    {"cid", "cis", nullptr},  {"lid", "lis", nullptr},
    {"end", "ens", "s"},      {"ond", "ons", nullptr},
    {"lud", "lus", nullptr},  {"rud", "rus", nullptr},
    {"her", "hes", "pt"},     {"mit", "mis", nullptr},
    {"ent", "ens", "m"},      {"ert", "ers", nullptr},
    {"ul", "l", "aoi"},       {"ax", "ac", nullptr},
    {"ex", "ec", nullptr},    {"ix", "ic", nullptr},
    {"et", "es", "n"},        {"yt", "ys", nullptr},
    {"yz", "ys", nullptr},
};

void respell(std::string& s) {
    for (const Respell& rule : kRespell) {
        const std::size_t len = std::strlen(rule.pattern);
        if (s.size() < len) continue;
        if (s.compare(s.size() - len, len, rule.pattern) != 0) continue;
        if (rule.not_after != nullptr && s.size() > len) {
            char before = s[s.size() - len - 1];
            if (std::strchr(rule.not_after, before) != nullptr) return;
        }
        s.replace(s.size() - len, len, rule.replacement);
        return;
    }
}

bool plain_alpha(const std::string& w) {
    for (char c : w)
        if (c < 'a' || c > 'z') return false;
    return !w.empty();
}

} // namespace

std::string truncate_stem(const std::string& word, int stem_length) {
    if (stem_length < 1 || stem_length > 10)
        throw std::invalid_argument("truncate_stem: stem_length outside [1,10]");
    if (word.size() <= static_cast<std::size_t>(stem_length)) return word;
    return word.substr(0, static_cast<std::size_t>(stem_length));
}

std::string lovins_stem(const std::string& word) {
    if (!plain_alpha(word)) return word;
    std::string stem = remove_ending(word);
    undouble(stem);
    respell(stem);
    return stem;
}

std::string iterated_lovins_stem(const std::string& word) {
    std::string cur = word;
    for (int i = 0; i < 16; ++i) {
        std::string next = lovins_stem(cur);
        if (next == cur) return cur;
        cur = std::move(next);
    }
    if (lovins_stem(cur) != cur)
        throw std::runtime_error("iterated_lovins_stem: no fixed point within cap");
    return cur;
}

StemSequence stem_sequence(const std::string& phrase, const StemmerSpec& stemmer) {
    StemSequence out;
    std::string word;
    auto flush = [&] {
        if (word.empty()) return;
        for (char& c : word)
            if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
        if (stemmer.kind == StemmerSpec::Kind::iterated_lovins)
            out.push_back(iterated_lovins_stem(word));
        else
            out.push_back(truncate_stem(word, stemmer.trunc_length));
        word.clear();
    };
    for (char c : phrase) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v')
            flush();
        else
            word.push_back(c);
    }
    flush();
    if (out.empty())
        throw std::invalid_argument("stem_sequence: empty phrase");
    return out;
}

} // namespace genex
