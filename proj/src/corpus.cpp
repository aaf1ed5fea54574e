#include "genex/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fs = std::filesystem;

namespace genex {

namespace {

std::string read_file(const fs::path& path, const std::string& doc_id) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("corpus: unreadable file for document '" +
                                 doc_id + "': " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

} // namespace

std::vector<std::string> Corpus::ids_in_split(Split s) const {
    std::vector<std::string> out;
    for (const auto& [id, text] : documents) {
        auto it = split.find(id);
        if (it != split.end() && it->second == s) out.push_back(id);
    }
    return out;
}

Corpus load_corpus(const std::string& root_path) {
    fs::path root(root_path);
    if (!fs::is_directory(root))
        throw std::runtime_error("corpus: not a directory: " + root_path);

    std::vector<std::string> ids;
    for (const auto& entry : fs::directory_iterator(root)) {
        if (!entry.is_regular_file()) continue;
        const fs::path& p = entry.path();
        if (p.extension() == ".txt") ids.push_back(p.stem().string());
    }
    std::sort(ids.begin(), ids.end());

    Corpus corpus;
    for (const std::string& id : ids) {
        std::string text = read_file(root / (id + ".txt"), id);
        if (trim(text).empty())
            throw std::runtime_error("corpus: empty document '" + id + "'");

        fs::path key_path = root / (id + ".key");
        if (!fs::exists(key_path))
            throw std::runtime_error("corpus: missing target file for document '" +
                                     id + "'");
        std::ifstream keys(key_path);
        if (!keys)
            throw std::runtime_error("corpus: unreadable file for document '" +
                                     id + "': " + key_path.string());
        std::vector<std::string> targets;
        std::string line;
        while (std::getline(keys, line)) {
            std::string phrase = trim(line);
            if (!phrase.empty()) targets.push_back(phrase);
        }
        if (targets.empty())
            throw std::runtime_error("corpus: no targets for document '" + id + "'");

        corpus.documents.emplace_back(id, std::move(text));
        corpus.targets[id] = std::move(targets);
        corpus.split[id] = Split::train;
    }

    fs::path manifest = root / "manifest";
    if (fs::exists(manifest)) {
        std::ifstream in(manifest);
        if (!in) throw std::runtime_error("corpus: unreadable manifest");
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            std::string entry = trim(line);
            if (entry.empty() || entry[0] == '#') continue;
            if (entry[0] == '@') {
                std::istringstream ss(entry);
                std::string directive, value;
                ss >> directive >> value;
                if (directive == "@params-short")
                    corpus.routing.short_params_path = value;
                else if (directive == "@params-long")
                    corpus.routing.long_params_path = value;
                else if (directive == "@length-boundary")
                    corpus.routing.word_boundary = std::stoi(value);
                else
                    throw std::runtime_error("corpus: unknown manifest directive '" +
                                             directive + "' (line " +
                                             std::to_string(lineno) + ")");
                continue;
            }
            std::size_t tab = entry.find('\t');
            if (tab == std::string::npos)
                throw std::runtime_error("corpus: bad manifest line " +
                                         std::to_string(lineno));
            std::string id = trim(entry.substr(0, tab));
            std::string which = trim(entry.substr(tab + 1));
            if (corpus.split.find(id) == corpus.split.end())
                throw std::runtime_error("corpus: manifest names unknown document '" +
                                         id + "'");
            if (which == "train")
                corpus.split[id] = Split::train;
            else if (which == "test")
                corpus.split[id] = Split::test;
            else
                throw std::runtime_error("corpus: bad split '" + which +
                                         "' for document '" + id + "'");
        }
    }
    return corpus;
}

std::string strip_tags(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    bool in_tag = false;
    for (char c : text) {
        if (in_tag) {
            if (c == '>') in_tag = false;
        } else if (c == '<') {
            in_tag = true;
        } else {
            out.push_back(c);
        }
    }
    return out;
}

} // namespace genex
