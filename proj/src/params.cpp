#include "genex/params.hpp"

#include <json.hpp>

#include <fstream>
#include <stdexcept>

namespace genex {

namespace {

using nlohmann::json;

void check_range(const char* name, double value, double lo, double hi) {
    if (value < lo || value > hi)
        throw std::invalid_argument(std::string("params: ") + name +
                                    " outside [" + std::to_string(lo) + "," +
                                    std::to_string(hi) + "]");
}

} // namespace

void ExtractorParams::validate() const {
    check_range("num_phrases", num_phrases, 5, 15);
    check_range("num_working", num_working, 25, 75);
    if (num_working != 5 * num_phrases)
        throw std::invalid_argument("params: num_working must equal 5 * num_phrases");
    check_range("factor_two_one", factor_two_one, 1.0, 3.0);
    check_range("factor_three_one", factor_three_one, 1.0, 5.0);
    check_range("min_length_low_rank", min_length_low_rank, 0.3, 3.0);
    check_range("min_rank_low_length", min_rank_low_length, 1, 20);
    check_range("first_low_thresh", first_low_thresh, 1, 1000);
    check_range("first_high_thresh", first_high_thresh, 1, 4000);
    check_range("first_low_factor", first_low_factor, 1.0, 15.0);
    check_range("first_high_factor", first_high_factor, 0.01, 1.0);
    check_range("stem_length", stem_length, 1, 10);
}

ExtractorParams ExtractorParams::with_num_phrases(int k) const {
    ExtractorParams p = *this;
    p.num_phrases = k;
    p.num_working = 5 * k;
    return p;
}

void save_params(const ParamsFile& p, const std::string& path) {
    p.params.validate();
    json j;
    j["params"] = {
        {"num_phrases", p.params.num_phrases},
        {"num_working", p.params.num_working},
        {"factor_two_one", p.params.factor_two_one},
        {"factor_three_one", p.params.factor_three_one},
        {"min_length_low_rank", p.params.min_length_low_rank},
        {"min_rank_low_length", p.params.min_rank_low_length},
        {"first_low_thresh", p.params.first_low_thresh},
        {"first_high_thresh", p.params.first_high_thresh},
        {"first_low_factor", p.params.first_low_factor},
        {"first_high_factor", p.params.first_high_factor},
        {"stem_length", p.params.stem_length},
        {"suppress_proper", p.params.suppress_proper},
    };
    j["metadata"] = {
        {"corpus", p.metadata.corpus},
        {"fitness", p.metadata.fitness},
        {"trials", p.metadata.trials},
        {"seed", p.metadata.seed},
    };
    std::ofstream out(path);
    if (!out) throw std::runtime_error("params: cannot write " + path);
    out << j.dump(2) << "\n";
}

ParamsFile load_params(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("params: cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::runtime_error("params: bad JSON in " + path + ": " + e.what());
    }

    ParamsFile p;
    const json& jp = j.at("params");
    ExtractorParams& e = p.params;
    e.num_phrases = jp.at("num_phrases").get<int>();
    e.num_working = jp.at("num_working").get<int>();
    e.factor_two_one = jp.at("factor_two_one").get<double>();
    e.factor_three_one = jp.at("factor_three_one").get<double>();
    e.min_length_low_rank = jp.at("min_length_low_rank").get<double>();
    e.min_rank_low_length = jp.at("min_rank_low_length").get<int>();
    e.first_low_thresh = jp.at("first_low_thresh").get<int>();
    e.first_high_thresh = jp.at("first_high_thresh").get<int>();
    e.first_low_factor = jp.at("first_low_factor").get<double>();
    e.first_high_factor = jp.at("first_high_factor").get<double>();
    e.stem_length = jp.at("stem_length").get<int>();
    // accept both JSON booleans and 0/1 integers for the flag
    const json& sp = jp.at("suppress_proper");
    if (sp.is_boolean())
        e.suppress_proper = sp.get<bool>();
    else
        e.suppress_proper = sp.get<int>() != 0;
    e.validate();

    if (j.contains("metadata")) {
        const json& jm = j["metadata"];
        p.metadata.corpus = jm.value("corpus", std::string());
        p.metadata.fitness = jm.value("fitness", 0.0);
        p.metadata.trials = jm.value("trials", 0L);
        p.metadata.seed = jm.value("seed", 0UL);
    }
    return p;
}

} // namespace genex
