#include "genex/genome.hpp"

#include <cmath>
#include <stdexcept>

namespace genex {

namespace {

const std::array<GenomeField, 10> kLayout = {{
    {"factor_two_one", 8, 1.0, 3.0, FieldKind::real_value},
    {"factor_three_one", 8, 1.0, 5.0, FieldKind::real_value},
    {"min_length_low_rank", 8, 0.3, 3.0, FieldKind::real_value},
    {"min_rank_low_length", 5, 1.0, 20.0, FieldKind::int_value},
    {"first_low_thresh", 10, 1.0, 1000.0, FieldKind::int_value},
    {"first_high_thresh", 12, 1.0, 4000.0, FieldKind::int_value},
    {"first_low_factor", 8, 1.0, 15.0, FieldKind::real_value},
    {"first_high_factor", 8, 0.01, 1.0, FieldKind::real_value},
    {"stem_length", 4, 1.0, 10.0, FieldKind::int_value},
    {"suppress_proper", 1, 0.0, 1.0, FieldKind::flag},
}};

double decode_field(const Genome& g, int offset, const GenomeField& f) {
    unsigned long v = 0;
    for (int i = 0; i < f.width; ++i)
        v = (v << 1) | (g.bits[static_cast<std::size_t>(offset + i)] ? 1u : 0u);
    if (f.kind == FieldKind::flag) return static_cast<double>(v);
    double span = static_cast<double>((1ul << f.width) - 1ul);
    double x = f.lo + (static_cast<double>(v) / span) * (f.hi - f.lo);
    if (f.kind == FieldKind::int_value) return std::floor(x + 0.5);
    return x;
}

} // namespace

const std::array<GenomeField, 10>& genome_layout() { return kLayout; }

ExtractorParams decode_genome(const Genome& g, int num_phrases) {
    ExtractorParams p;
    p.num_phrases = num_phrases;
    p.num_working = 5 * num_phrases;

    double values[10];
    int offset = 0;
    for (int i = 0; i < 10; ++i) {
        values[i] = decode_field(g, offset, kLayout[static_cast<std::size_t>(i)]);
        offset += kLayout[static_cast<std::size_t>(i)].width;
    }

    p.factor_two_one = values[0];
    p.factor_three_one = values[1];
    p.min_length_low_rank = values[2];
    p.min_rank_low_length = static_cast<int>(values[3]);
    p.first_low_thresh = static_cast<int>(values[4]);
    p.first_high_thresh = static_cast<int>(values[5]);
    p.first_low_factor = values[6];
    p.first_high_factor = values[7];
    p.stem_length = static_cast<int>(values[8]);
    p.suppress_proper = values[9] != 0.0;
    return p;
}

Genome random_genome(Rng& rng) {
    Genome g;
    for (auto& b : g.bits) b = rng.next_bool();
    return g;
}

std::string genome_to_string(const Genome& g) {
    std::string s;
    s.reserve(kGenomeBits);
    for (bool b : g.bits) s += b ? '1' : '0';
    return s;
}

Genome genome_from_string(const std::string& s) {
    if (s.size() != static_cast<std::size_t>(kGenomeBits))
        throw std::invalid_argument("genome: expected 72 bits, got " +
                                    std::to_string(s.size()));
    Genome g;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '0')
            g.bits[i] = false;
        else if (s[i] == '1')
            g.bits[i] = true;
        else
            throw std::invalid_argument("genome: invalid character in bit string");
    }
    return g;
}

} // namespace genex
