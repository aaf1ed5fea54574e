#pragma once

#include "genex/params.hpp"
#include "genex/rng.hpp"

#include <array>
#include <string>

namespace genex {

inline constexpr int kGenomeBits = 72;

struct Genome {
    std::array<bool, kGenomeBits> bits{};
    bool operator==(const Genome&) const = default;
};

enum class FieldKind { real_value, int_value, flag };

struct GenomeField {
    const char* name;
    int width;
    double lo;
    double hi;
    FieldKind kind;
};

// The ten trainable fields in bit order; widths sum to 72.
const std::array<GenomeField, 10>& genome_layout();

// Fields are plain-binary unsigned integers, most significant bit first.
// Reals map linearly onto [lo, hi]; integers map linearly then round
// half-up; the flag is its single bit. num_phrases comes from the caller
// and num_working is derived from it.
ExtractorParams decode_genome(const Genome& g, int num_phrases);

Genome random_genome(Rng& rng);

std::string genome_to_string(const Genome& g);
Genome genome_from_string(const std::string& s);

} // namespace genex
