#pragma once

#include "genex/extractor.hpp"
#include "genex/params.hpp"
#include "genex/wordlists.hpp"

#include <string>
#include <vector>

// Deliberately naive re-implementation of the ten-step pipeline using
// ordered containers and explicit rescans. Kept independent of the
// production code paths so agreement between the two is meaningful.
std::vector<genex::Keyphrase> oracle_extract(const std::string& text,
                                             const genex::ExtractorParams& params,
                                             const genex::WordLists& lists);
