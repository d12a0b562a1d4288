#pragma once

#include <string>
#include <utility>
#include <vector>

#include "braid.hpp"
#include "freegroup.hpp"

namespace braidre {

// Finite presentation < x_1..x_generators | relators >.
struct Presentation {
    int generators = 0;
    std::vector<FreeWord> relators;
    // (braid index, generator index), 1-based, parallel to relators.
    std::vector<std::pair<int, int>> provenance;
};

// Group of the complement presented from a braid monodromy factorization:
// one relator beta_i(x_j) x_j^{-1} per braid and generator, trivial relators
// dropped. All braids must share the strand count; the two-argument form
// allows an empty list (free group on d generators).
Presentation van_kampen(const std::vector<BraidWord>& braids, int d);
Presentation van_kampen(const std::vector<BraidWord>& braids);

// Fundamental group of the closed-braid link complement: van Kampen applied
// to the single braid, keeping the redundant relator.
Presentation link_group(const BraidWord& b);

// "gens: d" then one relator per line (free word format).
std::string to_text(const Presentation& p);
Presentation parse_presentation(const std::string& text);

} // namespace braidre
