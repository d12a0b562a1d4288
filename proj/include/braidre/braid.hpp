#pragma once

#include <string>
#include <vector>

#include "conj_params.hpp"

namespace braidre {

// Word in the Artin generators of the braid group on `strands` strands.
// Letters are nonzero ints: +i for s_i, -i for s_i^{-1}, 1 <= i < strands.
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    BraidWord() = default;
    explicit BraidWord(int n, std::vector<int> w = {});

    int exponent_sum() const;
    bool operator==(const BraidWord& o) const = default;  // literal word equality
};

BraidWord compose(const BraidWord& a, const BraidWord& b);
BraidWord inverse(const BraidWord& b);
// Reverses the order of letters, keeping signs.
BraidWord rev(const BraidWord& b);
// The index flip s_i -> s_{N-i}.
BraidWord rmap(const BraidWord& b);
// Free cancellation of adjacent inverse letters (word-level convenience).
BraidWord free_reduce(const BraidWord& b);

// Half twist: (s_1)(s_2 s_1)...(s_{N-1}...s_1).
BraidWord delta(int strands);
// Half twist of the sub-block [lo, hi] embedded in N strands (1-based, inclusive).
BraidWord block_half_twist(int strands, int lo, int hi);
// Its square: full twist of the block.
BraidWord block_full_twist(int strands, int lo, int hi);
// Same word, strand count raised to n (pre: n >= b.strands).
BraidWord stabilize(const BraidWord& b, int n);

// Permutation of endpoints: perm[i] = where the strand starting at position i
// ends (0-based).
std::vector<int> strand_permutation(const BraidWord& b);

// Complex-conjugation automorphism on braids for the given point
// configuration, applied letter by letter.
BraidWord conj_bar(const BraidWord& b, const ConjParams& params);

// Exact equality in the braid group (decided via the induced free-group
// automorphisms).
bool equals(const BraidWord& a, const BraidWord& b);
bool is_trivial(const BraidWord& b);

// --- Garside machinery -------------------------------------------------

// Left normal form Delta^inf * A_1 ... A_len with left-weighted permutation
// braid factors, each factor recorded as its endpoint permutation (0-based).
struct NormalForm {
    int strands = 1;
    long inf = 0;
    std::vector<std::vector<int>> factors;

    long sup() const { return inf + static_cast<long>(factors.size()); }
    long canonical_length() const { return static_cast<long>(factors.size()); }
    bool operator==(const NormalForm& o) const = default;
};

NormalForm left_normal_form(const BraidWord& b);
// Positive word for the permutation braid with the given endpoint permutation.
BraidWord permutation_braid_word(int strands, const std::vector<int>& perm);
// Word representative Delta^inf * factors rebuilt from a normal form.
BraidWord normal_form_word(const NormalForm& nf);

// True iff b is conjugate to the half twist Delta. Decided by cycling /
// decycling to the super summit set, with exponent-sum and permutation
// cycle-type quick rejects.
bool conjugate_to_delta(const BraidWord& b);

// Text format: "B<N>" header then the signed letters, space separated.
std::string to_text(const BraidWord& b);
BraidWord parse_braid(const std::string& text);

} // namespace braidre
