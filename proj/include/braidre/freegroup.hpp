#pragma once

#include <map>
#include <string>
#include <vector>

#include "braid.hpp"
#include "conj_params.hpp"
#include "laurent.hpp"
#include "rational.hpp"

namespace braidre {

// Freely reduced word in F_rank on generators x_1..x_rank. Letters are
// nonzero ints: +j for x_j, -j for x_j^{-1}.
struct FreeWord {
    int rank = 0;
    std::vector<int> letters;

    FreeWord() = default;
    FreeWord(int r, std::vector<int> w);  // reduces on construction

    static FreeWord generator(int r, int j);

    bool is_identity() const { return letters.empty(); }
    int length() const { return static_cast<int>(letters.size()); }
    int exponent_sum() const;

    bool operator==(const FreeWord& o) const = default;
    bool operator<(const FreeWord& o) const;
};

FreeWord mul(const FreeWord& a, const FreeWord& b);
FreeWord inverse(const FreeWord& w);

// Endomorphism of F_rank given by generator images (applied by substitution).
struct FreeAuto {
    int rank = 0;
    std::vector<FreeWord> images;  // images[j-1] = image of x_j

    FreeAuto() = default;
    explicit FreeAuto(int r);  // identity
    FreeAuto(int r, std::vector<FreeWord> imgs);

    FreeWord apply(const FreeWord& w) const;
    bool is_identity() const;
};

// apply a first, then b.
FreeAuto compose(const FreeAuto& a, const FreeAuto& b);

// Action of a braid word on the free group. Single letter s_i maps
// x_i -> x_i^{-1} x_{i+1} x_i, x_{i+1} -> x_i, fixing the rest; the letters
// of b act left to right. pre: w.rank == b.strands.
FreeWord artin_action(const BraidWord& b, const FreeWord& w);
FreeAuto artin_automorphism(const BraidWord& b);

// Complex-conjugation involution of the free group for the given point
// configuration.
FreeAuto conj_involution(const ConjParams& params);

// Element of the integral group ring Z[F_rank].
struct GroupRingElem {
    int rank = 0;
    std::map<FreeWord, BigInt> coeffs;  // zero coefficients never stored

    GroupRingElem() = default;
    explicit GroupRingElem(int r) : rank(r) {}

    void add(const FreeWord& w, const BigInt& c);
    bool is_zero() const { return coeffs.empty(); }
    bool operator==(const GroupRingElem& o) const = default;
};

GroupRingElem ring_add(const GroupRingElem& a, const GroupRingElem& b);
GroupRingElem ring_mul(const GroupRingElem& a, const GroupRingElem& b);

// Fox partial derivative d w / d x_j in Z[F_rank]. 1 <= j <= rank.
GroupRingElem fox_derivative(const FreeWord& w, int j);

// Abelianization sending every generator to t: words map to t^(exponent sum).
LaurentPoly phi(const GroupRingElem& e);

// Text format: signed integers separated by single spaces; identity is "".
std::string to_text(const FreeWord& w);
// Parses the same; rank supplied out of band. Throws std::invalid_argument.
FreeWord parse_free_word(int rank, const std::string& text);

} // namespace braidre
