#pragma once

#include <string>
#include <vector>

#include "braid.hpp"
#include "conj_params.hpp"

namespace braidre {

// Braid monodromy data of a plane curve compatible with a real structure:
// the braids of the upper-half-plane loops (in order), the braids of the
// real critical values (in the written order of the good ordered system),
// and the fiber parameters driving the conjugation automorphism.
struct RealFactorization {
    int strands;
    ConjParams fiber; // N = strands, k = number of conjugate point pairs
    std::vector<BraidWord> upper;
    std::vector<BraidWord> real;

    RealFactorization(int d, int k, std::vector<BraidWord> upper_braids = {},
                      std::vector<BraidWord> real_braids = {});
};

// Braids of the reflected lower-half-plane loops, in the good ordered
// system's order: [conj_bar(b_h)^{-1}, ..., conj_bar(b_1)^{-1}].
std::vector<BraidWord> derive_lower(const RealFactorization& f);

// True iff upper-product * real-product * RMAP(rev(upper-product)) equals
// the full twist Delta^2. Only valid when the fiber has at most one real
// point (2k >= d - 1); other regimes throw.
bool verify_decomposition(const RealFactorization& f);

// True iff b * RMAP(rev(b)) equals Delta^2.
bool check_central_equation(const BraidWord& b);

// Model factorization of a curve whose only real feature is one acnode:
// real = [centered block full twist on k2 strands], upper = [Delta_d2 times
// the inverse centered block half-twist]. Both arguments must be even,
// 2 <= k2 <= d2.
RealFactorization build_acnode(int d2, int k2);

// Real-part braids of a line arrangement with no real intersection points:
// one full twist per group of 2*r_i strands, on disjoint contiguous blocks.
std::vector<BraidWord> build_unreal_arrangement(const std::vector<int>& r);

// True iff the product of the upper braids is conjugate to Delta. Requires
// an empty real part.
bool verify_garside_class(const RealFactorization& f);

// Structured text: "strands: d", "fiber_real_points: m", "upper:" section,
// "real:" section; one braid word per line. Round-trips bit-exactly.
std::string to_text(const RealFactorization& f);
RealFactorization parse_real_factorization(const std::string& text);

} // namespace braidre
