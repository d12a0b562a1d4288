#pragma once

#include <string>
#include <vector>

#include "braid.hpp"
#include "laurent.hpp"
#include "presentation.hpp"

namespace braidre {

// Rectangular matrix over the Laurent ring.
using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;

struct SmithResult {
    int rank = 0;
    // All invariant factors d_1 | d_2 | ... | d_rank, normalized (units -> 1).
    std::vector<LaurentPoly> divisors;
};

struct AlexanderResult {
    // 0 encodes "the module has a free part beyond the expected rank-1 summand".
    LaurentPoly polynomial;
    // Normalized non-unit invariant factors of the presentation matrix.
    std::vector<LaurentPoly> elementary_divisors;
    bool free_rank_flag = false;
};

// Entry (i, j) = phi(fox_derivative(relator_i, x_j)); one row per relator,
// one column per generator.
LaurentMatrix alexander_matrix(const Presentation& p);

// Smith normal form over the PID of rational-coefficient Laurent polynomials.
SmithResult smith_form(LaurentMatrix m);

// Order of the torsion part of the abelianized kernel of the total-degree
// map: product of the non-unit invariant factors when the matrix has the
// expected rank d - 1, and 0 (flagging a free part) when the rank is lower.
AlexanderResult alexander_poly(const Presentation& p);

// (N-1)x(N-1) reduced Burau matrix; multiplicative over composition.
LaurentMatrix burau_reduced(const BraidWord& b);

// Determinant by fraction-free elimination (exposed for cross-checks).
LaurentPoly laurent_det(LaurentMatrix m);

// normalize(det(burau_reduced(b) - I) * (1 - t) / (1 - t^N)).
// Throws "convention violation" if the division is not exact.
LaurentPoly alexander_from_burau(const BraidWord& b);

// n-th cyclotomic polynomial, exact integer coefficients.
LaurentPoly cyclotomic_poly(int n);

// Closed forms: (t-1)(t^d-1)^(d-2).
LaurentPoly hopf_link(int d);
// (t^d-1)^(d/2-1) (t^(d/2)+1) (t-1), d even.
LaurentPoly delta_closure_even(int d);
// (t^d-1)^((d-1)/2) (t-1), d odd.
LaurentPoly delta_closure_odd(int d);
// Characteristic polynomial of the monodromy of x^a - y^b: product of
// (t - e^{2 pi i (i/a + j/b)}) over 0<i<a, 0<j<b, assembled exactly as a
// product of cyclotomic polynomials grouped by root order.
LaurentPoly milnor_orlik(int a, int b);

// True iff alexander_poly(sub) divides alexander_poly(full) up to units,
// with the convention that everything divides 0 and 0 divides only 0.
bool check_divisibility(const Presentation& sub, const Presentation& full);

// "poly: ..." / "divisors: [...]" / "free: true|false".
std::string to_text(const AlexanderResult& r);

} // namespace braidre
