#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace braidre {

// Laurent polynomial over exact rationals: finitely many exponent -> coefficient
// entries, zero coefficients never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Rational& c) { set(0, c); }

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return LaurentPoly(Rational(1)); }
    // c * t^e
    static LaurentPoly term(const Rational& c, long e);
    static LaurentPoly t() { return term(1, 1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_unit() const;          // c * t^e, c != 0
    long min_exp() const;          // pre: nonzero
    long max_exp() const;          // pre: nonzero
    long span() const { return is_zero() ? -1 : max_exp() - min_exp(); }
    Rational coeff(long e) const;
    Rational leading_coeff() const { return coeff(max_exp()); }
    const std::map<long, Rational>& terms() const { return terms_; }
    void set(long e, const Rational& c);
    void add_term(long e, const Rational& c);

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    bool operator<(const LaurentPoly& o) const { return terms_ < o.terms_; }

    LaurentPoly shifted(long e) const;  // * t^e
    LaurentPoly pow(unsigned long n) const;

    std::string str() const;

private:
    std::map<long, Rational> terms_;
};

// Canonical representative modulo units (all units of Q[t,t^-1] are c*t^k):
// minimum exponent 0, primitive integer coefficients, leading coefficient > 0.
// Zero maps to zero.
LaurentPoly normalize(const LaurentPoly& p);

// Euclidean division in Q[t,t^-1] with span as the Euclidean function:
// a = q*b + r, r == 0 or span(r) < span(b). pre: b != 0.
void divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& q, LaurentPoly& r);

// q/p when the division is exact (in the Laurent ring), else nullopt. pre: p != 0.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& q, const LaurentPoly& p);

// Normalized generator of the ideal (p, q); gcd(0, 0) = 0.
LaurentPoly laurent_gcd(const LaurentPoly& p, const LaurentPoly& q);

// True iff q = p*r for some Laurent polynomial r. pre: p != 0 ("zero divisor query").
bool divides_up_to_units(const LaurentPoly& p, const LaurentPoly& q);

// Largest m with f^m | p. pre: f nonzero nonunit, p != 0.
int multiplicity_of_factor(const LaurentPoly& f, const LaurentPoly& p);

// prod over pairs of (t^a_i - c_i).
LaurentPoly product_of_binomials(const std::vector<std::pair<long, Rational>>& factors);

// Text format: ascending exponents; `c*t^e` with coefficient 1 suppressed,
// exponent 1 printed `t`, exponent 0 printed as the bare coefficient;
// separators ` + ` / ` - `. Zero prints "0".
std::string to_text(const LaurentPoly& p);
// Parses the same grammar, arbitrary whitespace. Throws std::invalid_argument.
LaurentPoly parse_laurent(const std::string& text);

} // namespace braidre
