#include "braidre/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace braidre {

LaurentPoly LaurentPoly::term(const Rational& c, long e) {
    LaurentPoly p;
    p.set(e, c);
    return p;
}

bool LaurentPoly::is_unit() const { return terms_.size() == 1; }

long LaurentPoly::min_exp() const {
    if (is_zero()) throw std::logic_error("min_exp of zero polynomial");
    return terms_.begin()->first;
}

long LaurentPoly::max_exp() const {
    if (is_zero()) throw std::logic_error("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

Rational LaurentPoly::coeff(long e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::set(long e, const Rational& c) {
    if (c == 0)
        terms_.erase(e);
    else
        terms_[e] = c;
}

void LaurentPoly::add_term(long e, const Rational& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (auto& [e1, c1] : terms_)
        for (auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::shifted(long e) const {
    LaurentPoly r;
    for (auto& [ex, c] : terms_) r.terms_.emplace(ex + e, c);
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned long n) const {
    LaurentPoly acc = one(), base = *this;
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

std::string LaurentPoly::str() const { return to_text(*this); }

LaurentPoly normalize(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    LaurentPoly q = p.shifted(-p.min_exp());
    // scale to primitive integer coefficients
    BigInt den_lcm = 1, num_gcd = 0;
    for (auto& [e, c] : q.terms()) den_lcm = lcm(den_lcm, den(c));
    for (auto& [e, c] : q.terms()) num_gcd = gcd(num_gcd, num(c) * (den_lcm / den(c)));
    Rational scale(den_lcm, num_gcd);
    if (q.leading_coeff() < 0) scale = -scale;
    LaurentPoly r;
    for (auto& [e, c] : q.terms()) r.set(e, c * scale);
    return r;
}

void divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& q, LaurentPoly& r) {
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    q = LaurentPoly::zero();
    r = a;
    const long db = b.span();
    const Rational blead = b.leading_coeff();
    while (!r.is_zero() && r.span() >= db) {
        Rational c = r.leading_coeff() / blead;
        long e = r.max_exp() - b.max_exp();
        LaurentPoly m = LaurentPoly::term(c, e);
        q = q + m;
        r = r - m * b;
    }
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& q, const LaurentPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("zero divisor query");
    if (q.is_zero()) return LaurentPoly::zero();
    LaurentPoly quo, rem;
    divmod(q, p, quo, rem);
    if (!rem.is_zero()) return std::nullopt;
    return quo;
}

LaurentPoly laurent_gcd(const LaurentPoly& p, const LaurentPoly& q) {
    LaurentPoly a = normalize(p), b = normalize(q);
    while (!b.is_zero()) {
        LaurentPoly quo, rem;
        divmod(a, b, quo, rem);
        a = b;
        b = normalize(rem);  // keeps coefficient growth in check
    }
    return normalize(a);
}

bool divides_up_to_units(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.is_zero()) throw std::invalid_argument("zero divisor query");
    return divide_exact(q, p).has_value();
}

int multiplicity_of_factor(const LaurentPoly& f, const LaurentPoly& p) {
    if (f.is_zero() || f.is_unit()) throw std::invalid_argument("factor must be a nonzero nonunit");
    if (p.is_zero()) throw std::invalid_argument("multiplicity in zero polynomial");
    int m = 0;
    LaurentPoly cur = p;
    for (;;) {
        auto next = divide_exact(cur, f);
        if (!next) return m;
        cur = *next;
        ++m;
    }
}

LaurentPoly product_of_binomials(const std::vector<std::pair<long, Rational>>& factors) {
    LaurentPoly r = LaurentPoly::one();
    for (auto& [a, c] : factors) {
        LaurentPoly b = LaurentPoly::term(1, a);
        b.add_term(0, -c);
        r = r * b;
    }
    return r;
}

static std::string rational_str(const Rational& c) {
    std::ostringstream os;
    os << num(c);
    if (den(c) != 1) os << "/" << den(c);
    return os.str();
}

std::string to_text(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : p.terms()) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (e == 0) {
            os << rational_str(a);
        } else {
            if (a != 1) os << rational_str(a) << "*";
            os << "t";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("bad laurent text near position " + std::to_string(i) + ": " + what);
    }
    BigInt read_uint() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("expected digits");
        return BigInt(s.substr(start, i - start));
    }
    long read_int() {
        skip_ws();
        bool neg = false;
        if (peek() == '-' || peek() == '+') {
            neg = s[i] == '-';
            ++i;
        }
        BigInt v = read_uint();
        if (v > 1000000000) fail("exponent out of range");
        long r = v.convert_to<long>();
        return neg ? -r : r;
    }
};

} // namespace

LaurentPoly parse_laurent(const std::string& text) {
    Cursor c{text};
    LaurentPoly p;
    bool any = false;
    int sign = 1;
    if (c.done()) c.fail("empty input");
    for (;;) {
        if (c.done()) {
            if (!any) c.fail("empty input");
            break;
        }
        char ch = c.peek();
        if (any || ch == '+' || ch == '-') {
            if (ch != '+' && ch != '-') c.fail("expected '+' or '-' between terms");
            sign = ch == '-' ? -1 : 1;
            ++c.i;
        } else {
            sign = 1;
        }
        while (c.peek() == '+' || c.peek() == '-') {  // tolerate "+ -t"
            if (c.peek() == '-') sign = -sign;
            ++c.i;
        }
        // term: [coeff ['*']] ['t' ['^' exp]]
        Rational coeff = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            BigInt n = c.read_uint();
            BigInt d = 1;
            if (c.peek() == '/') {
                ++c.i;
                d = c.read_uint();
                if (d == 0) c.fail("zero denominator");
            }
            coeff = Rational(n, d);
            have_coeff = true;
            if (c.peek() == '*') ++c.i;
        }
        long e = 0;
        if (c.peek() == 't') {
            ++c.i;
            e = 1;
            if (c.peek() == '^') {
                ++c.i;
                e = c.read_int();
            }
        } else if (!have_coeff) {
            c.fail("expected coefficient or 't'");
        }
        p.add_term(e, sign > 0 ? coeff : -coeff);
        any = true;
    }
    return p;
}

} // namespace braidre
