#include "braidre/alexander.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "braidre/freegroup.hpp"

namespace braidre {

LaurentMatrix alexander_matrix(const Presentation& p) {
    LaurentMatrix m;
    m.reserve(p.relators.size());
    for (const auto& rel : p.relators) {
        std::vector<LaurentPoly> row;
        row.reserve(p.generators);
        for (int j = 1; j <= p.generators; ++j)
            row.push_back(phi(fox_derivative(rel, j)));
        m.push_back(std::move(row));
    }
    return m;
}

namespace {

int matrix_cols(const LaurentMatrix& m) {
    return m.empty() ? 0 : static_cast<int>(m.front().size());
}

void check_rectangular(const LaurentMatrix& m) {
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != matrix_cols(m))
            throw std::invalid_argument("matrix rows must all have the same length");
}

} // namespace

SmithResult smith_form(LaurentMatrix m) {
    check_rectangular(m);
    const int rows = static_cast<int>(m.size());
    const int cols = matrix_cols(m);
    SmithResult result;
    int p = 0;
    while (p < rows && p < cols) {
        // Pick the nonzero entry of minimal span in the trailing block.
        int bi = -1, bj = -1;
        long best = -1;
        for (int i = p; i < rows; ++i)
            for (int j = p; j < cols; ++j)
                if (!m[i][j].is_zero() && (bi < 0 || m[i][j].span() < best)) {
                    bi = i;
                    bj = j;
                    best = m[i][j].span();
                }
        if (bi < 0)
            break; // trailing block is zero
        std::swap(m[p], m[bi]);
        if (bj != p)
            for (int i = 0; i < rows; ++i)
                std::swap(m[i][p], m[i][bj]);

        bool again = true;
        while (again) {
            again = false;
            for (int i = p + 1; i < rows; ++i) {
                if (m[i][p].is_zero())
                    continue;
                LaurentPoly q, rem;
                divmod(m[i][p], m[p][p], q, rem);
                for (int j = p; j < cols; ++j)
                    m[i][j] = m[i][j] - q * m[p][j];
                if (!m[i][p].is_zero()) {
                    // Remainder has smaller span than the pivot: promote it.
                    std::swap(m[p], m[i]);
                    again = true;
                }
            }
            if (again)
                continue;
            for (int j = p + 1; j < cols; ++j) {
                if (m[p][j].is_zero())
                    continue;
                LaurentPoly q, rem;
                divmod(m[p][j], m[p][p], q, rem);
                for (int i = p; i < rows; ++i)
                    m[i][j] = m[i][j] - q * m[i][p];
                if (!m[p][j].is_zero()) {
                    for (int i = 0; i < rows; ++i)
                        std::swap(m[i][p], m[i][j]);
                    again = true;
                }
            }
        }

        // Divisibility fix-up: the pivot must divide every remaining entry.
        bool fixed = false;
        for (int i = p + 1; i < rows && !fixed; ++i)
            for (int j = p + 1; j < cols && !fixed; ++j) {
                if (m[i][j].is_zero())
                    continue;
                LaurentPoly q, rem;
                divmod(m[i][j], m[p][p], q, rem);
                if (!rem.is_zero()) {
                    for (int jj = p; jj < cols; ++jj)
                        m[p][jj] = m[p][jj] + m[i][jj];
                    fixed = true;
                }
            }
        if (fixed)
            continue; // re-reduce at the same pivot position

        result.divisors.push_back(normalize(m[p][p]));
        ++p;
    }
    result.rank = static_cast<int>(result.divisors.size());
    return result;
}

AlexanderResult alexander_poly(const Presentation& p) {
    if (p.generators < 1)
        throw std::invalid_argument("presentation needs at least one generator");
    SmithResult s = smith_form(alexander_matrix(p));
    AlexanderResult r;
    for (const auto& d : s.divisors)
        if (!d.is_unit())
            r.elementary_divisors.push_back(d);
    r.free_rank_flag = s.rank < p.generators - 1;
    if (r.free_rank_flag) {
        r.polynomial = LaurentPoly::zero();
    } else {
        LaurentPoly prod = LaurentPoly::one();
        for (const auto& d : r.elementary_divisors)
            prod = prod * d;
        r.polynomial = normalize(prod);
    }
    return r;
}

namespace {

LaurentMatrix identity_matrix(int n) {
    LaurentMatrix m(n, std::vector<LaurentPoly>(n, LaurentPoly::zero()));
    for (int i = 0; i < n; ++i)
        m[i][i] = LaurentPoly::one();
    return m;
}

LaurentMatrix matrix_mul(const LaurentMatrix& a, const LaurentMatrix& b) {
    const int n = static_cast<int>(a.size());
    const int k = matrix_cols(a);
    const int c = matrix_cols(b);
    LaurentMatrix out(n, std::vector<LaurentPoly>(c, LaurentPoly::zero()));
    for (int i = 0; i < n; ++i)
        for (int l = 0; l < k; ++l) {
            if (a[i][l].is_zero())
                continue;
            for (int j = 0; j < c; ++j)
                out[i][j] = out[i][j] + a[i][l] * b[l][j];
        }
    return out;
}

// Reduced Burau image of one Artin letter (i >= 1, sign = +/-1).
LaurentMatrix burau_letter(int n, int i, int sign) {
    const int dim = n - 1;
    LaurentMatrix m = identity_matrix(dim);
    const LaurentPoly t = LaurentPoly::t();
    const LaurentPoly tinv = LaurentPoly::term(Rational(1), -1);
    const int r = i - 1; // row of the twisted strand
    if (sign > 0) {
        m[r][r] = -t;
        if (r - 1 >= 0)
            m[r][r - 1] = t;
        if (r + 1 < dim)
            m[r][r + 1] = LaurentPoly::one();
    } else {
        m[r][r] = -tinv;
        if (r - 1 >= 0)
            m[r][r - 1] = LaurentPoly::one();
        if (r + 1 < dim)
            m[r][r + 1] = tinv;
    }
    return m;
}

} // namespace

LaurentMatrix burau_reduced(const BraidWord& b) {
    if (b.strands < 2)
        throw std::invalid_argument("reduced Burau needs at least 2 strands");
    LaurentMatrix m = identity_matrix(b.strands - 1);
    for (int v : b.letters)
        m = matrix_mul(m, burau_letter(b.strands, v > 0 ? v : -v, v > 0 ? 1 : -1));
    return m;
}

LaurentPoly laurent_det(LaurentMatrix m) {
    check_rectangular(m);
    const int n = static_cast<int>(m.size());
    if (n != matrix_cols(m))
        throw std::invalid_argument("determinant needs a square matrix");
    if (n == 0)
        return LaurentPoly::one();
    // Fraction-free (Bareiss) elimination; every division is exact.
    LaurentPoly prev = LaurentPoly::one();
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k].is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0)
                return LaurentPoly::zero();
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                LaurentPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                auto q = divide_exact(num, prev);
                if (!q)
                    throw std::logic_error("fraction-free elimination division failed");
                m[i][j] = *q;
            }
        prev = m[k][k];
    }
    LaurentPoly det = m[n - 1][n - 1];
    if (sign < 0)
        det = -det;
    return det;
}

LaurentPoly alexander_from_burau(const BraidWord& b) {
    LaurentMatrix m = burau_reduced(b);
    const int dim = static_cast<int>(m.size());
    for (int i = 0; i < dim; ++i)
        m[i][i] = m[i][i] - LaurentPoly::one();
    LaurentPoly det = laurent_det(m);
    if (det.is_zero())
        return LaurentPoly::zero();
    const LaurentPoly one = LaurentPoly::one();
    LaurentPoly num = det * (one - LaurentPoly::t());
    LaurentPoly den = one - LaurentPoly::t().pow(b.strands);
    auto q = divide_exact(num, den);
    if (!q)
        throw std::runtime_error(
            "convention violation: (1 - t^N) does not divide det(Burau - I)(1 - t)");
    return normalize(*q);
}

LaurentPoly cyclotomic_poly(int n) {
    if (n < 1)
        throw std::invalid_argument("cyclotomic index must be positive");
    thread_local std::map<int, LaurentPoly> cache;
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;
    const LaurentPoly tn_minus_1 = LaurentPoly::t().pow(n) - LaurentPoly::one();
    LaurentPoly acc = LaurentPoly::one();
    for (int d = 1; d < n; ++d)
        if (n % d == 0)
            acc = acc * cyclotomic_poly(d);
    auto q = divide_exact(tn_minus_1, acc);
    if (!q)
        throw std::logic_error("cyclotomic recursion produced a non-exact division");
    cache[n] = *q;
    return *q;
}

LaurentPoly hopf_link(int d) {
    if (d < 2)
        throw std::invalid_argument("hopf_link requires d >= 2");
    const LaurentPoly t = LaurentPoly::t();
    return (t - LaurentPoly::one()) * (t.pow(d) - LaurentPoly::one()).pow(d - 2);
}

LaurentPoly delta_closure_even(int d) {
    if (d < 2 || d % 2 != 0)
        throw std::invalid_argument("delta_closure_even requires even d >= 2");
    const LaurentPoly t = LaurentPoly::t();
    const LaurentPoly one = LaurentPoly::one();
    return (t.pow(d) - one).pow(d / 2 - 1) * (t.pow(d / 2) + one) * (t - one);
}

LaurentPoly delta_closure_odd(int d) {
    if (d < 3 || d % 2 != 1)
        throw std::invalid_argument("delta_closure_odd requires odd d >= 3");
    const LaurentPoly t = LaurentPoly::t();
    const LaurentPoly one = LaurentPoly::one();
    return (t.pow(d) - one).pow((d - 1) / 2) * (t - one);
}

LaurentPoly milnor_orlik(int a, int b) {
    if (a < 2 || b < 2)
        throw std::invalid_argument("milnor_orlik requires both exponents >= 2");
    // The roots are e^{2 pi i (i/a + j/b)}; reduce each phase to p/q in
    // lowest terms and count how often each residue appears.
    std::map<long, std::map<long, long>> counts; // order q -> residue p -> count
    const long den = static_cast<long>(a) * b;
    for (long i = 1; i < a; ++i)
        for (long j = 1; j < b; ++j) {
            long num = (i * b + j * a) % den;
            long g = std::gcd(num, den); // gcd(0, den) = den, mapping 0 to 0/1
            long q = den / g;
            long p = (num / g) % q;
            counts[q][p]++;
        }
    LaurentPoly result = LaurentPoly::one();
    for (const auto& [q, residues] : counts) {
        long phi = 0;
        for (long p = 0; p < q; ++p)
            if (std::gcd(p, q) == 1)
                ++phi;
        const long mult = residues.begin()->second;
        for (const auto& [p, c] : residues)
            if (c != mult)
                throw std::logic_error("root multiplicities differ within one Galois orbit");
        if (static_cast<long>(residues.size()) != phi)
            throw std::logic_error("Galois orbit of roots is only partially populated");
        result = result * cyclotomic_poly(static_cast<int>(q)).pow(mult);
    }
    return result;
}

bool check_divisibility(const Presentation& sub, const Presentation& full) {
    if (sub.generators != full.generators)
        throw std::invalid_argument("divisibility check requires matching generator counts");
    AlexanderResult fr = alexander_poly(full);
    if (fr.polynomial.is_zero())
        return true; // everything divides 0
    AlexanderResult sr = alexander_poly(sub);
    if (sr.polynomial.is_zero())
        return false; // 0 divides only 0
    return divides_up_to_units(sr.polynomial, fr.polynomial);
}

std::string to_text(const AlexanderResult& r) {
    std::ostringstream out;
    out << "poly: " << to_text(r.polynomial) << "\n";
    out << "divisors: [";
    for (std::size_t i = 0; i < r.elementary_divisors.size(); ++i) {
        if (i)
            out << ", ";
        out << to_text(r.elementary_divisors[i]);
    }
    out << "]\n";
    out << "free: " << (r.free_rank_flag ? "true" : "false") << "\n";
    return out.str();
}

} // namespace braidre
