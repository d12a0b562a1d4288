// Garside left normal form and conjugacy-to-Delta via cycling/decycling.
//
// Permutation braids (positive braids where each strand pair crosses at most
// once) are recorded as endpoint permutations perm[start] = end, 0-based, with
// composition convention perm(ab) = perm_b o perm_a (letters act left to
// right, matching the rest of the library).

#include <algorithm>
#include <numeric>

#include "braidre/braid.hpp"

namespace braidre {

namespace {

using Perm = std::vector<int>;

Perm identity_perm(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm delta_perm(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = n - 1 - i;
    return p;
}

bool is_identity(const Perm& p) {
    for (int i = 0; i < (int)p.size(); ++i)
        if (p[i] != i) return false;
    return true;
}

bool is_delta(const Perm& p) {
    int n = (int)p.size();
    for (int i = 0; i < n; ++i)
        if (p[i] != n - 1 - i) return false;
    return true;
}

// apply a, then b
Perm compose_perm(const Perm& a, const Perm& b) {
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
    return r;
}

Perm inverse_perm(const Perm& p) {
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[p[i]] = i;
    return r;
}

// Conjugation by Delta on permutation braids: tau(P) = Delta^{-1} P Delta has
// permutation w p w with w the order-reversing involution.
Perm tau(const Perm& p) {
    int n = (int)p.size();
    Perm r(n);
    for (int i = 0; i < n; ++i) r[n - 1 - i] = n - 1 - p[i];
    return r;
}

// Starting set: S(P) = { i : s_i is a left divisor }, i.e. descents of perm.
// Finishing set F(P) = descents of perm^{-1}. 1-based generator indices.
bool in_starting_set(const Perm& p, int i) { return p[i - 1] > p[i]; }
bool in_finishing_set_inv(const Perm& pinv, int i) { return pinv[i - 1] > pinv[i]; }

// Left-weight the adjacent pair (a, b): slide initial letters of b into a
// while legal. Returns true if anything moved.
bool left_weight_pair(Perm& a, Perm& b) {
    int n = (int)a.size();
    bool moved = false;
    bool progress = true;
    Perm ainv = inverse_perm(a);
    while (progress) {
        progress = false;
        for (int i = 1; i < n; ++i) {
            if (in_starting_set(b, i) && !in_finishing_set_inv(ainv, i)) {
                // b = s_i b', a' = a s_i
                std::swap(b[i - 1], b[i]);
                std::swap(ainv[i - 1], ainv[i]);
                progress = true;
                moved = true;
            }
        }
    }
    a = inverse_perm(ainv);
    return moved;
}

struct FactorForm {
    int strands;
    long inf = 0;
    std::vector<Perm> factors;
};

// Left-weight the whole sequence, drop identities, absorb leading Deltas.
void normalize_factor_form(FactorForm& f) {
    auto& fs = f.factors;
    fs.erase(std::remove_if(fs.begin(), fs.end(), [](const Perm& p) { return is_identity(p); }),
             fs.end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t j = 0; j + 1 < fs.size(); ++j)
            if (left_weight_pair(fs[j], fs[j + 1])) changed = true;
        size_t before = fs.size();
        fs.erase(std::remove_if(fs.begin(), fs.end(), [](const Perm& p) { return is_identity(p); }),
                 fs.end());
        if (fs.size() != before) changed = true;
    }
    while (!fs.empty() && is_delta(fs.front())) {
        fs.erase(fs.begin());
        ++f.inf;
    }
}

FactorForm to_factor_form(const BraidWord& b) {
    const int n = b.strands;
    FactorForm f{n};
    for (int v : b.letters) {
        int i = v > 0 ? v : -v;
        if (v > 0) {
            Perm p = identity_perm(n);
            std::swap(p[i - 1], p[i]);
            f.factors.push_back(std::move(p));
        } else {
            // s_i^{-1} = Delta^{-1} (Delta s_i^{-1}); moving Delta^{-1} to the
            // front twists every factor already collected.
            --f.inf;
            for (Perm& q : f.factors) q = tau(q);
            Perm d = delta_perm(n);
            // perm of Delta s_i^{-1} is sigma_i o omega: drop the crossing at
            // the mirrored position
            std::swap(d[n - 1 - i], d[n - i]);
            f.factors.push_back(std::move(d));
        }
    }
    normalize_factor_form(f);
    return f;
}

BraidWord perm_word(int strands, Perm p) {
    // peel letters off the back: last letter s_i needs a descent of p^{-1}
    std::vector<int> rev_letters;
    Perm pinv = inverse_perm(p);
    while (!is_identity(pinv)) {
        int found = 0;
        for (int i = 1; i < strands; ++i) {
            if (pinv[i - 1] > pinv[i]) {
                found = i;
                break;
            }
        }
        rev_letters.push_back(found);
        std::swap(pinv[found - 1], pinv[found]);
    }
    std::reverse(rev_letters.begin(), rev_letters.end());
    return BraidWord(strands, std::move(rev_letters));
}

} // namespace

NormalForm left_normal_form(const BraidWord& b) {
    FactorForm f = to_factor_form(b);
    NormalForm nf;
    nf.strands = b.strands;
    nf.inf = f.inf;
    nf.factors = std::move(f.factors);
    return nf;
}

BraidWord permutation_braid_word(int strands, const std::vector<int>& perm) {
    return perm_word(strands, perm);
}

BraidWord normal_form_word(const NormalForm& nf) {
    BraidWord r(nf.strands);
    BraidWord d = delta(nf.strands);
    for (long i = 0; i < nf.inf; ++i) r = compose(r, d);
    for (long i = nf.inf; i < 0; ++i) r = compose(r, inverse(d));
    for (const auto& p : nf.factors) r = compose(r, perm_word(nf.strands, p));
    return r;
}

namespace {

// tau^e on a factor (tau is an involution on permutations).
Perm tau_pow(const Perm& p, long e) { return (e % 2 == 0) ? p : tau(p); }

void cycle(FactorForm& f) {
    if (f.factors.empty()) return;
    Perm head = f.factors.front();
    f.factors.erase(f.factors.begin());
    f.factors.push_back(tau_pow(head, f.inf));
    normalize_factor_form(f);
}

void decycle(FactorForm& f) {
    if (f.factors.empty()) return;
    Perm tail = f.factors.back();
    f.factors.pop_back();
    f.factors.insert(f.factors.begin(), tau_pow(tail, f.inf));
    normalize_factor_form(f);
}

bool same_cycle_type(const Perm& a, const Perm& b) {
    auto type = [](const Perm& p) {
        std::vector<int> lens;
        std::vector<bool> seen(p.size(), false);
        for (size_t i = 0; i < p.size(); ++i) {
            if (seen[i]) continue;
            int len = 0;
            for (size_t j = i; !seen[j]; j = p[j]) {
                seen[j] = true;
                ++len;
            }
            lens.push_back(len);
        }
        std::sort(lens.begin(), lens.end());
        return lens;
    };
    return type(a) == type(b);
}

} // namespace

bool conjugate_to_delta(const BraidWord& b) {
    const int n = b.strands;
    if (n == 1) return b.letters.empty();
    // conjugacy invariants: exponent sum and permutation cycle type
    if (b.exponent_sum() != n * (n - 1) / 2) return false;
    if (!same_cycle_type(strand_permutation(b), delta_perm(n))) return false;

    FactorForm f = to_factor_form(b);
    // Raise inf by cycling, lower sup by decycling, until both stabilize.
    // Between strict improvements at most canonical-length many steps are
    // needed; the cap is generous.
    bool improved = true;
    while (improved && !f.factors.empty()) {
        improved = false;
        long cap = static_cast<long>(f.factors.size()) * n + 1;
        long inf0 = f.inf;
        for (long s = 0; s < cap && !f.factors.empty(); ++s) {
            cycle(f);
            if (f.inf > inf0) {
                improved = true;
                break;
            }
        }
        if (f.factors.empty()) break;
        cap = static_cast<long>(f.factors.size()) * n + 1;
        size_t sup0 = f.factors.size();
        long inf1 = f.inf;
        for (long s = 0; s < cap && !f.factors.empty(); ++s) {
            decycle(f);
            if (f.inf + (long)f.factors.size() < inf1 + (long)sup0) {
                improved = true;
                break;
            }
        }
    }
    return f.factors.empty() && f.inf == 1;
}

} // namespace braidre
