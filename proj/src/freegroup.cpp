#include "braidre/freegroup.hpp"

#include <sstream>

namespace braidre {

namespace {

void check_letter(int rank, int v) {
    if (v == 0) throw std::invalid_argument("zero letter in free word");
    int j = v > 0 ? v : -v;
    if (j > rank) throw std::invalid_argument("letter index exceeds rank");
}

void push_reduced(std::vector<int>& out, int v) {
    if (!out.empty() && out.back() == -v)
        out.pop_back();
    else
        out.push_back(v);
}

} // namespace

FreeWord::FreeWord(int r, std::vector<int> w) : rank(r) {
    if (r < 0) throw std::invalid_argument("negative rank");
    letters.reserve(w.size());
    for (int v : w) {
        check_letter(r, v);
        push_reduced(letters, v);
    }
}

FreeWord FreeWord::generator(int r, int j) {
    FreeWord w;
    w.rank = r;
    check_letter(r, j);
    w.letters.push_back(j);
    return w;
}

int FreeWord::exponent_sum() const {
    int s = 0;
    for (int v : letters) s += v > 0 ? 1 : -1;
    return s;
}

bool FreeWord::operator<(const FreeWord& o) const {
    if (rank != o.rank) return rank < o.rank;
    return letters < o.letters;
}

FreeWord mul(const FreeWord& a, const FreeWord& b) {
    if (a.rank != b.rank) throw std::invalid_argument("rank mismatch");
    FreeWord r;
    r.rank = a.rank;
    r.letters = a.letters;
    for (int v : b.letters) push_reduced(r.letters, v);
    return r;
}

FreeWord inverse(const FreeWord& w) {
    FreeWord r;
    r.rank = w.rank;
    r.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back(-*it);
    return r;
}

FreeAuto::FreeAuto(int r) : rank(r) {
    images.reserve(r);
    for (int j = 1; j <= r; ++j) images.push_back(FreeWord::generator(r, j));
}

FreeAuto::FreeAuto(int r, std::vector<FreeWord> imgs) : rank(r), images(std::move(imgs)) {
    if (static_cast<int>(images.size()) != r) throw std::invalid_argument("image count != rank");
    for (auto& w : images)
        if (w.rank != r) throw std::invalid_argument("image rank mismatch");
}

FreeWord FreeAuto::apply(const FreeWord& w) const {
    if (w.rank != rank) throw std::invalid_argument("rank mismatch");
    FreeWord r;
    r.rank = rank;
    for (int v : w.letters) {
        const FreeWord& img = images[(v > 0 ? v : -v) - 1];
        if (v > 0) {
            for (int u : img.letters) push_reduced(r.letters, u);
        } else {
            for (auto it = img.letters.rbegin(); it != img.letters.rend(); ++it)
                push_reduced(r.letters, -*it);
        }
    }
    return r;
}

bool FreeAuto::is_identity() const {
    for (int j = 1; j <= rank; ++j) {
        const FreeWord& img = images[j - 1];
        if (img.letters.size() != 1 || img.letters[0] != j) return false;
    }
    return true;
}

FreeAuto compose(const FreeAuto& a, const FreeAuto& b) {
    if (a.rank != b.rank) throw std::invalid_argument("rank mismatch");
    std::vector<FreeWord> imgs;
    imgs.reserve(a.rank);
    for (const FreeWord& w : a.images) imgs.push_back(b.apply(w));
    return FreeAuto(a.rank, std::move(imgs));
}

namespace {

// s_i substitution (sign=+1) or its inverse (sign=-1), applied in place.
FreeWord apply_braid_letter(const FreeWord& w, int i, int sign) {
    FreeWord r;
    r.rank = w.rank;
    auto push = [&r](int v) { push_reduced(r.letters, v); };
    for (int v : w.letters) {
        int j = v > 0 ? v : -v;
        bool pos = v > 0;
        if (sign > 0) {
            // x_i -> x_i^{-1} x_{i+1} x_i,  x_{i+1} -> x_i
            if (j == i) {
                if (pos) { push(-i); push(i + 1); push(i); }
                else     { push(-i); push(-(i + 1)); push(i); }
            } else if (j == i + 1) {
                push(pos ? i : -i);
            } else {
                push(v);
            }
        } else {
            // inverse substitution: x_i -> x_{i+1},  x_{i+1} -> x_{i+1} x_i x_{i+1}^{-1}
            if (j == i) {
                push(pos ? i + 1 : -(i + 1));
            } else if (j == i + 1) {
                if (pos) { push(i + 1); push(i); push(-(i + 1)); }
                else     { push(i + 1); push(-i); push(-(i + 1)); }
            } else {
                push(v);
            }
        }
    }
    return r;
}

} // namespace

FreeWord artin_action(const BraidWord& b, const FreeWord& w) {
    if (w.rank != b.strands) throw std::invalid_argument("rank must equal strand count");
    FreeWord cur = w;
    for (int letter : b.letters) {
        int i = letter > 0 ? letter : -letter;
        cur = apply_braid_letter(cur, i, letter > 0 ? 1 : -1);
    }
    return cur;
}

FreeAuto artin_automorphism(const BraidWord& b) {
    std::vector<FreeWord> imgs;
    imgs.reserve(b.strands);
    for (int j = 1; j <= b.strands; ++j)
        imgs.push_back(artin_action(b, FreeWord::generator(b.strands, j)));
    return FreeAuto(b.strands, std::move(imgs));
}

FreeAuto conj_involution(const ConjParams& params) {
    const int n = params.strands, k = params.pairs;
    std::vector<FreeWord> imgs;
    imgs.reserve(n);
    for (int i = 1; i <= n; ++i) {
        std::vector<int> w;
        if (i <= k || i >= n - k + 1) {
            w.push_back(-(n + 1 - i));
        } else {
            // x_i -> (x_{n-k} ... x_{i+1}) x_i^{-1} (x_{i+1}^{-1} ... x_{n-k}^{-1})
            for (int j = n - k; j >= i + 1; --j) w.push_back(j);
            w.push_back(-i);
            for (int j = i + 1; j <= n - k; ++j) w.push_back(-j);
        }
        imgs.emplace_back(n, std::move(w));
    }
    return FreeAuto(n, std::move(imgs));
}

void GroupRingElem::add(const FreeWord& w, const BigInt& c) {
    if (c == 0) return;
    auto it = coeffs.find(w);
    if (it == coeffs.end()) {
        coeffs.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
}

GroupRingElem ring_add(const GroupRingElem& a, const GroupRingElem& b) {
    if (a.rank != b.rank) throw std::invalid_argument("rank mismatch");
    GroupRingElem r = a;
    for (auto& [w, c] : b.coeffs) r.add(w, c);
    return r;
}

GroupRingElem ring_mul(const GroupRingElem& a, const GroupRingElem& b) {
    if (a.rank != b.rank) throw std::invalid_argument("rank mismatch");
    GroupRingElem r(a.rank);
    for (auto& [w1, c1] : a.coeffs)
        for (auto& [w2, c2] : b.coeffs) r.add(mul(w1, w2), c1 * c2);
    return r;
}

GroupRingElem fox_derivative(const FreeWord& w, int j) {
    if (j < 1 || j > w.rank) throw std::invalid_argument("derivative index out of range");
    // d(uv) = du + u dv, d(x_j) = 1, d(x_j^{-1}) = -x_j^{-1}; one pass with the
    // running prefix.
    GroupRingElem r(w.rank);
    FreeWord prefix;
    prefix.rank = w.rank;
    for (int v : w.letters) {
        if (v == j) {
            r.add(prefix, 1);
        } else if (v == -j) {
            r.add(mul(prefix, inverse(FreeWord::generator(w.rank, j))), -1);
        }
        prefix.letters.push_back(v);  // already reduced: w is reduced
    }
    return r;
}

LaurentPoly phi(const GroupRingElem& e) {
    LaurentPoly p;
    for (auto& [w, c] : e.coeffs) p.add_term(w.exponent_sum(), Rational(c));
    return p;
}

std::string to_text(const FreeWord& w) {
    std::ostringstream os;
    for (size_t i = 0; i < w.letters.size(); ++i) {
        if (i) os << ' ';
        os << w.letters[i];
    }
    return os.str();
}

FreeWord parse_free_word(int rank, const std::string& text) {
    std::istringstream is(text);
    std::vector<int> letters;
    int v;
    while (is >> v) letters.push_back(v);
    if (!is.eof()) throw std::invalid_argument("bad free word text");
    return FreeWord(rank, std::move(letters));
}

} // namespace braidre
