#include "braidre/braid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "braidre/freegroup.hpp"

namespace braidre {

namespace {

void check_letter(int strands, int v) {
    if (v == 0) throw std::invalid_argument("zero letter in braid word");
    int i = v > 0 ? v : -v;
    if (i >= strands) throw std::invalid_argument("letter index exceeds strand count");
}

} // namespace

BraidWord::BraidWord(int n, std::vector<int> w) : strands(n), letters(std::move(w)) {
    if (n < 1) throw std::invalid_argument("strand count must be >= 1");
    for (int v : letters) check_letter(n, v);
}

int BraidWord::exponent_sum() const {
    int s = 0;
    for (int v : letters) s += v > 0 ? 1 : -1;
    return s;
}

BraidWord compose(const BraidWord& a, const BraidWord& b) {
    if (a.strands != b.strands) throw std::invalid_argument("strand count mismatch");
    BraidWord r = a;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
}

BraidWord inverse(const BraidWord& b) {
    BraidWord r;
    r.strands = b.strands;
    r.letters.reserve(b.letters.size());
    for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it) r.letters.push_back(-*it);
    return r;
}

BraidWord rev(const BraidWord& b) {
    BraidWord r = b;
    std::reverse(r.letters.begin(), r.letters.end());
    return r;
}

BraidWord rmap(const BraidWord& b) {
    BraidWord r = b;
    for (int& v : r.letters) v = v > 0 ? b.strands - v : -(b.strands + v);
    return r;
}

BraidWord free_reduce(const BraidWord& b) {
    BraidWord r;
    r.strands = b.strands;
    for (int v : b.letters) {
        if (!r.letters.empty() && r.letters.back() == -v)
            r.letters.pop_back();
        else
            r.letters.push_back(v);
    }
    return r;
}

BraidWord delta(int strands) { return block_half_twist(strands, 1, strands); }

BraidWord block_half_twist(int strands, int lo, int hi) {
    if (lo < 1 || hi > strands || lo > hi)
        throw std::invalid_argument("bad block bounds");
    BraidWord r;
    r.strands = strands;
    for (int row = lo; row < hi; ++row)
        for (int i = row; i >= lo; --i) r.letters.push_back(i);
    return r;
}

BraidWord block_full_twist(int strands, int lo, int hi) {
    BraidWord h = block_half_twist(strands, lo, hi);
    return compose(h, h);
}

BraidWord stabilize(const BraidWord& b, int n) {
    if (n < b.strands) throw std::invalid_argument("cannot lower strand count");
    BraidWord r = b;
    r.strands = n;
    return r;
}

std::vector<int> strand_permutation(const BraidWord& b) {
    std::vector<int> occ(b.strands);  // occ[slot] = strand currently at slot
    std::iota(occ.begin(), occ.end(), 0);
    for (int v : b.letters) {
        int i = (v > 0 ? v : -v) - 1;
        std::swap(occ[i], occ[i + 1]);
    }
    std::vector<int> perm(b.strands);
    for (int slot = 0; slot < b.strands; ++slot) perm[occ[slot]] = slot;
    return perm;
}

namespace {

// Images of the generators under the conjugation automorphism, as braid words.
std::vector<BraidWord> conj_bar_images(int n, int k) {
    std::vector<BraidWord> img(n);  // img[i-1] = image of s_i, i = 1..n-1
    auto gen = [n](int i, int sign) { return BraidWord(n, {sign > 0 ? i : -i}); };
    const int m = n - 2 * k;
    for (int i = 1; i <= n - 1; ++i) {
        if (m <= 1) {
            img[i - 1] = gen(n - i, -1);
        } else if (k == 0) {
            img[i - 1] = gen(i, -1);
        } else if (i <= k - 1 || i >= n - k + 1) {
            img[i - 1] = gen(n - i, -1);
        } else if (i >= k + 1 && i <= n - k - 1) {
            img[i - 1] = gen(i, -1);
        } else if (i == k) {
            // (s_{k+2} ... s_{n-k})^{-1} s_{k+1}^{-1} (s_{k+2} ... s_{n-k})
            std::vector<int> w;
            for (int j = n - k; j >= k + 2; --j) w.push_back(-j);
            w.push_back(-(k + 1));
            for (int j = k + 2; j <= n - k; ++j) w.push_back(j);
            img[i - 1] = BraidWord(n, std::move(w));
        } else {  // i == n - k
            // s_{n-k-1} ... s_{k+1} s_k^{-1} s_{k+1}^{-1} ... s_{n-k-1}^{-1}
            std::vector<int> w;
            for (int j = n - k - 1; j >= k + 1; --j) w.push_back(j);
            w.push_back(-k);
            for (int j = k + 1; j <= n - k - 1; ++j) w.push_back(-j);
            img[i - 1] = BraidWord(n, std::move(w));
        }
    }
    return img;
}

} // namespace

BraidWord conj_bar(const BraidWord& b, const ConjParams& params) {
    if (params.strands != b.strands) throw std::invalid_argument("strand count mismatch");
    auto img = conj_bar_images(params.strands, params.pairs);
    BraidWord r;
    r.strands = b.strands;
    for (int v : b.letters) {
        int i = v > 0 ? v : -v;
        const BraidWord& w = v > 0 ? img[i - 1] : inverse(img[i - 1]);
        r.letters.insert(r.letters.end(), w.letters.begin(), w.letters.end());
    }
    return free_reduce(r);
}

bool equals(const BraidWord& a, const BraidWord& b) {
    if (a.strands != b.strands) throw std::invalid_argument("strand count mismatch");
    BraidWord d = compose(a, inverse(b));
    return is_trivial(d);
}

bool is_trivial(const BraidWord& b) {
    BraidWord r = free_reduce(b);
    if (r.letters.empty()) return true;
    if (r.exponent_sum() != 0) return false;
    for (int j = 1; j <= r.strands; ++j) {
        FreeWord g = FreeWord::generator(r.strands, j);
        if (artin_action(r, g) != g) return false;
    }
    return true;
}

std::string to_text(const BraidWord& b) {
    std::ostringstream os;
    os << 'B' << b.strands;
    for (int v : b.letters) os << ' ' << v;
    return os.str();
}

BraidWord parse_braid(const std::string& text) {
    std::istringstream is(text);
    std::string head;
    if (!(is >> head) || head.size() < 2 || head[0] != 'B' ||
        head.find_first_not_of("0123456789", 1) != std::string::npos)
        throw std::invalid_argument("malformed braid header (expected B<N>)");
    int n;
    try {
        n = std::stoi(head.substr(1));
    } catch (...) {
        throw std::invalid_argument("malformed braid header (expected B<N>)");
    }
    if (n < 1) throw std::invalid_argument("malformed braid header (expected B<N>)");
    std::vector<int> letters;
    int v;
    while (is >> v) {
        if (v == 0) throw std::invalid_argument("zero generator index in braid word");
        int i = v > 0 ? v : -v;
        if (i >= n)
            throw std::invalid_argument("generator index " + std::to_string(i) +
                                        " out of range for " + std::to_string(n) + " strands");
        letters.push_back(v);
    }
    if (!is.eof()) throw std::invalid_argument("bad braid letter (expected integer)");
    return BraidWord(n, std::move(letters));
}

} // namespace braidre
