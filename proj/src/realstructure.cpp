#include "braidre/realstructure.hpp"

#include <sstream>
#include <stdexcept>

namespace braidre {

RealFactorization::RealFactorization(int d, int k, std::vector<BraidWord> upper_braids,
                                     std::vector<BraidWord> real_braids)
    : strands(d), fiber(d, k), upper(std::move(upper_braids)), real(std::move(real_braids)) {
    for (const auto& b : upper)
        if (b.strands != strands)
            throw std::invalid_argument("upper braids must live on the factorization's strands");
    for (const auto& b : real)
        if (b.strands != strands)
            throw std::invalid_argument("real braids must live on the factorization's strands");
}

namespace {

BraidWord product_of(int strands, const std::vector<BraidWord>& braids) {
    BraidWord acc{strands, {}};
    for (const auto& b : braids)
        acc = compose(acc, b);
    return acc;
}

} // namespace

std::vector<BraidWord> derive_lower(const RealFactorization& f) {
    std::vector<BraidWord> lower;
    lower.reserve(f.upper.size());
    for (auto it = f.upper.rbegin(); it != f.upper.rend(); ++it)
        lower.push_back(inverse(conj_bar(*it, f.fiber)));
    return lower;
}

bool verify_decomposition(const RealFactorization& f) {
    if (2 * f.fiber.pairs < f.strands - 1)
        throw std::invalid_argument(
            "decomposition check requires a fiber with at most one real point (2k >= d - 1)");
    BraidWord upper_prod = product_of(f.strands, f.upper);
    BraidWord real_prod = product_of(f.strands, f.real);
    BraidWord total = compose(compose(upper_prod, real_prod), rmap(rev(upper_prod)));
    BraidWord full_twist = compose(delta(f.strands), delta(f.strands));
    return equals(total, full_twist);
}

bool check_central_equation(const BraidWord& b) {
    BraidWord full_twist = compose(delta(b.strands), delta(b.strands));
    return equals(compose(b, rmap(rev(b))), full_twist);
}

RealFactorization build_acnode(int d2, int k2) {
    if (d2 % 2 != 0 || k2 % 2 != 0)
        throw std::invalid_argument("acnode model needs even strand and block counts");
    if (k2 < 2 || k2 > d2)
        throw std::invalid_argument("acnode block size must satisfy 2 <= k2 <= d2");
    const int lo = (d2 - k2) / 2 + 1;
    const int hi = lo + k2 - 1;
    std::vector<BraidWord> real_braids{block_full_twist(d2, lo, hi)};
    std::vector<BraidWord> upper_braids{
        compose(delta(d2), inverse(block_half_twist(d2, lo, hi)))};
    return RealFactorization(d2, d2 / 2, std::move(upper_braids), std::move(real_braids));
}

std::vector<BraidWord> build_unreal_arrangement(const std::vector<int>& r) {
    if (r.empty())
        throw std::invalid_argument("arrangement requires at least one group of lines");
    int total = 0;
    for (int ri : r) {
        if (ri < 1)
            throw std::invalid_argument("every arrangement group needs at least one line pair");
        total += ri;
    }
    const int d = 2 * total;
    std::vector<BraidWord> blocks;
    blocks.reserve(r.size());
    int start = 1;
    for (int ri : r) {
        blocks.push_back(block_full_twist(d, start, start + 2 * ri - 1));
        start += 2 * ri;
    }
    return blocks;
}

bool verify_garside_class(const RealFactorization& f) {
    if (!f.real.empty())
        throw std::invalid_argument("not in the empty-real-critical-values regime");
    return conjugate_to_delta(product_of(f.strands, f.upper));
}

std::string to_text(const RealFactorization& f) {
    std::ostringstream out;
    out << "strands: " << f.strands << "\n";
    out << "fiber_real_points: " << f.fiber.real_points() << "\n";
    out << "upper:\n";
    for (const auto& b : f.upper)
        out << to_text(b) << "\n";
    out << "real:\n";
    for (const auto& b : f.real)
        out << to_text(b) << "\n";
    return out.str();
}

RealFactorization parse_real_factorization(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int strands = -1, real_points = -1;
    std::vector<BraidWord> upper_braids, real_braids;
    enum class Section { Header, Upper, Real } section = Section::Header;
    while (std::getline(in, line)) {
        auto a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos)
            continue;
        auto b = line.find_last_not_of(" \t\r");
        line = line.substr(a, b - a + 1);
        if (line.rfind("strands:", 0) == 0 && section == Section::Header) {
            strands = std::stoi(line.substr(8));
            continue;
        }
        if (line.rfind("fiber_real_points:", 0) == 0 && section == Section::Header) {
            real_points = std::stoi(line.substr(18));
            continue;
        }
        if (line == "upper:") {
            section = Section::Upper;
            continue;
        }
        if (line == "real:") {
            section = Section::Real;
            continue;
        }
        if (section == Section::Upper)
            upper_braids.push_back(parse_braid(line));
        else if (section == Section::Real)
            real_braids.push_back(parse_braid(line));
        else
            throw std::invalid_argument("unexpected line before the upper section: " + line);
    }
    if (strands < 1)
        throw std::invalid_argument("factorization needs a 'strands: <d>' header");
    if (real_points < 0)
        throw std::invalid_argument("factorization needs a 'fiber_real_points: <m>' header");
    if ((strands - real_points) % 2 != 0 || real_points > strands)
        throw std::invalid_argument("fiber_real_points must leave an even number of non-real points");
    return RealFactorization(strands, (strands - real_points) / 2, std::move(upper_braids),
                             std::move(real_braids));
}

} // namespace braidre
