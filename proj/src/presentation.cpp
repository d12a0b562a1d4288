#include "braidre/presentation.hpp"

#include <sstream>
#include <stdexcept>

namespace braidre {

Presentation van_kampen(const std::vector<BraidWord>& braids, int d) {
    if (d < 1)
        throw std::invalid_argument("van Kampen needs a positive strand count");
    for (const auto& b : braids)
        if (b.strands != d)
            throw std::invalid_argument("van Kampen braids must share the strand count");

    Presentation p;
    p.generators = d;
    for (std::size_t i = 0; i < braids.size(); ++i) {
        for (int j = 1; j <= d; ++j) {
            FreeWord image = artin_action(braids[i], FreeWord::generator(d, j));
            FreeWord rel = mul(image, inverse(FreeWord::generator(d, j)));
            if (rel.letters.empty())
                continue; // the braid fixes this generator
            p.relators.push_back(rel);
            p.provenance.emplace_back(static_cast<int>(i) + 1, j);
        }
    }
    return p;
}

Presentation van_kampen(const std::vector<BraidWord>& braids) {
    if (braids.empty())
        throw std::invalid_argument("van Kampen with no braids needs an explicit strand count");
    return van_kampen(braids, braids.front().strands);
}

Presentation link_group(const BraidWord& b) {
    return van_kampen({b});
}

std::string to_text(const Presentation& p) {
    std::ostringstream out;
    out << "gens: " << p.generators << "\n";
    for (const auto& r : p.relators)
        out << to_text(r) << "\n";
    return out.str();
}

Presentation parse_presentation(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    Presentation p;
    bool header = false;
    while (std::getline(in, line)) {
        // trim
        auto a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos)
            continue;
        auto b = line.find_last_not_of(" \t\r");
        line = line.substr(a, b - a + 1);
        if (!header) {
            if (line.rfind("gens:", 0) != 0)
                throw std::invalid_argument("presentation must start with 'gens: <d>'");
            p.generators = std::stoi(line.substr(5));
            if (p.generators <= 0)
                throw std::invalid_argument("presentation needs a positive generator count");
            header = true;
            continue;
        }
        p.relators.push_back(parse_free_word(p.generators, line));
        p.provenance.emplace_back(0, 0); // unknown origin for parsed input
    }
    if (!header)
        throw std::invalid_argument("presentation must start with 'gens: <d>'");
    return p;
}

} // namespace braidre
