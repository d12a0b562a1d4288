#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "braidre/presentation.hpp"

using namespace braidre;

namespace {

BraidWord random_braid(std::mt19937& rng, int n, int len) {
    std::uniform_int_distribution<int> gen(1, n - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    std::vector<int> w;
    for (int i = 0; i < len; ++i)
        w.push_back(sign(rng) ? gen(rng) : -gen(rng));
    return BraidWord(n, w);
}

} // namespace

TEST_CASE("presentation of a single positive crossing collapses to Z") {
    Presentation p = van_kampen({BraidWord(2, {1})});
    CHECK(p.generators == 2);
    REQUIRE(p.relators.size() == 2);
    CHECK(p.relators[0] == FreeWord(2, {-1, 2}));
    CHECK(p.relators[1] == FreeWord(2, {1, -2}));
    CHECK(p.provenance == std::vector<std::pair<int, int>>{{1, 1}, {1, 2}});
}

TEST_CASE("empty factorizations present free groups") {
    Presentation p = van_kampen({}, 3);
    CHECK(p.generators == 3);
    CHECK(p.relators.empty());
    CHECK_THROWS_AS(van_kampen(std::vector<BraidWord>{}), std::invalid_argument);
}

TEST_CASE("full twist on two strands presents the commutator") {
    Presentation p = van_kampen({BraidWord(2, {1, 1})});
    REQUIRE(p.relators.size() == 2);
    CHECK(p.relators[0] == FreeWord(2, {-1, -2, 1, 2}));
    CHECK(p.relators[1] == FreeWord(2, {-1, 2, 1, -2}));
}

TEST_CASE("fixed generators produce no relators") {
    Presentation p = van_kampen({BraidWord(3, {1})});
    REQUIRE(p.relators.size() == 2);
    CHECK(p.provenance == std::vector<std::pair<int, int>>{{1, 1}, {1, 2}});
    CHECK(van_kampen({BraidWord(3, {})}).relators.empty());
}

TEST_CASE("multiple braids stack their relators with provenance") {
    Presentation p = van_kampen({BraidWord(3, {1}), BraidWord(3, {2})});
    REQUIRE(p.relators.size() == 4);
    CHECK(p.provenance ==
          std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}, {2, 3}});
    CHECK_THROWS_AS(van_kampen({BraidWord(3, {1}), BraidWord(4, {1})}),
                    std::invalid_argument);
}

TEST_CASE("link group keeps every relator") {
    Presentation p = link_group(BraidWord(2, {1, 1}));
    CHECK(p.generators == 2);
    CHECK(p.relators.size() == 2);
    CHECK(link_group(BraidWord(2, {})).relators.empty());
}

TEST_CASE("the three-strand full twist conjugates by the boundary word") {
    BraidWord full(3, {1, 2, 1, 1, 2, 1});
    FreeWord boundary(3, {3, 2, 1});
    for (int j = 1; j <= 3; ++j) {
        FreeWord x = FreeWord::generator(3, j);
        FreeWord image = artin_action(full, x);
        CHECK(image == mul(mul(inverse(boundary), x), boundary));
    }
    // so every relator of its link group is a conjugation relator
    Presentation p = link_group(full);
    CHECK(p.relators.size() == 3);
}

TEST_CASE("relators abelianize to zero") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + trial % 3;
        Presentation p = van_kampen({random_braid(rng, n, 8), random_braid(rng, n, 8)});
        CHECK(p.relators.size() <= 2 * static_cast<std::size_t>(n));
        for (const auto& r : p.relators)
            CHECK(r.exponent_sum() == 0);
    }
}

TEST_CASE("splitting a braid can only grow the relator set's reach") {
    // The product's group surjects onto the factored group, so the factored
    // abelianization cannot have larger free rank. Ranks are computed from
    // the relators' exponent vectors over the rationals.
    auto ab_rank = [](const Presentation& p) {
        std::vector<std::vector<double>> rows;
        for (const auto& r : p.relators) {
            std::vector<double> v(p.generators, 0.0);
            for (int l : r.letters)
                v[(l > 0 ? l : -l) - 1] += l > 0 ? 1 : -1;
            rows.push_back(v);
        }
        int rank = 0;
        for (int col = 0; col < p.generators && rank < (int)rows.size(); ++col) {
            int pivot = -1;
            for (int i = rank; i < (int)rows.size(); ++i)
                if (std::abs(rows[i][col]) > 1e-9) {
                    pivot = i;
                    break;
                }
            if (pivot < 0)
                continue;
            std::swap(rows[rank], rows[pivot]);
            for (int i = rank + 1; i < (int)rows.size(); ++i) {
                double f = rows[i][col] / rows[rank][col];
                for (int j = col; j < p.generators; ++j)
                    rows[i][j] -= f * rows[rank][j];
            }
            ++rank;
        }
        return rank;
    };
    std::mt19937 rng(43);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + trial % 3;
        BraidWord b1 = random_braid(rng, n, 6);
        BraidWord b2 = random_braid(rng, n, 6);
        Presentation sub = van_kampen({b1, b2});
        Presentation full = link_group(compose(b1, b2));
        CHECK(ab_rank(sub) >= ab_rank(full));
    }
}

TEST_CASE("presentation text round trip") {
    Presentation p = van_kampen({BraidWord(2, {1})});
    CHECK(to_text(p) == "gens: 2\n-1 2\n1 -2\n");
    Presentation q = parse_presentation(to_text(p));
    CHECK(q.generators == p.generators);
    CHECK(q.relators == p.relators);

    Presentation empty = parse_presentation("gens: 3\n");
    CHECK(empty.generators == 3);
    CHECK(empty.relators.empty());

    CHECK_THROWS_AS(parse_presentation(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_presentation("-1 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_presentation("gens: 2\n5\n"), std::invalid_argument);
}
