#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "braidre/realstructure.hpp"

using namespace braidre;

namespace {

BraidWord product_of(int strands, const std::vector<BraidWord>& braids) {
    BraidWord acc{strands, {}};
    for (const auto& b : braids)
        acc = compose(acc, b);
    return acc;
}

BraidWord random_braid(std::mt19937& rng, int n, int len) {
    std::uniform_int_distribution<int> gen(1, n - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    std::vector<int> w;
    for (int i = 0; i < len; ++i)
        w.push_back(sign(rng) ? gen(rng) : -gen(rng));
    return BraidWord(n, w);
}

} // namespace

TEST_CASE("factorization construction validates its braids") {
    CHECK_NOTHROW(RealFactorization(4, 2, {delta(4)}, {}));
    CHECK_THROWS_AS(RealFactorization(4, 2, {delta(3)}, {}), std::invalid_argument);
    CHECK_THROWS_AS(RealFactorization(4, 2, {}, {delta(5)}), std::invalid_argument);
    // fiber parameters must be consistent with the strand count
    CHECK_THROWS_AS(RealFactorization(3, 2, {}, {}), std::invalid_argument);
}

TEST_CASE("lower factors are conjugate-inverted upper factors in reverse order") {
    RealFactorization whole(4, 2, {delta(4)}, {});
    std::vector<BraidWord> lower = derive_lower(whole);
    REQUIRE(lower.size() == 1);
    CHECK(equals(lower[0], delta(4)));

    RealFactorization two(4, 2, {BraidWord(4, {1}), BraidWord(4, {2})}, {});
    lower = derive_lower(two);
    REQUIRE(lower.size() == 2);
    CHECK(lower[0].letters == std::vector<int>{2});
    CHECK(lower[1].letters == std::vector<int>{3});
    CHECK(equals(product_of(4, lower), rmap(rev(compose(BraidWord(4, {1}), BraidWord(4, {2}))))));

    RealFactorization none(4, 2, {}, {});
    CHECK(derive_lower(none).empty());
}

TEST_CASE("lower product equals the mirrored reversed upper product when no real point remains") {
    std::mt19937 rng(83);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + 2 * (trial % 3); // 2, 4, 6
        std::vector<BraidWord> upper{random_braid(rng, n, 5), random_braid(rng, n, 5)};
        RealFactorization f(n, n / 2, upper, {});
        CHECK(equals(product_of(n, derive_lower(f)), rmap(rev(product_of(n, f.upper)))));
    }
}

TEST_CASE("acnode models decompose the full twist") {
    RealFactorization small = build_acnode(4, 2);
    CHECK(small.strands == 4);
    CHECK(small.fiber.pairs == 2);
    REQUIRE(small.upper.size() == 1);
    REQUIRE(small.real.size() == 1);
    CHECK(equals(small.real[0], BraidWord(4, {2, 2})));
    CHECK(equals(small.upper[0], compose(delta(4), inverse(BraidWord(4, {2})))));
    CHECK(verify_decomposition(small));

    CHECK(verify_decomposition(build_acnode(6, 2)));
    CHECK(verify_decomposition(build_acnode(6, 4)));
    CHECK(verify_decomposition(build_acnode(8, 4)));

    // boundary: the block covers every strand
    RealFactorization full = build_acnode(4, 4);
    CHECK(is_trivial(full.upper[0]));
    CHECK(equals(full.real[0], compose(delta(4), delta(4))));
    CHECK(verify_decomposition(full));

    CHECK_THROWS_AS(build_acnode(5, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_acnode(4, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_acnode(4, 0), std::invalid_argument);
    CHECK_THROWS_AS(build_acnode(4, 6), std::invalid_argument);
}

TEST_CASE("decomposition check rejects wrong factorizations and wrong regimes") {
    RealFactorization wrong(4, 2, {delta(4)}, {BraidWord(4, {2, 2})});
    CHECK_FALSE(verify_decomposition(wrong));

    RealFactorization off_regime(4, 1, {delta(4)}, {});
    CHECK_THROWS_AS(verify_decomposition(off_regime), std::invalid_argument);
}

TEST_CASE("upper, real, and derived lower factors multiply to the full twist") {
    for (auto [d2, k2] : std::vector<std::pair<int, int>>{{4, 2}, {6, 2}, {6, 4}, {8, 4}}) {
        RealFactorization f = build_acnode(d2, k2);
        BraidWord total = compose(
            compose(product_of(f.strands, f.upper), product_of(f.strands, f.real)),
            product_of(f.strands, derive_lower(f)));
        CHECK(equals(total, compose(delta(f.strands), delta(f.strands))));
    }
}

TEST_CASE("central equation") {
    CHECK(check_central_equation(delta(4)));
    CHECK(check_central_equation(compose(delta(4), BraidWord(4, {-1, 3}))));
    CHECK(check_central_equation(BraidWord(4, {1, 2, 3, 1, 2, 3})));
    CHECK_FALSE(check_central_equation(BraidWord(3, {1})));
    CHECK_FALSE(check_central_equation(compose(delta(4), delta(4))));
    for (int n = 2; n <= 8; ++n)
        CHECK(check_central_equation(delta(n)));
}

TEST_CASE("arrangement builders produce commuting block twists") {
    std::vector<BraidWord> one = build_unreal_arrangement({1});
    REQUIRE(one.size() == 1);
    CHECK(one[0].strands == 2);
    CHECK(equals(one[0], BraidWord(2, {1, 1})));

    std::vector<BraidWord> pair = build_unreal_arrangement({1, 1});
    REQUIRE(pair.size() == 2);
    CHECK(pair[0].strands == 4);
    CHECK(equals(pair[0], BraidWord(4, {1, 1})));
    CHECK(equals(pair[1], BraidWord(4, {3, 3})));

    std::vector<BraidWord> big = build_unreal_arrangement({2});
    REQUIRE(big.size() == 1);
    CHECK(equals(big[0], compose(delta(4), delta(4))));

    for (const auto& r : std::vector<std::vector<int>>{{1, 1}, {1, 2}, {2, 2}, {1, 1, 2}}) {
        std::vector<BraidWord> blocks = build_unreal_arrangement(r);
        REQUIRE(blocks.size() == r.size());
        int total = 0;
        for (int ri : r)
            total += 2 * ri;
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            CHECK(blocks[i].strands == total);
            long m = 2 * r[i];
            CHECK(blocks[i].exponent_sum() == m * (m - 1));
            for (std::size_t j = i + 1; j < blocks.size(); ++j)
                CHECK(equals(compose(blocks[i], blocks[j]), compose(blocks[j], blocks[i])));
        }
    }

    CHECK_THROWS_AS(build_unreal_arrangement({}), std::invalid_argument);
    CHECK_THROWS_AS(build_unreal_arrangement({1, 0}), std::invalid_argument);
}

TEST_CASE("half-twist class check on factorizations without real critical values") {
    CHECK(verify_garside_class(RealFactorization(4, 2, {delta(4)}, {})));
    CHECK(verify_garside_class(RealFactorization(4, 2, {BraidWord(4, {1, 2, 3, 1, 2, 3})}, {})));
    BraidWord g(4, {1, 3, -2});
    CHECK(verify_garside_class(
        RealFactorization(4, 2, {compose(inverse(g), delta(4)), g}, {})));
    CHECK_FALSE(verify_garside_class(RealFactorization(4, 2, {delta(4), delta(4)}, {})));
    CHECK_FALSE(verify_garside_class(RealFactorization(4, 2, {}, {})));

    RealFactorization with_real(4, 2, {delta(4)}, {BraidWord(4, {2, 2})});
    CHECK_THROWS_AS(verify_garside_class(with_real), std::invalid_argument);
}

TEST_CASE("factorization text rendering") {
    RealFactorization f(2, 1, {BraidWord(2, {1})}, {});
    CHECK(to_text(f) == "strands: 2\nfiber_real_points: 0\nupper:\nB2 1\nreal:\n");

    RealFactorization acnode = build_acnode(4, 2);
    std::string text = to_text(acnode);
    RealFactorization back = parse_real_factorization(text);
    CHECK(back.strands == acnode.strands);
    CHECK(back.fiber.pairs == acnode.fiber.pairs);
    REQUIRE(back.upper.size() == acnode.upper.size());
    REQUIRE(back.real.size() == acnode.real.size());
    for (std::size_t i = 0; i < back.upper.size(); ++i)
        CHECK(back.upper[i] == acnode.upper[i]);
    for (std::size_t i = 0; i < back.real.size(); ++i)
        CHECK(back.real[i] == acnode.real[i]);
    CHECK(to_text(back) == text);
}

TEST_CASE("factorization parsing with real points and malformed input") {
    RealFactorization f = parse_real_factorization(
        "strands: 5\nfiber_real_points: 1\nupper:\nB5 1 2\nreal:\nB5 3 3\n");
    CHECK(f.strands == 5);
    CHECK(f.fiber.pairs == 2);
    CHECK(f.fiber.real_points() == 1);
    REQUIRE(f.upper.size() == 1);
    REQUIRE(f.real.size() == 1);
    CHECK(f.upper[0].letters == std::vector<int>{1, 2});
    CHECK(f.real[0].letters == std::vector<int>{3, 3});

    CHECK_THROWS_AS(parse_real_factorization("upper:\nB2 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_real_factorization("strands: 4\nupper:\nreal:\n"), std::invalid_argument);
    CHECK_THROWS_AS(
        parse_real_factorization("strands: 4\nfiber_real_points: 1\nupper:\nreal:\n"),
        std::invalid_argument);
    CHECK_THROWS_AS(
        parse_real_factorization("strands: 4\nfiber_real_points: 0\nB4 1\nupper:\nreal:\n"),
        std::invalid_argument);
}
