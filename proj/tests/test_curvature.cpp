#include <doctest.h>

#include "bazaikin/curvature.hpp"
#include "oracles.hpp"

using namespace bazaikin;

TEST_CASE("classification of the landmark tuples") {
    CHECK(classify({1, 1, 1, 1, 1}) == CurvatureClass::PositivelyCurved);
    CHECK(classify({1, 1, 1, 1, -1}) == CurvatureClass::AlmostPositive);
    CHECK(classify({1, 1, 1, -1, -3}) == CurvatureClass::NonNegativeOnly);
    CHECK(classify({-3, 7, 1, 1, -3}) == CurvatureClass::QuasiPositive);
    CHECK(classify({7, 1, 1, -3, -3}) == CurvatureClass::QuasiPositive);
    CHECK_THROWS_AS((void)classify({1, 1, 1, -1, -1}), InvalidTuple);
}

TEST_CASE("verdict codes round-trip") {
    for (CurvatureClass c : {CurvatureClass::PositivelyCurved, CurvatureClass::AlmostPositive,
                             CurvatureClass::QuasiPositive, CurvatureClass::NonNegativeOnly}) {
        CHECK(curvature_from_code(to_code(c)) == c);
    }
    CHECK_THROWS_AS((void)curvature_from_code("XX"), InvalidInput);
}

TEST_CASE("verdict is invariant under permutation and negation") {
    Rng rng(4242);
    for (const FiveTuple& q : oracles::all_admissible(9)) {
        const CurvatureClass base = classify(q);
        FiveTuple neg = q;
        for (auto& v : neg.q) v = -v;
        CHECK(classify(neg) == base);
        FiveTuple perm = q;
        std::swap(perm[rng.next_u64() % 5], perm[rng.next_u64() % 5]);
        CHECK(classify(perm) == base);
    }
}

TEST_CASE("same-sign witness on known tuples") {
    CHECK_FALSE(same_sign_witness({1, 1, 1, -1, -3}).has_value());

    const auto w = same_sign_witness({3, 1, 1, -3, -3});
    REQUIRE(w.has_value());
    const FiveTuple q{3, 1, 1, -3, -3};
    const auto [a, b, c, d] = *w;
    const std::int64_t ab = q[a] + q[b];
    const std::int64_t cd = q[c] + q[d];
    CHECK(((ab > 0 && cd > 0) || (ab < 0 && cd < 0)));
    // Deterministic first hit in lexicographic order.
    CHECK(*w == std::array<int, 4>{1, 3, 2, 4});

    CHECK(same_sign_witness({1, 1, 1, 1, 1}).has_value());
}

TEST_CASE("witness exists exactly away from the exceptional tuple") {
    for (const FiveTuple& q : oracles::all_admissible(15)) {
        const bool exceptional = normalize(q) == FiveTuple{1, 1, 1, -1, -3};
        CAPTURE(to_string(q));
        CHECK(same_sign_witness(q).has_value() == !exceptional);
    }
}

TEST_CASE("witness pairs are disjoint and valid") {
    Rng rng(31337);
    for (const FiveTuple& base : oracles::all_admissible(9)) {
        const auto w = same_sign_witness(base);
        if (!w) continue;
        const auto [a, b, c, d] = *w;
        CHECK(a != b);
        CHECK(a != c);
        CHECK(a != d);
        CHECK(b != c);
        CHECK(b != d);
        CHECK(c != d);
        const std::int64_t ab = base[a] + base[b];
        const std::int64_t cd = base[c] + base[d];
        CHECK(ab * cd > 0);
        (void)rng;
    }
}
