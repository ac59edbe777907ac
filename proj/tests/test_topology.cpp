#include <doctest.h>

#include "bazaikin/topology.hpp"
#include "oracles.hpp"

using namespace bazaikin;

TEST_CASE("elementary symmetric values") {
    CHECK(elementary_symmetric(1, extend({1, 1, 1, -1, -3})) == 0);
    CHECK(elementary_symmetric(3, {7, -3, -3, -3, 1, 1}) == 88);
    CHECK(elementary_symmetric(3, {5, 5, -3, -3, -3, -1}) == 56);
    CHECK(elementary_symmetric(4, {7, 1, 1, -3, -3, -3}) == 99);
    CHECK_THROWS_AS((void)elementary_symmetric(0, {1, 1, 1, 1, -1, -3}), InvalidDegree);
    CHECK_THROWS_AS((void)elementary_symmetric(7, {1, 1, 1, 1, -1, -3}), InvalidDegree);
}

TEST_CASE("elementary symmetric matches subset enumeration") {
    Rng rng(314159);
    for (int trial = 0; trial < 10000; ++trial) {
        const SixTuple r = oracles::random_odd_six_tuple(rng, 39);
        const int k = 1 + static_cast<int>(rng.next_u64() % 6);
        CHECK(elementary_symmetric(k, r) == oracles::symmetric_subset_sum(k, r));
    }
}

TEST_CASE("mod_inverse") {
    CHECK(mod_inverse(8, 11) == 7);
    CHECK(mod_inverse(8, 7) == 1);
    CHECK(mod_inverse(1, 5) == 1);
    CHECK(mod_inverse(-3, 7) == 2);  // -3 == 4, 4*2 == 8 == 1
    CHECK_THROWS_AS((void)mod_inverse(6, 9), NotInvertible);
    CHECK_THROWS_AS((void)mod_inverse(0, 4), NotInvertible);
}

TEST_CASE("invariants of the p1 = 39 pair") {
    const TopInvariants a = invariants(FiveTuple{7, 1, 1, -3, -3});
    CHECK(a.p1 == 39);
    CHECK(a.s == 11);
    CHECK(a.p2 == 8);  // (3*39^2 - 99)/8 = 558, and 558 mod 11 = 8
    CHECK(a.sigma4 == 99);

    const TopInvariants b = invariants(SixTuple{5, 5, -1, -3, -3, -3});
    CHECK(b.p1 == 39);
    CHECK(b.s == 7);
}

TEST_CASE("invariants of the almost positive tuple") {
    const TopInvariants inv = invariants(FiveTuple{1, 1, 1, 1, -1});
    CHECK(inv.p1 == 7);
    CHECK(inv.sigma3 == -8);
    CHECK(inv.s == 1);
    CHECK(inv.p2 == 0);
}

TEST_CASE("invariants are stable under permutation and negation") {
    Rng rng(99);
    const auto tuples = oracles::all_admissible(9);
    for (const FiveTuple& q : tuples) {
        const TopInvariants base = invariants(q);

        FiveTuple neg = q;
        for (auto& v : neg.q) v = -v;
        const TopInvariants negated = invariants(neg);
        CHECK(negated.p1 == base.p1);
        CHECK(negated.s == base.s);
        CHECK(negated.p2 == base.p2);
        CHECK(negated.sigma3 == -base.sigma3);

        FiveTuple perm = q;
        std::swap(perm[rng.next_u64() % 5], perm[rng.next_u64() % 5]);
        CHECK(invariants(perm) == base);
    }
}

TEST_CASE("identities forced by admissibility") {
    for (const FiveTuple& q : oracles::all_admissible(9)) {
        const SixTuple r = extend(q);
        const TopInvariants inv = invariants(q);
        std::int64_t sos = 0;
        for (int i = 0; i < 6; ++i) sos += r[i] * r[i];
        CHECK(2 * inv.p1 == sos);
        CHECK(inv.sigma3 % 8 == 0);
        const std::int64_t mod6 = inv.s % 6;
        CHECK((mod6 == 1 || mod6 == 5));
        CHECK(inv.p2 >= 0);
        CHECK((inv.s == 1 ? inv.p2 == 0 : inv.p2 < inv.s));
        // When 8 divides the p2 numerator the division route must agree
        // with the modular-inverse route.
        const std::int64_t num = 3 * inv.p1 * inv.p1 - inv.sigma4;
        if (inv.s > 1 && num % 8 == 0) {
            CHECK(((num / 8) % inv.s + inv.s) % inv.s == inv.p2);
        }
    }
}

TEST_CASE("non-admissible input is rejected") {
    CHECK_THROWS_AS((void)invariants(FiveTuple{1, 1, 1, -1, -1}), InvalidTuple);
}

TEST_CASE("sigma3 not divisible by 8 flags an upstream bug") {
    // sigma3(1,1,1,1,1,1) = 20; only reachable through the unchecked
    // six-tuple entry point.
    CHECK_THROWS_AS((void)invariants(SixTuple{1, 1, 1, 1, 1, 1}), InternalInvariantViolation);
}
