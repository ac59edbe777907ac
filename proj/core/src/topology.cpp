#include "bazaikin/topology.hpp"

#include <array>
#include <cstdlib>
#include <limits>
#include <numeric>

namespace bazaikin {

namespace {

using Int128 = __int128;

std::int64_t narrow(Int128 v, const char* what) {
    if (v > Int128(std::numeric_limits<std::int64_t>::max()) ||
        v < Int128(std::numeric_limits<std::int64_t>::min())) {
        throw std::overflow_error(std::string(what) + " exceeds 64 bits");
    }
    return static_cast<std::int64_t>(v);
}

}  // namespace

std::int64_t elementary_symmetric(int k, const SixTuple& r) {
    if (k < 1 || k > 6) {
        throw InvalidDegree("symmetric degree must be in 1..6, got " + std::to_string(k));
    }
    // Coefficients of prod (x + r_i): e[j] after processing all entries
    // is the degree-j elementary symmetric value.
    std::array<Int128, 7> e{};
    e[0] = 1;
    for (std::size_t i = 0; i < 6; ++i) {
        for (int j = std::min<int>(static_cast<int>(i) + 1, 6); j >= 1; --j) {
            e[j] += e[j - 1] * r[i];
        }
    }
    return narrow(e[k], "elementary symmetric value");
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    if (m <= 0) throw NotInvertible("modulus must be positive");
    std::int64_t r0 = m, r1 = ((a % m) + m) % m;
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        t0 -= q * t1;
        std::swap(t0, t1);
    }
    if (r0 != 1) {
        throw NotInvertible("no inverse of " + std::to_string(a) + " mod " + std::to_string(m));
    }
    return ((t0 % m) + m) % m;
}

TopInvariants invariants(const SixTuple& r) {
    TopInvariants inv;
    inv.sigma2 = elementary_symmetric(2, r);
    inv.sigma3 = elementary_symmetric(3, r);
    inv.sigma4 = elementary_symmetric(4, r);
    inv.p1 = -inv.sigma2;
    if (inv.sigma3 % 8 != 0) {
        throw InternalInvariantViolation("sigma3 = " + std::to_string(inv.sigma3) +
                                         " is not divisible by 8 for " + to_string(r));
    }
    inv.s = std::abs(inv.sigma3) / 8;
    if (inv.s <= 1) {
        inv.p2 = 0;
    } else {
        // Always through the inverse of 8: divisibility of 3*p1^2 - sigma4
        // by 8 is not part of the contract (the two routes agree when it is).
        const Int128 num = Int128(3) * inv.p1 * inv.p1 - inv.sigma4;
        const std::int64_t num_mod = narrow(((num % inv.s) + inv.s) % inv.s, "p2 numerator");
        inv.p2 = narrow(Int128(num_mod) * mod_inverse(8, inv.s) % inv.s, "p2");
    }
    return inv;
}

TopInvariants invariants(const FiveTuple& q) {
    if (!is_admissible_up_to_sign(q)) {
        throw InvalidTuple("not admissible: " + to_string(q));
    }
    return invariants(extend(q));
}

}  // namespace bazaikin
