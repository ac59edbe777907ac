#pragma once

#include <cstdint>

#include "bazaikin/tuple.hpp"

namespace bazaikin {

/// Topological invariants of the space attached to a parameter tuple:
/// p1 generates the degree-4 cohomology coefficient, s is the order of
/// the degree-8 group, p2 is a residue class mod s.  sigma2..sigma4 are
/// the raw elementary symmetric values of the zero-sum six-tuple the
/// invariants were computed from.
struct TopInvariants {
    std::int64_t p1 = 0;
    std::int64_t s = 0;
    std::int64_t p2 = 0;
    std::int64_t sigma2 = 0;
    std::int64_t sigma3 = 0;
    std::int64_t sigma4 = 0;

    auto operator<=>(const TopInvariants&) const = default;

    /// p2 is only defined up to the sign of the degree-2 generator, so
    /// collision queries compare the unordered pair {p2, s - p2}.
    std::pair<std::int64_t, std::int64_t> p2_residue_set() const {
        const std::int64_t other = s == 0 ? 0 : (s - p2) % s;
        return {std::min(p2, other), std::max(p2, other)};
    }
};

/// Elementary symmetric polynomial of degree k in the six entries of r.
/// Exact; intermediates are 128-bit.  Throws InvalidDegree unless 1<=k<=6.
std::int64_t elementary_symmetric(int k, const SixTuple& r);

/// x in [0, m) with a*x == 1 (mod m), by extended Euclid.
/// Throws NotInvertible when gcd(a, m) != 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

/// Invariants from the raw six-tuple:
///   p1 = -sigma2, s = |sigma3|/8,
///   p2 = (3*p1^2 - sigma4) * inverse(8) mod s  (0 when s = 1).
/// Throws InternalInvariantViolation if 8 does not divide sigma3, which
/// signals a freeness bug upstream rather than bad input.
TopInvariants invariants(const SixTuple& r);

/// Same, from the five-tuple via its zero-sum extension.  The tuple must
/// be admissible up to sign (q and -q give equal p1, s, p2).
TopInvariants invariants(const FiveTuple& q);

}  // namespace bazaikin
