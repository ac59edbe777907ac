#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "bazaikin/errors.hpp"

namespace bazaikin {

/// The five odd integer parameters of an Sp(2)xS^1 action on SU(5).
/// Entries are stored as given; sign and order conventions live in
/// normalize(), not in the type.
struct FiveTuple {
    std::array<std::int64_t, 5> q{};

    FiveTuple() = default;
    constexpr FiveTuple(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                        std::int64_t e)
        : q{a, b, c, d, e} {}
    explicit constexpr FiveTuple(const std::array<std::int64_t, 5>& v) : q(v) {}

    constexpr std::int64_t operator[](std::size_t i) const { return q[i]; }
    constexpr std::int64_t& operator[](std::size_t i) { return q[i]; }
    auto operator<=>(const FiveTuple&) const = default;

    constexpr std::int64_t sum() const { return q[0] + q[1] + q[2] + q[3] + q[4]; }
};

/// The zero-sum extension (q1,...,q5, -sum): the carrier of the
/// diffeomorphism class and of the symmetric-polynomial invariants.
struct SixTuple {
    std::array<std::int64_t, 6> r{};

    SixTuple() = default;
    constexpr SixTuple(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                       std::int64_t e, std::int64_t f)
        : r{a, b, c, d, e, f} {}
    explicit constexpr SixTuple(const std::array<std::int64_t, 6>& v) : r(v) {}

    constexpr std::int64_t operator[](std::size_t i) const { return r[i]; }
    constexpr std::int64_t& operator[](std::size_t i) { return r[i]; }
    auto operator<=>(const SixTuple&) const = default;

    constexpr std::int64_t sum() const { return r[0] + r[1] + r[2] + r[3] + r[4] + r[5]; }
};

/// gcd with the conventions gcd(0, n) = |n| and gcd(0, 0) = 0.
std::int64_t gcd_abs(std::int64_t a, std::int64_t b);

/// True iff every disjoint pair configuration {a,b},{c,d} of indices has
/// gcd(q_a + q_b, q_c + q_d) = 2.  There are 15 such configurations; the
/// full S_5 orbit adds nothing.  Throws InvalidTuple on an even entry.
bool is_effectively_free(const FiveTuple& q);

/// All entries odd, effectively free, and at least three entries positive.
/// Returns false (never throws) when any entry is even.
bool is_admissible(const FiveTuple& q);

/// The descending sort of q or -q, whichever has at least three positive
/// entries.  Idempotent and deterministic.
FiveTuple normalize(const FiveTuple& q);

/// True iff normalize(q) is admissible, i.e. q is admissible after the
/// sign convention is applied.  Operations on the associated space accept
/// this weaker notion since q and -q define the same space.
bool is_admissible_up_to_sign(const FiveTuple& q);

/// Appends q6 = -(q1+...+q5).  The result sums to zero.
SixTuple extend(const FiveTuple& q);

/// Drops entry `index` (0-based) of a six-tuple.
FiveTuple delete_entry(const SixTuple& r, std::size_t index);

/// Parses "1,1,1,-1,-3".  Rejects wrong arity, junk, and even entries;
/// diagnostics name the offending entry with a 1-based index.
FiveTuple parse_five_tuple(std::string_view text);

/// "1,1,1,-1,-3"
std::string to_string(const FiveTuple& q);
/// "3,1,-1,-1,-1,-1"
std::string to_string(const SixTuple& r);

}  // namespace bazaikin
