#pragma once

#include <vector>

#include "bazaikin/curvature.hpp"
#include "bazaikin/tuple.hpp"

namespace bazaikin {

/// Normal form of a tuple under the moves that preserve the space up to
/// diffeomorphism: entry permutation, global negation, and trading one
/// entry for the negated total.  All three act on the zero-sum six-tuple,
/// so the normal form is its descending sort, sign-fixed to be
/// lexicographically largest among {sorted(t), sorted(-t)}.
///
/// The moves are those with a known diffeomorphism behind them; equality
/// of canonical forms means "moves-equivalent", which is all the
/// equivalence this type decides.
struct CanonicalClass {
    SixTuple canon;

    auto operator<=>(const CanonicalClass&) const = default;
};

/// Canonical form of the extension of q.  Throws InvalidTuple unless q is
/// admissible up to sign.
CanonicalClass canonical_class(const FiveTuple& q);

/// Canonical form of a raw zero-sum six-tuple (no admissibility check).
CanonicalClass canonical_form(const SixTuple& r);

/// The distinct normalized five-tuples obtained by deleting each of the
/// six entries, sorted descending lexicographically.  Every output is
/// admissible; a non-free deletion throws InternalInvariantViolation
/// since the defining moves guarantee freeness transfers.
std::vector<FiveTuple> representatives(const CanonicalClass& c);

/// canonical_class(q) == canonical_class(r).
bool are_diffeomorphic(const FiveTuple& q, const FiveTuple& r);

/// Strongest curvature verdict among the representatives of c.
CurvatureClass best_curvature(const CanonicalClass& c);

}  // namespace bazaikin
