#include "bazaikin/equivalence.hpp"

#include <algorithm>

namespace bazaikin {

CanonicalClass canonical_form(const SixTuple& r) {
    if (r.sum() != 0) {
        throw InvalidTuple("six-tuple does not sum to zero: " + to_string(r));
    }
    SixTuple sorted = r;
    std::sort(sorted.r.begin(), sorted.r.end(), std::greater<>());
    SixTuple negated;
    for (std::size_t i = 0; i < 6; ++i) negated[i] = -sorted[5 - i];
    return CanonicalClass{std::max(sorted, negated)};
}

CanonicalClass canonical_class(const FiveTuple& q) {
    if (!is_admissible_up_to_sign(q)) {
        throw InvalidTuple("not admissible: " + to_string(q));
    }
    return canonical_form(extend(q));
}

std::vector<FiveTuple> representatives(const CanonicalClass& c) {
    std::vector<FiveTuple> reps;
    reps.reserve(6);
    for (std::size_t i = 0; i < 6; ++i) {
        const FiveTuple rep = normalize(delete_entry(c.canon, i));
        if (!is_admissible(rep)) {
            throw InternalInvariantViolation("deletion " + std::to_string(i) + " of class " +
                                             to_string(c.canon) + " is not admissible: " +
                                             to_string(rep));
        }
        reps.push_back(rep);
    }
    std::sort(reps.begin(), reps.end(), std::greater<>());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    return reps;
}

bool are_diffeomorphic(const FiveTuple& q, const FiveTuple& r) {
    return canonical_class(q) == canonical_class(r);
}

CurvatureClass best_curvature(const CanonicalClass& c) {
    CurvatureClass best = CurvatureClass::NonNegativeOnly;
    for (const FiveTuple& rep : representatives(c)) {
        const CurvatureClass v = classify(rep);
        if (at_least_as_strong(v, best)) best = v;
    }
    return best;
}

}  // namespace bazaikin
