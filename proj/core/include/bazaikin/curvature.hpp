#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "bazaikin/tuple.hpp"

namespace bazaikin {

/// Curvature type of the natural metric, strongest first.  Exactly one
/// verdict applies to each admissible tuple, and the verdict only depends
/// on the tuple up to permutation and global sign.
enum class CurvatureClass {
    PositivelyCurved,
    AlmostPositive,
    QuasiPositive,
    NonNegativeOnly,
};

/// "PC" | "AP" | "QP" | "NN"
std::string_view to_code(CurvatureClass c);
CurvatureClass curvature_from_code(std::string_view code);

/// True iff a is at least as strong as b.
constexpr bool at_least_as_strong(CurvatureClass a, CurvatureClass b) {
    return static_cast<int>(a) <= static_cast<int>(b);
}

/// Exact classification:
///   - positively curved iff all 10 pairwise sums q_i + q_j share one
///     strict sign;
///   - else almost positive iff normalize(q) = (1,1,1,1,-1);
///   - else non-negative only iff normalize(q) = (1,1,1,-1,-3);
///   - else quasi-positive.
/// Throws InvalidTuple unless q is admissible up to sign.
CurvatureClass classify(const FiveTuple& q);

/// Four distinct 0-based indices (a,b,c,d) such that q_a + q_b and
/// q_c + q_d share a strict sign, or nullopt when no such configuration
/// exists.  First hit in lexicographic (a,b,c,d) order.
std::optional<std::array<int, 4>> same_sign_witness(const FiveTuple& q);

}  // namespace bazaikin
