#include "bazaikin/curvature.hpp"

namespace bazaikin {

std::string_view to_code(CurvatureClass c) {
    switch (c) {
        case CurvatureClass::PositivelyCurved: return "PC";
        case CurvatureClass::AlmostPositive: return "AP";
        case CurvatureClass::QuasiPositive: return "QP";
        case CurvatureClass::NonNegativeOnly: return "NN";
    }
    throw InvalidInput("bad curvature class");
}

CurvatureClass curvature_from_code(std::string_view code) {
    if (code == "PC") return CurvatureClass::PositivelyCurved;
    if (code == "AP") return CurvatureClass::AlmostPositive;
    if (code == "QP") return CurvatureClass::QuasiPositive;
    if (code == "NN") return CurvatureClass::NonNegativeOnly;
    throw InvalidInput("unknown curvature code '" + std::string(code) + "'");
}

CurvatureClass classify(const FiveTuple& q) {
    if (!is_admissible_up_to_sign(q)) {
        throw InvalidTuple("not admissible: " + to_string(q));
    }
    bool any_pos = false, any_neg = false, any_zero = false;
    for (int i = 0; i < 5; ++i) {
        for (int j = i + 1; j < 5; ++j) {
            const std::int64_t sum = q[i] + q[j];
            (sum > 0 ? any_pos : sum < 0 ? any_neg : any_zero) = true;
        }
    }
    if (!any_zero && (!any_pos || !any_neg)) return CurvatureClass::PositivelyCurved;
    const FiveTuple n = normalize(q);
    if (n == FiveTuple{1, 1, 1, 1, -1}) return CurvatureClass::AlmostPositive;
    if (n == FiveTuple{1, 1, 1, -1, -3}) return CurvatureClass::NonNegativeOnly;
    return CurvatureClass::QuasiPositive;
}

std::optional<std::array<int, 4>> same_sign_witness(const FiveTuple& q) {
    if (!is_admissible_up_to_sign(q)) {
        throw InvalidTuple("not admissible: " + to_string(q));
    }
    for (int a = 0; a < 5; ++a) {
        for (int b = 0; b < 5; ++b) {
            if (b == a) continue;
            const std::int64_t ab = q[a] + q[b];
            if (ab == 0) continue;
            for (int c = 0; c < 5; ++c) {
                if (c == a || c == b) continue;
                for (int d = 0; d < 5; ++d) {
                    if (d == a || d == b || d == c) continue;
                    const std::int64_t cd = q[c] + q[d];
                    if ((ab > 0 && cd > 0) || (ab < 0 && cd < 0)) {
                        return std::array<int, 4>{a, b, c, d};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace bazaikin
