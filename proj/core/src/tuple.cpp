#include "bazaikin/tuple.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>

namespace bazaikin {

namespace {

bool all_odd(const FiveTuple& q) {
    return std::all_of(q.q.begin(), q.q.end(), [](std::int64_t v) { return v % 2 != 0; });
}

int positive_count(const FiveTuple& q) {
    return static_cast<int>(std::count_if(q.q.begin(), q.q.end(),
                                          [](std::int64_t v) { return v > 0; }));
}

// The 15 unordered configurations of two disjoint index pairs in {0..4}.
constexpr std::array<std::array<int, 4>, 15> kPairConfigs = {{
    {0, 1, 2, 3}, {0, 1, 2, 4}, {0, 1, 3, 4},
    {0, 2, 1, 3}, {0, 2, 1, 4}, {0, 2, 3, 4},
    {0, 3, 1, 2}, {0, 3, 1, 4}, {0, 3, 2, 4},
    {0, 4, 1, 2}, {0, 4, 1, 3}, {0, 4, 2, 3},
    {1, 2, 3, 4}, {1, 3, 2, 4}, {1, 4, 2, 3},
}};

}  // namespace

std::int64_t gcd_abs(std::int64_t a, std::int64_t b) {
    return std::gcd(a, b);
}

bool is_effectively_free(const FiveTuple& q) {
    for (std::size_t i = 0; i < 5; ++i) {
        if (q[i] % 2 == 0) {
            throw InvalidTuple("entry " + std::to_string(i + 1) + " is even: " +
                               std::to_string(q[i]));
        }
    }
    for (const auto& c : kPairConfigs) {
        if (gcd_abs(q[c[0]] + q[c[1]], q[c[2]] + q[c[3]]) != 2) return false;
    }
    return true;
}

bool is_admissible(const FiveTuple& q) {
    if (!all_odd(q)) return false;
    return positive_count(q) >= 3 && is_effectively_free(q);
}

FiveTuple normalize(const FiveTuple& q) {
    FiveTuple out = q;
    if (positive_count(q) < 3) {
        for (auto& v : out.q) v = -v;
    }
    std::sort(out.q.begin(), out.q.end(), std::greater<>());
    return out;
}

bool is_admissible_up_to_sign(const FiveTuple& q) {
    if (!all_odd(q)) return false;
    return is_admissible(normalize(q));
}

SixTuple extend(const FiveTuple& q) {
    return SixTuple{q[0], q[1], q[2], q[3], q[4], -q.sum()};
}

FiveTuple delete_entry(const SixTuple& r, std::size_t index) {
    FiveTuple out;
    std::size_t k = 0;
    for (std::size_t i = 0; i < 6; ++i) {
        if (i != index) out[k++] = r[i];
    }
    return out;
}

FiveTuple parse_five_tuple(std::string_view text) {
    FiveTuple out;
    std::size_t entry = 0;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view piece = text.substr(pos, comma == std::string_view::npos
                                                      ? std::string_view::npos
                                                      : comma - pos);
        while (!piece.empty() && (piece.front() == ' ' || piece.front() == '\t'))
            piece.remove_prefix(1);
        while (!piece.empty() && (piece.back() == ' ' || piece.back() == '\t'))
            piece.remove_suffix(1);
        if (entry >= 5) throw InvalidTuple("expected 5 entries, got more");
        std::int64_t value = 0;
        const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (ec != std::errc{} || ptr != piece.data() + piece.size()) {
            throw InvalidTuple("entry " + std::to_string(entry + 1) + " is not an integer: '" +
                               std::string(piece) + "'");
        }
        if (value % 2 == 0) {
            throw InvalidTuple("entry " + std::to_string(entry + 1) + " is even: " +
                               std::to_string(value));
        }
        out[entry++] = value;
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (entry != 5) throw InvalidTuple("expected 5 entries, got " + std::to_string(entry));
    return out;
}

namespace {
template <std::size_t N>
std::string join(const std::array<std::int64_t, N>& a) {
    std::string s;
    for (std::size_t i = 0; i < N; ++i) {
        if (i) s += ',';
        s += std::to_string(a[i]);
    }
    return s;
}
}  // namespace

std::string to_string(const FiveTuple& q) { return join(q.q); }
std::string to_string(const SixTuple& r) { return join(r.r); }

}  // namespace bazaikin
