#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace bazaikin {

/// Deterministic splitmix64 stream.  Used everywhere randomness is
/// needed so that artifacts are byte-identical for a fixed seed,
/// independent of the standard library's distribution internals.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    /// Standard normal via Box-Muller; consumes draws in a fixed order.
    double next_gaussian() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        double u = next_double();
        while (u == 0.0) u = next_double();
        const double v = next_double();
        const double radius = std::sqrt(-2.0 * std::log(u));
        const double angle = 2.0 * 3.141592653589793238462643383279502884 * v;
        cached_ = radius * std::sin(angle);
        have_cached_ = true;
        return radius * std::cos(angle);
    }

    std::complex<double> next_complex_gaussian() {
        const double re = next_gaussian();
        const double im = next_gaussian();
        return {re, im};
    }

private:
    std::uint64_t state_;
    double cached_ = 0.0;
    bool have_cached_ = false;
};

/// Independent per-item stream: mixes the index into the seed so batches
/// can run in any order (or in parallel) without changing results.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    Rng mix(seed ^ (0x9e3779b97f4a7c15ULL + index * 0xbf58476d1ce4e5b9ULL));
    return mix.next_u64();
}

}  // namespace bazaikin
