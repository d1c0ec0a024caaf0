#pragma once

#include <cstdint>
#include <vector>

#include "gaudin/rational.hpp"

namespace gaudin {

// splitmix64: tiny, seedable, and byte-for-byte reproducible across
// platforms, which std::mt19937 + distributions would not guarantee.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    double unit() { return (next() >> 11) * 0x1.0p-53; }

    // Random p/q with p in [-span, span], q in [1, max_den].
    Rational rational(long span = 20, long max_den = 12) {
        long num = static_cast<long>(below(2 * span + 1)) - span;
        long den = static_cast<long>(below(max_den)) + 1;
        return rat(num, den);
    }

    // Random rational distinct from everything in `avoid`.
    Rational rational_avoiding(const std::vector<Rational>& avoid, long span = 20,
                               long max_den = 12) {
        for (;;) {
            Rational q = rational(span, max_den);
            bool clash = false;
            for (const auto& a : avoid)
                if (a == q) { clash = true; break; }
            if (!clash) return q;
        }
    }

  private:
    std::uint64_t state_;
};

}  // namespace gaudin
