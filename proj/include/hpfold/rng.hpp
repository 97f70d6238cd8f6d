#pragma once

#include <cstdint>
#include <random>

namespace hpfold {

/// splitmix64; used to derive independent stream seeds from one run seed.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Deterministic RNG stream. Wraps std::mt19937_64 (bit-exact engine per the
/// standard) with hand-rolled sampling, so results are identical across
/// platforms; std distributions are implementation-defined and never used.
class Rng {
  public:
    Rng() : engine_(0) {}
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Stream `stream` of run seed `seed`; distinct streams are independent.
    static Rng stream(std::uint64_t seed, std::uint64_t stream) {
        return Rng(mix64(seed ^ mix64(stream + 0x51ed2701)));
    }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, bound); bound >= 1. Rejection sampling, unbiased.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = bound == 0 ? 0 : (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = engine_();
            if (r >= threshold) return r % bound;
        }
    }

    /// Uniform int in [lo, hi] inclusive.
    int between(int lo, int hi) {
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// Uniform real in [0, 1) with 53-bit resolution.
    double real01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  private:
    std::mt19937_64 engine_;
};

} // namespace hpfold
