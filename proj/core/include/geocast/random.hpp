#pragma once

// Seed derivation and uniform variate generation for reproducible runs.
// The generator is mt19937_64 with an explicit 53-bit mapping to [0,1), so
// identical seeds produce identical topologies on every platform (the
// std::uniform_* distributions are implementation-defined and avoided).
// Serialized outputs record the generator under kGeneratorName.

#include <cstdint>
#include <random>

namespace geocast {

inline constexpr char kGeneratorName[] = "mt19937_64/u53";

// splitmix64 finalizer; used to derive independent sub-seeds.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
    return mix64(mix64(a) ^ b);
}

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return mix64(mix64(a, b) ^ c);
}

class UniformRng {
  public:
    explicit UniformRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform double in [0, 1) with 53 random bits.
    double next_unit() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, n); unbiased via rejection.
    std::uint64_t next_below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % n;
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace geocast
