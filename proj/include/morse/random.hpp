#pragma once

#include <cstdint>
#include <random>

namespace morse {

/// SplitMix64 finalizer; a bijection on 64-bit words.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed of round `round` under `master`: splitmix64(master ^ splitmix64(round)).
/// Depends only on the pair, never on scheduling.
constexpr std::uint64_t round_seed(std::uint64_t master, std::uint64_t round) {
    return splitmix64(master ^ splitmix64(round));
}

/// mt19937_64 with platform-independent bounded draws (the standard
/// distributions are implementation-defined, which would break
/// reproducibility across standard libraries).
class Random {
public:
    explicit Random(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [0, n), n > 0. Lemire's multiply-and-reject.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t x = engine_();
        unsigned __int128 m = static_cast<unsigned __int128>(x) * n;
        auto low = static_cast<std::uint64_t>(m);
        if (low < n) {
            const std::uint64_t threshold = (0 - n) % n;
            while (low < threshold) {
                x = engine_();
                m = static_cast<unsigned __int128>(x) * n;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

}  // namespace morse
