#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace gdsa {

/// splitmix64 finalizer. Stable across platforms, unlike std::hash.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Deterministic keyed RNG stream. Seeding a stream from
/// (seed, part, part, ...) makes Monte Carlo work reproducible regardless
/// of evaluation order or thread count.
class KeyedRng {
public:
    explicit KeyedRng(std::uint64_t key) : state_(mix64(key ^ 0x5851f42d4c957f2dULL)) {}

    static std::uint64_t key_of(std::initializer_list<std::uint64_t> parts) {
        std::uint64_t k = 0x2545f4914f6cdd1dULL;
        for (auto p : parts) k = mix64(k ^ mix64(p));
        return k;
    }

    std::uint64_t next_u64() {
        state_ = mix64(state_);
        return state_;
    }

    /// Uniform in [0, 1).
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [0, n). n must be > 0.
    std::uint64_t next_below(std::uint64_t n) {
        // Lemire's multiply-shift; bias is negligible and determinism is what matters.
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(next_below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace gdsa
