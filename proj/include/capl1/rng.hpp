#pragma once

#include <cstdint>
#include <string_view>

namespace capl1 {

/// Identifies one reproducible stream of random draws. The same (seed,
/// stream) pair yields the identical draw sequence on every platform.
struct RngSeed {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
};

namespace detail {
inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;

// SplitMix64 finalizer.
inline constexpr std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ull;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebull;
    z ^= z >> 31;
    return z;
}
}  // namespace detail

/// Derives a child stream; used to hand independent streams to boosting
/// copies, hash draws, per-component signs and the like.
inline constexpr RngSeed derive(RngSeed base, std::uint64_t salt) {
    return RngSeed{base.seed,
                   detail::mix64(base.stream * detail::kGolden + 1 +
                                 detail::mix64(salt ^ 0xd1b54a32d192ed03ull))};
}

/// Stable stream id from a name, for CLI-level stream labeling.
inline constexpr std::uint64_t stream_of(std::string_view name) {
    std::uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a
    for (char c : name) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    }
    return h;
}

/// Counter-based generator: draw k is a pure function of (seed, stream, k),
/// so sequences are identical across platforms and replayable.
class RngStream {
  public:
    explicit RngStream(RngSeed s)
        : key_(detail::mix64(detail::mix64(s.seed ^ 0x8f1bbcdcbfa53e0bull) +
                             s.stream * detail::kGolden)) {}

    std::uint64_t next_u64() { return detail::mix64(key_ + (++counter_) * detail::kGolden); }

    /// Uniform in [0, 1) with 53-bit resolution.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Fair coin.
    bool next_coin() { return (next_u64() >> 63) != 0; }

    /// Uniform integer in [0, n), n > 0. Multiply-shift; no modulo bias worth
    /// caring about at 64 bits.
    std::uint32_t next_below(std::uint32_t n) {
        return static_cast<std::uint32_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

  private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace capl1
