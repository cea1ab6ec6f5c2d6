#pragma once

#include <cstdint>
#include <initializer_list>

namespace divorient {

inline constexpr std::uint64_t kSplitMixGamma = 0x9E3779B97F4A7C15ull;

/// SplitMix64 output finalizer.
constexpr std::uint64_t splitmix_finalize(std::uint64_t z) noexcept
{
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// SplitMix64: state advances by the golden gamma, output is the finalizer
/// of the new state. Part of the reproducibility contract; do not change.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    constexpr explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t operator()() noexcept
    {
        state_ += kSplitMixGamma;
        return splitmix_finalize(state_);
    }

    /// Uniform double in [0,1) from the top 53 bits.
    constexpr double next_unit() noexcept
    {
        return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
    }

    static constexpr std::uint64_t min() noexcept { return 0; }
    static constexpr std::uint64_t max() noexcept { return ~std::uint64_t{0}; }

private:
    std::uint64_t state_;
};

/// Folds a word sequence into one seed:
///   h = master; for each w: h = finalize(h + gamma) ^ w; return finalize(h + gamma).
constexpr std::uint64_t mix_words(std::uint64_t master, std::initializer_list<std::uint64_t> words) noexcept
{
    std::uint64_t h = master;
    for (auto w : words)
        h = splitmix_finalize(h + kSplitMixGamma) ^ w;
    return splitmix_finalize(h + kSplitMixGamma);
}

/// Seed of the stream that draws sample `sample_index` of cell (n, rho_index).
constexpr std::uint64_t stream_seed(std::uint64_t master_seed, std::uint64_t n, std::uint64_t rho_index,
                                    std::uint64_t sample_index) noexcept
{
    return mix_words(master_seed, {n, rho_index, sample_index});
}

}  // namespace divorient
