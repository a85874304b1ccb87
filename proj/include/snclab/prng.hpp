#ifndef SNCLAB_PRNG_HPP
#define SNCLAB_PRNG_HPP

#include <cstdint>

namespace snclab {

/**
 * splitmix64. Search campaigns promise bit-identical results for a given
 * (seed, iteration count) on any platform, which rules out the standard
 * library distributions; this generator plus the rejection sampler below is
 * the whole of what the contract needs.
 */
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform on [0, bound), bound >= 1, by rejection.
    std::uint64_t below(std::uint64_t bound)
    {
        const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

  private:
    std::uint64_t state_;
};

/// Derives an independent stream for (seed, index) pairs.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index)
{
    SplitMix64 g(seed ^ (index * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL));
    return g.next();
}

} // namespace snclab

#endif
