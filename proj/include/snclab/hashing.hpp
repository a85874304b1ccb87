#ifndef SNCLAB_HASHING_HPP
#define SNCLAB_HASHING_HPP

#include <cstdint>
#include <string_view>

namespace snclab {

/// FNV-1a, 64 bit. Used for fixture checksums and search fingerprints;
/// stability across platforms matters, cryptographic strength does not.
class Fnv1a {
  public:
    void update(std::uint8_t byte)
    {
        hash_ ^= byte;
        hash_ *= 0x100000001b3ULL;
    }

    void update(std::string_view bytes)
    {
        for (char c : bytes)
            update(static_cast<std::uint8_t>(c));
    }

    void update_u64(std::uint64_t v)
    {
        for (int i = 0; i < 8; ++i)
            update(static_cast<std::uint8_t>(v >> (8 * i)));
    }

    std::uint64_t digest() const { return hash_; }

  private:
    std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

} // namespace snclab

#endif
