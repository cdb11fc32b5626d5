#ifndef MECSIM_RNG_HPP_
#define MECSIM_RNG_HPP_

#include <cstdint>
#include <random>

namespace mecsim {

// splitmix64 finalizer; used to derive independent seed values from
// (master seed, stream id, slot index) tuples so that every consumer can
// re-create its substream regardless of evaluation order.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b) { return mix64(mix64(a) ^ b); }

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return mix64(mix64(a, b) ^ c);
}

// Stream ids for per-slot substreams.
enum class RngStream : std::uint64_t {
  kPlacement = 1,
  kArrivals = 2,
  kChannel = 3,
};

inline std::mt19937_64 make_engine(std::uint64_t seed) { return std::mt19937_64(mix64(seed)); }

inline std::mt19937_64 make_engine(std::uint64_t seed, RngStream stream, std::uint64_t slot) {
  return std::mt19937_64(mix64(seed, static_cast<std::uint64_t>(stream), slot));
}

} // namespace mecsim

#endif // MECSIM_RNG_HPP_
