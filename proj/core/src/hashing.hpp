#pragma once

#include <cstdint>
#include <initializer_list>

// Deterministic mixing used wherever the library needs reproducible
// pseudo-random choices (world generation, the recovery harness, formula
// generators).  Everything is a pure function of the inputs, so identical
// seeds give identical artifacts on every platform.

namespace antihorn::detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::uint64_t mix(std::initializer_list<std::uint64_t> parts) {
  std::uint64_t h = 0x2545f4914f6cdd1dull;
  for (std::uint64_t p : parts) h = splitmix64(h ^ p);
  return h;
}

// Uniform-enough draw in [0, bound); bound > 0.
inline std::uint64_t draw(std::uint64_t h, std::uint64_t bound) {
  return splitmix64(h) % bound;
}

}  // namespace antihorn::detail
