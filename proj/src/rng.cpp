#include "gossipgame/rng.hpp"

#include <stdexcept>

namespace gossipgame {

std::uint64_t SplitRng::mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double SplitRng::uniform01() {
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

std::uint64_t SplitRng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("SplitRng::below: n must be positive");
  // reject the low 2^64 mod n values so every residue is equally likely
  const std::uint64_t cutoff = (0 - n) % n;
  for (;;) {
    const std::uint64_t v = gen_();
    if (v >= cutoff) return v % n;
  }
}

}  // namespace gossipgame
