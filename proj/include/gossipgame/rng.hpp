#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace gossipgame {

/// Deterministic RNG shared by population setup and pair selection.
///
/// mt19937_64 output is fully specified by the standard, so every sequence
/// here is identical across platforms and compilers. Distinct streams are
/// derived from the run seed with a splitmix64-style mix so that, say,
/// initialization draws never shift the interaction schedule.
class SplitRng {
 public:
  static constexpr std::uint64_t kInitStream = 0;
  static constexpr std::uint64_t kPairStream = 1;

  SplitRng(std::uint64_t seed, std::uint64_t stream)
      : gen_(mix_seed(seed, stream)) {}

  /// splitmix64 finalizer over seed and stream; avalanches so nearby seeds
  /// give unrelated sequences.
  static std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

  /// Uniform double in [0, 1) with 53 random bits, built directly from the
  /// generator word so results do not depend on library distribution code.
  double uniform01();

  /// Uniform integer in [0, n). Rejection sampling, exactly unbiased.
  /// n must be positive.
  std::uint64_t below(std::uint64_t n);

  /// In-place Fisher-Yates shuffle using below().
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      using std::swap;
      swap(v[i - 1], v[j]);
    }
  }

  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace gossipgame
