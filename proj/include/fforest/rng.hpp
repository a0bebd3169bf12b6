#pragma once

#include <cstdint>
#include <span>
#include <string>

namespace fforest {

/// splitmix64 generator. All randomized fixtures and benchmarks use this
/// so that identical seeds give identical words on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish value in [0, bound). Modulo bias is irrelevant at the
  /// alphabet sizes used here.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

inline std::string random_word(SplitMix64& rng, std::span<const char> alphabet,
                               std::size_t length) {
  std::string w;
  w.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    w.push_back(alphabet[static_cast<std::size_t>(rng.below(alphabet.size()))]);
  }
  return w;
}

}  // namespace fforest
