#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "gapmatch/pattern.hpp"

namespace gapmatch::gen {

// SplitMix64 stream. Uniform draws use rejection sampling on top of the raw
// stream, so a seed reproduces the same values on any platform or language.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Unbiased uniform draw from [0, bound); bound must be positive. Rejects
  // the 2^64 mod bound smallest raw values, so each residue is equally
  // likely.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::uint64_t state_;
};

struct Params {
  std::uint32_t keywords = 1;     // keywords per pattern
  std::uint32_t keyword_len = 1;  // symbols per keyword
  std::uint64_t max_gap = 0;      // gaps are drawn uniformly from [0, max_gap]
  std::uint32_t count = 1;        // number of patterns
  std::uint64_t seed = 0;
};

// Per pattern, in stream order: keywords-1 gap lengths from [0, max_gap],
// then a uniform start for a window of length keywords*keyword_len +
// sum(gaps) inside the text. The keyword substrings of the window are kept
// and the gap regions replaced by their lengths, so every generated pattern
// occurs in the text at its sampled window. Throws std::invalid_argument
// when the text cannot hold the largest possible window.
PatternSet generate_patterns(const Params& params, std::string_view text,
                             const Alphabet& alphabet = Alphabet::full());

// Text of the requested length with symbols drawn uniformly from the given
// set.
std::string random_text(std::size_t length, std::string_view symbols, std::uint64_t seed);

}  // namespace gapmatch::gen
