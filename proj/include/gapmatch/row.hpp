#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "gapmatch/bitcolumn.hpp"
#include "gapmatch/pattern.hpp"

namespace gapmatch::row {

// Row-wise bit-parallel matcher. The text is processed in chunks of 64
// positions; each pattern is first split into unit-length keywords, then one
// chunk word of each pattern row is produced per chunk, so the whole run
// costs O(chunks * total symbols + n + matches). Matches of a chunk are
// available only once the chunk has been read in full, i.e. a report can
// trail its end position by up to 63 characters.
//
// Literal keywords only; character classes are rejected.

// Bits of a row that lie g positions back from chunk c sit in the stored
// chunk words c - g/64 - 1 (older) and c - g/64 (newer); this selects and
// aligns them into a single word. Uses zero for words before the text start.
// g must be >= 1; for g % 64 == 0 only the newer word contributes (a
// hardware shift by 64 would be undefined).
inline std::uint64_t combine_chunk_words(std::uint64_t older, std::uint64_t newer,
                                         std::uint64_t g) {
  const std::uint64_t s = g % kWordBits;
  if (s == 0) return newer;
  return (older >> (kWordBits - s)) | (newer << s);
}

class Searcher {
 public:
  // record_rows keeps every chunk word of every row for inspection; meant
  // for tests and tiny inputs only.
  explicit Searcher(const PatternSet& ps, bool record_rows = false);

  std::vector<Occurrence> search(std::string_view text);
  // after_chunk runs once per chunk after its matches are collected and the
  // symbol masks are cleared.
  std::vector<Occurrence> search(std::string_view text,
                                 const std::function<void(std::size_t)>& after_chunk);

  // All 256 per-symbol chunk masks are zero; holds between chunks.
  bool symbol_masks_clear() const;

  // Recorded rows of pattern k (unit-keyword form): rows x chunk words.
  const std::vector<std::vector<std::uint64_t>>& recorded_rows(std::size_t k) const {
    return recorded_[k];
  }

  static std::size_t chunk_count(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

 private:
  struct SplitPattern {
    std::vector<std::uint8_t> symbols;  // unit keywords
    std::vector<std::uint64_t> steps;   // gap + 1 per row after the first
    std::uint64_t hist_len;             // ring length, power of two
  };

  std::vector<SplitPattern> pats_;
  std::array<std::uint64_t, 256> symbol_mask_{};
  std::vector<std::vector<std::uint64_t>> hist_;  // per pattern: rows * hist_len
  bool record_ = false;
  std::vector<std::vector<std::vector<std::uint64_t>>> recorded_;
};

std::vector<Occurrence> search_all(const PatternSet& ps, std::string_view text);
std::vector<std::uint64_t> search_one(const GappedPattern& p, std::string_view text,
                                      const Alphabet& alphabet = Alphabet::full());

}  // namespace gapmatch::row
