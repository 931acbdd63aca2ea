#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "gapmatch/bitcolumn.hpp"
#include "gapmatch/pattern.hpp"

namespace gapmatch {

// Aho-Corasick automaton over the distinct keyword strings of a pattern set.
// Character classes contribute one length-1 string per member symbol; all
// strings of one keyword slot map onto the same slot bit. Each state whose
// label is a keyword stores the bit set of all keyword slots whose string is
// a suffix of the label, so after reading text position i the current state
// yields exactly the slots matching with end position i.
//
// Immutable after construction; concurrent searches each hold their own
// current-state cursor.
class AcAutomaton {
 public:
  using StateId = std::uint32_t;
  static constexpr StateId kRoot = 0;
  static constexpr StateId kInvalid = static_cast<StateId>(-1);

  explicit AcAutomaton(const PatternSet& ps);

  // Full transition function: follows fail links until a trie edge exists or
  // the root is reached. Edge lookup is a binary search over the sorted edge
  // list, O(log sigma).
  StateId step(StateId state, std::uint8_t byte) const {
    while (true) {
      const StateId t = trie_child(state, byte);
      if (t != kInvalid) return t;
      if (state == kRoot) return kRoot;
      state = fail_[state];
    }
  }

  // Slot bits matching with end position at the current state: the state's
  // own bit set when its label is a keyword, otherwise the output link's,
  // otherwise all zeros.
  const std::uint64_t* matched_words(StateId state) const {
    return bits_pool_.data() + static_cast<std::size_t>(rep_row_[state]) * words_;
  }
  BitColumn matched_bits(StateId state) const;

  std::size_t bit_count() const { return klen_; }
  std::size_t word_count() const { return words_; }
  std::size_t state_count() const { return fail_.size(); }

  // Trie-only edge, kInvalid when absent.
  StateId trie_child(StateId state, std::uint8_t byte) const {
    const std::uint32_t begin = edge_begin_[state];
    const std::uint32_t end = edge_begin_[state + 1];
    std::uint32_t lo = begin, hi = end;
    while (lo < hi) {
      const std::uint32_t mid = (lo + hi) / 2;
      if (edge_labels_[mid] < byte)
        lo = mid + 1;
      else
        hi = mid;
    }
    if (lo < end && edge_labels_[lo] == byte) return edge_targets_[lo];
    return kInvalid;
  }

  StateId fail(StateId state) const { return fail_[state]; }
  // Nearest proper-suffix state whose label is a keyword, kInvalid if none.
  StateId output_link(StateId state) const { return out_link_[state]; }
  bool is_keyword_state(StateId state) const { return keyword_row_[state] != 0; }

 private:
  std::size_t klen_ = 0;
  std::size_t words_ = 0;

  std::vector<std::uint32_t> edge_begin_;
  std::vector<std::uint8_t> edge_labels_;
  std::vector<StateId> edge_targets_;
  std::vector<StateId> fail_;
  std::vector<StateId> out_link_;
  std::vector<std::uint32_t> keyword_row_;  // row in bits_pool_, 0 = not a keyword state
  std::vector<std::uint32_t> rep_row_;      // row used by matched_words, 0 = all-zero row
  std::vector<std::uint64_t> bits_pool_;    // row 0 is all zeros
};

}  // namespace gapmatch
