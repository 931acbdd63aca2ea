#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "gapmatch/ac.hpp"
#include "gapmatch/bitcolumn.hpp"
#include "gapmatch/pattern.hpp"

namespace gapmatch::column {

// Column-wise bit-parallel matcher. One prefix-occurrence column of
// klen(set) bits is maintained per text position in a ring of the last
// g_max+1 columns; a prefix bit extends to the next keyword bit when the
// column g positions back carries it, where g is the slot's end-to-end gap.
//
// The input set must be in end_to_end gap convention (see
// to_end_to_end_gaps); end-to-end gaps of a well-formed set are >= 1.
//
// The matcher itself is immutable after construction: concurrent searches
// over different texts can share it, each Cursor owns its column history.
class Matcher {
 public:
  // Largest accepted end-to-end gap; bounds the column ring.
  static constexpr std::uint64_t kMaxGap = std::uint64_t{1} << 20;

  explicit Matcher(const PatternSet& ps);

  // All matches, sorted by (end position, pattern index).
  std::vector<Occurrence> search(std::string_view text) const;

  // Pattern indices for the set bits of a (column & last-keyword-mask) word
  // image, extracted most significant bit first and then emitted ascending.
  std::vector<std::uint32_t> report_bits(const BitColumn& masked) const;

  // One in-flight search. Feeding byte i produces the matches ending at i.
  class Cursor {
   public:
    explicit Cursor(const Matcher& m);

    // Consumes one text byte; pattern indices matching at this position are
    // appended to out in ascending order.
    void feed(std::uint8_t byte, std::vector<std::uint32_t>& out);

    std::uint64_t position() const { return pos_; }  // bytes consumed
    // Column of the last consumed position.
    BitColumn column() const;

   private:
    const Matcher* m_;
    std::vector<std::uint64_t> ring_;
    AcAutomaton::StateId state_;
    std::uint64_t pos_ = 0;
  };

  // Preprocessing introspection.
  std::size_t bit_count() const { return klen_; }
  std::size_t word_count() const { return words_; }
  const std::vector<std::uint64_t>& gaps() const { return gaps_; }  // distinct, ascending
  BitColumn first_keyword_mask() const;
  BitColumn last_keyword_mask() const;
  // Bit mask of the slots whose outgoing end-to-end gap equals g.
  BitColumn gap_mask(std::uint64_t g) const;
  // Number of distinct gaps touching each word; the per-position combine
  // work is exactly the sum of these.
  std::vector<std::size_t> per_word_gap_counts() const;
  std::uint64_t gap_cost() const { return gap_cost_; }  // sum over words
  const AcAutomaton& automaton() const { return ac_; }

 private:
  friend class Cursor;

  struct GapWord {
    std::uint64_t gap;
    std::uint64_t mask;
  };

  AcAutomaton ac_;
  std::size_t klen_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> first_words_;
  std::vector<std::uint64_t> last_words_;
  std::vector<std::uint64_t> gaps_;
  std::vector<std::pair<std::uint64_t, BitColumn>> gap_masks_;     // per distinct gap
  std::vector<std::vector<GapWord>> word_gaps_;                    // per word
  std::vector<std::uint32_t> bit_to_pattern_;
  std::uint64_t ring_len_ = 1;  // power of two > g_max
  std::uint64_t gap_cost_ = 0;
};

}  // namespace gapmatch::column
