#include "gapmatch/column.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace gapmatch::column {

Matcher::Matcher(const PatternSet& ps) : ac_(ps) {
  if (ps.convention != GapConvention::end_to_end)
    throw std::invalid_argument("column matcher expects end_to_end gap convention");
  klen_ = ps.klen();
  words_ = (klen_ + kWordBits - 1) / kWordBits;
  first_words_.assign(words_, 0);
  last_words_.assign(words_, 0);
  bit_to_pattern_.assign(klen_, 0);

  std::vector<std::pair<std::uint64_t, std::size_t>> slot_gaps;  // (gap, bit)
  std::size_t bit = 0;
  for (std::size_t k = 0; k < ps.patterns.size(); ++k) {
    const GappedPattern& p = ps.patterns[k];
    first_words_[bit / kWordBits] |= std::uint64_t{1} << (bit % kWordBits);
    for (std::size_t l = 0; l < p.klen(); ++l, ++bit) {
      bit_to_pattern_[bit] = static_cast<std::uint32_t>(k);
      if (l + 1 == p.klen()) {
        last_words_[bit / kWordBits] |= std::uint64_t{1} << (bit % kWordBits);
      } else {
        const std::uint64_t g = p.gaps[l];
        if (g == 0)
          throw std::invalid_argument("end_to_end gaps must be >= 1");
        if (g > kMaxGap)
          throw std::invalid_argument("gap exceeds the configured bound");
        slot_gaps.emplace_back(g, bit);
      }
    }
  }

  std::sort(slot_gaps.begin(), slot_gaps.end());
  for (const auto& [g, b] : slot_gaps) {
    if (gap_masks_.empty() || gap_masks_.back().first != g) {
      gaps_.push_back(g);
      gap_masks_.emplace_back(g, BitColumn(klen_));
    }
    gap_masks_.back().second.set(b);
  }

  word_gaps_.resize(words_);
  for (const auto& [g, mask] : gap_masks_) {
    for (std::size_t j = 0; j < words_; ++j)
      if (mask.word(j) != 0) word_gaps_[j].push_back(GapWord{g, mask.word(j)});
  }
  for (const auto& wg : word_gaps_) {
    assert(wg.size() <= std::min<std::size_t>(kWordBits, gaps_.size()));
    gap_cost_ += wg.size();
  }

  if (!gaps_.empty()) ring_len_ = std::bit_ceil(gaps_.back() + 1);
}

Matcher::Cursor::Cursor(const Matcher& m)
    : m_(&m), ring_(m.ring_len_ * m.words_, 0), state_(AcAutomaton::kRoot) {}

void Matcher::Cursor::feed(std::uint8_t byte, std::vector<std::uint32_t>& out) {
  const Matcher& m = *m_;
  state_ = m.ac_.step(state_, byte);
  const std::uint64_t* matched = m.ac_.matched_words(state_);

  const std::uint64_t i = pos_;
  const std::uint64_t ring_mask = m.ring_len_ - 1;
  std::uint64_t* cur = ring_.data() + (i & ring_mask) * m.words_;

  // Combine the history columns word by word, visiting only the gaps whose
  // mask touches the word; the shift by one carries across word boundaries
  // because patterns may straddle them. Columns before the text start read
  // as zero: their ring slots have not been written yet.
  std::uint64_t carry = 0;
  std::uint64_t matched_any = 0;
  for (std::size_t j = 0; j < m.words_; ++j) {
    std::uint64_t h = 0;
    for (const GapWord& gw : m.word_gaps_[j])
      h |= ring_[((i + m.ring_len_ - gw.gap) & ring_mask) * m.words_ + j] & gw.mask;
    const std::uint64_t extended = (h << 1) | carry | m.first_words_[j];
    carry = h >> (kWordBits - 1);
    cur[j] = extended & matched[j];
    matched_any |= cur[j] & m.last_words_[j];
  }
  ++pos_;

  if (matched_any == 0) return;
  // Most significant bit first, as the report loop extracts them, then
  // flipped to the ascending report order.
  const std::size_t first = out.size();
  for (std::size_t j = m.words_; j-- > 0;) {
    std::uint64_t w = cur[j] & m.last_words_[j];
    while (w) {
      const int b = kWordBits - 1 - std::countl_zero(w);
      out.push_back(m.bit_to_pattern_[j * kWordBits + static_cast<std::size_t>(b)]);
      w &= ~(std::uint64_t{1} << b);
    }
  }
  std::reverse(out.begin() + static_cast<std::ptrdiff_t>(first), out.end());
}

BitColumn Matcher::Cursor::column() const {
  assert(pos_ > 0);
  const Matcher& m = *m_;
  BitColumn out(m.klen_);
  const std::uint64_t* cur = ring_.data() + ((pos_ - 1) & (m.ring_len_ - 1)) * m.words_;
  std::copy(cur, cur + m.words_, out.data());
  return out;
}

std::vector<Occurrence> Matcher::search(std::string_view text) const {
  Cursor cursor(*this);
  std::vector<Occurrence> out;
  std::vector<std::uint32_t> hits;
  for (std::size_t i = 0; i < text.size(); ++i) {
    hits.clear();
    cursor.feed(static_cast<std::uint8_t>(text[i]), hits);
    for (std::uint32_t k : hits) out.push_back(Occurrence{i, k});
  }
  return out;
}

std::vector<std::uint32_t> Matcher::report_bits(const BitColumn& masked) const {
  std::vector<std::uint32_t> out;
  BitColumn h = masked;
  while (h.any()) {
    const std::size_t b = h.highest_bit();
    out.push_back(bit_to_pattern_[b]);
    h.clear_bit(b);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

BitColumn Matcher::first_keyword_mask() const {
  BitColumn out(klen_);
  std::copy(first_words_.begin(), first_words_.end(), out.data());
  return out;
}

BitColumn Matcher::last_keyword_mask() const {
  BitColumn out(klen_);
  std::copy(last_words_.begin(), last_words_.end(), out.data());
  return out;
}

BitColumn Matcher::gap_mask(std::uint64_t g) const {
  for (const auto& [gap, mask] : gap_masks_)
    if (gap == g) return mask;
  return BitColumn(klen_);
}

std::vector<std::size_t> Matcher::per_word_gap_counts() const {
  std::vector<std::size_t> out(words_);
  for (std::size_t j = 0; j < words_; ++j) out[j] = word_gaps_[j].size();
  return out;
}

}  // namespace gapmatch::column
