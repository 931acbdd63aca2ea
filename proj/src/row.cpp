#include "gapmatch/row.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace gapmatch::row {

Searcher::Searcher(const PatternSet& ps, bool record_rows) : record_(record_rows) {
  if (ps.convention != GapConvention::surface)
    throw std::invalid_argument("row matcher expects surface gap convention");
  pats_.reserve(ps.patterns.size());
  for (const GappedPattern& p : ps.patterns) {
    const GappedPattern unit = split_keywords(p);  // rejects character classes
    SplitPattern sp;
    sp.symbols.reserve(unit.keywords.size());
    for (const Keyword& kw : unit.keywords)
      sp.symbols.push_back(static_cast<std::uint8_t>(kw.value()[0]));
    std::uint64_t max_step = 1;
    for (std::uint64_t g : unit.gaps) {
      sp.steps.push_back(g + 1);
      max_step = std::max(max_step, g + 1);
    }
    // Rows reach back at most max_step/64 + 1 chunks; one more slot holds the
    // chunk being written.
    sp.hist_len = std::bit_ceil(max_step / kWordBits + 2);
    for (std::uint64_t g : sp.steps)
      if (g / kWordBits + 1 >= sp.hist_len)
        throw std::logic_error("row history window too small for its gaps");
    pats_.push_back(std::move(sp));
  }
  hist_.resize(pats_.size());
  recorded_.resize(pats_.size());
}

std::vector<Occurrence> Searcher::search(std::string_view text) {
  return search(text, {});
}

std::vector<Occurrence> Searcher::search(std::string_view text,
                                         const std::function<void(std::size_t)>& after_chunk) {
  const std::size_t n = text.size();
  const std::size_t chunks = chunk_count(n);
  for (std::size_t k = 0; k < pats_.size(); ++k) {
    hist_[k].assign(pats_[k].symbols.size() * pats_[k].hist_len, 0);
    if (record_)
      recorded_[k].assign(pats_[k].symbols.size(), std::vector<std::uint64_t>(chunks, 0));
  }

  std::vector<Occurrence> out;
  std::vector<Occurrence> chunk_hits;
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t begin = c * kWordBits;
    const std::size_t end = std::min(n, begin + kWordBits);
    for (std::size_t i = begin; i < end; ++i)
      symbol_mask_[static_cast<std::uint8_t>(text[i])] |= std::uint64_t{1} << (i - begin);

    chunk_hits.clear();
    for (std::size_t k = 0; k < pats_.size(); ++k) {
      const SplitPattern& p = pats_[k];
      const std::uint64_t hist_mask = p.hist_len - 1;
      std::uint64_t* rows = hist_[k].data();
      std::uint64_t word = 0;
      for (std::size_t r = 0; r < p.symbols.size(); ++r) {
        word = symbol_mask_[p.symbols[r]];
        if (r > 0) {
          const std::uint64_t g = p.steps[r - 1];
          const std::uint64_t back = g / kWordBits;
          assert(back + 1 < p.hist_len);
          const std::uint64_t* prev = rows + (r - 1) * p.hist_len;
          const std::uint64_t newer = c >= back ? prev[(c - back) & hist_mask] : 0;
          const std::uint64_t older = c >= back + 1 ? prev[(c - back - 1) & hist_mask] : 0;
          word &= combine_chunk_words(older, newer, g);
        }
        rows[r * p.hist_len + (c & hist_mask)] = word;
        if (record_) recorded_[k][r][c] = word;
      }
      std::uint64_t hits = word;  // last row
      while (hits) {
        const int b = std::countr_zero(hits);
        hits &= hits - 1;
        chunk_hits.push_back(
            Occurrence{begin + static_cast<std::size_t>(b), static_cast<std::uint32_t>(k)});
      }
    }
    std::sort(chunk_hits.begin(), chunk_hits.end());
    out.insert(out.end(), chunk_hits.begin(), chunk_hits.end());

    for (std::size_t i = begin; i < end; ++i)
      symbol_mask_[static_cast<std::uint8_t>(text[i])] = 0;
    if (after_chunk) after_chunk(c);
  }
  return out;
}

bool Searcher::symbol_masks_clear() const {
  for (std::uint64_t w : symbol_mask_)
    if (w) return false;
  return true;
}

std::vector<Occurrence> search_all(const PatternSet& ps, std::string_view text) {
  Searcher searcher(ps);
  return searcher.search(text);
}

std::vector<std::uint64_t> search_one(const GappedPattern& p, std::string_view text,
                                      const Alphabet& alphabet) {
  PatternSet ps;
  ps.alphabet = alphabet;
  ps.patterns.push_back(p);
  std::vector<std::uint64_t> out;
  for (const Occurrence& occ : search_all(ps, text)) out.push_back(occ.end);
  return out;
}

}  // namespace gapmatch::row
