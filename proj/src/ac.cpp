#include "gapmatch/ac.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace gapmatch {

namespace {

struct BuildState {
  std::vector<std::pair<std::uint8_t, std::uint32_t>> edges;  // sorted by label

  std::uint32_t child(std::uint8_t c) const {
    const auto it = std::lower_bound(edges.begin(), edges.end(), c,
                                     [](const auto& e, std::uint8_t b) { return e.first < b; });
    if (it != edges.end() && it->first == c) return it->second;
    return AcAutomaton::kInvalid;
  }
};

}  // namespace

AcAutomaton::AcAutomaton(const PatternSet& ps) {
  if (ps.patterns.empty()) throw std::invalid_argument("automaton needs a non-empty pattern set");
  klen_ = ps.klen();
  words_ = (klen_ + kWordBits - 1) / kWordBits;

  std::vector<BuildState> states(1);
  std::vector<std::uint32_t> keyword_row(1, 0);
  bits_pool_.assign(words_, 0);  // row 0: all zeros
  std::uint32_t rows = 1;

  const auto insert_string = [&](std::string_view s, std::size_t bit) {
    std::uint32_t q = kRoot;
    for (char ch : s) {
      const auto b = static_cast<std::uint8_t>(ch);
      std::uint32_t t = states[q].child(b);
      if (t == kInvalid) {
        t = static_cast<std::uint32_t>(states.size());
        states.emplace_back();
        keyword_row.push_back(0);
        auto& edges = states[q].edges;
        edges.insert(std::lower_bound(edges.begin(), edges.end(), b,
                                      [](const auto& e, std::uint8_t c) { return e.first < c; }),
                     {b, t});
      }
      q = t;
    }
    if (keyword_row[q] == 0) {
      keyword_row[q] = rows++;
      bits_pool_.resize(static_cast<std::size_t>(rows) * words_, 0);
    }
    bits_pool_[static_cast<std::size_t>(keyword_row[q]) * words_ + bit / kWordBits] |=
        std::uint64_t{1} << (bit % kWordBits);
  };

  std::size_t bit = 0;
  for (const GappedPattern& p : ps.patterns) {
    validate(p);
    for (const Keyword& kw : p.keywords) {
      if (kw.is_class()) {
        for (char c : kw.value()) insert_string(std::string_view(&c, 1), bit);
      } else {
        insert_string(kw.value(), bit);
      }
      ++bit;
    }
  }

  const std::size_t n_states = states.size();
  fail_.assign(n_states, kRoot);
  out_link_.assign(n_states, kInvalid);
  keyword_row_ = std::move(keyword_row);
  rep_row_.assign(n_states, 0);

  // Breadth-first pass: fail links, output links, and suffix-closure of the
  // per-state bit sets (a keyword state inherits the bits of its nearest
  // keyword suffix, which lies at a smaller depth and is already final).
  std::deque<std::uint32_t> queue;
  for (const auto& [label, child] : states[kRoot].edges) {
    (void)label;
    queue.push_back(child);
  }
  while (!queue.empty()) {
    const std::uint32_t q = queue.front();
    queue.pop_front();
    for (const auto& [label, child] : states[q].edges) {
      std::uint32_t f = fail_[q];
      std::uint32_t t;
      while ((t = states[f].child(label)) == kInvalid && f != kRoot) f = fail_[f];
      fail_[child] = (t != kInvalid && t != child) ? t : kRoot;
      queue.push_back(child);
    }
    out_link_[q] = keyword_row_[fail_[q]] != 0 ? fail_[q] : out_link_[fail_[q]];
    if (keyword_row_[q] != 0) {
      if (out_link_[q] != kInvalid) {
        const std::uint64_t* src = bits_pool_.data() +
                                   static_cast<std::size_t>(keyword_row_[out_link_[q]]) * words_;
        std::uint64_t* dst = bits_pool_.data() + static_cast<std::size_t>(keyword_row_[q]) * words_;
        for (std::size_t j = 0; j < words_; ++j) dst[j] |= src[j];
      }
      rep_row_[q] = keyword_row_[q];
    } else if (out_link_[q] != kInvalid) {
      rep_row_[q] = keyword_row_[out_link_[q]];
    }
  }

  // Freeze edges into a compact layout for the search-time binary lookups.
  edge_begin_.assign(n_states + 1, 0);
  std::size_t total_edges = 0;
  for (std::size_t q = 0; q < n_states; ++q) total_edges += states[q].edges.size();
  edge_labels_.reserve(total_edges);
  edge_targets_.reserve(total_edges);
  for (std::size_t q = 0; q < n_states; ++q) {
    edge_begin_[q] = static_cast<std::uint32_t>(edge_labels_.size());
    for (const auto& [label, child] : states[q].edges) {
      edge_labels_.push_back(label);
      edge_targets_.push_back(child);
    }
  }
  edge_begin_[n_states] = static_cast<std::uint32_t>(edge_labels_.size());
}

BitColumn AcAutomaton::matched_bits(StateId state) const {
  BitColumn out(klen_);
  const std::uint64_t* src = matched_words(state);
  std::copy(src, src + words_, out.data());
  return out;
}

}  // namespace gapmatch
