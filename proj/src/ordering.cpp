#include "gapmatch/ordering.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gapmatch::ordering {

namespace {

void check_permutation(std::size_t n, std::span<const std::uint32_t> perm) {
  if (perm.size() != n) throw std::invalid_argument("permutation size mismatch");
  std::vector<bool> seen(n, false);
  for (std::uint32_t k : perm) {
    if (k >= n || seen[k]) throw std::invalid_argument("not a permutation");
    seen[k] = true;
  }
}

std::uint64_t distinct_count(std::vector<std::uint64_t>& values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values.size();
}

}  // namespace

std::uint64_t binned_distinct_cost(const PatternSet& ps, std::span<const std::uint32_t> perm,
                                   std::uint64_t bin_width) {
  check_permutation(ps.patterns.size(), perm);
  if (bin_width == 0) throw std::invalid_argument("bin width must be positive");
  std::vector<std::uint64_t> concatenated;
  for (std::uint32_t k : perm) {
    const auto gaps = end_to_end_gaps(ps.patterns[k], ps.convention);
    concatenated.insert(concatenated.end(), gaps.begin(), gaps.end());
  }
  std::uint64_t cost = 0;
  std::vector<std::uint64_t> bin;
  for (std::size_t i = 0; i < concatenated.size(); i += bin_width) {
    const std::size_t end = std::min(concatenated.size(), i + bin_width);
    bin.assign(concatenated.begin() + static_cast<std::ptrdiff_t>(i),
               concatenated.begin() + static_cast<std::ptrdiff_t>(end));
    cost += distinct_count(bin);
  }
  return cost;
}

std::uint64_t layout_gap_cost(const PatternSet& ps, std::span<const std::uint32_t> perm,
                              std::uint64_t word_bits) {
  check_permutation(ps.patterns.size(), perm);
  if (word_bits == 0) throw std::invalid_argument("word width must be positive");
  std::vector<std::vector<std::uint64_t>> per_word;
  std::size_t bit = 0;
  for (std::uint32_t k : perm) {
    const GappedPattern& p = ps.patterns[k];
    const auto gaps = end_to_end_gaps(p, ps.convention);
    for (std::size_t l = 0; l < p.klen(); ++l, ++bit) {
      if (l + 1 == p.klen()) continue;  // last slot has no outgoing gap
      const std::size_t word = bit / word_bits;
      if (word >= per_word.size()) per_word.resize(word + 1);
      per_word[word].push_back(gaps[l]);
    }
  }
  std::uint64_t cost = 0;
  for (auto& values : per_word) cost += distinct_count(values);
  return cost;
}

std::vector<std::uint32_t> identity_order(std::size_t n) {
  std::vector<std::uint32_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<std::uint32_t>(i);
  return perm;
}

std::vector<std::uint32_t> greedy_order(const PatternSet& ps, std::uint64_t word_bits) {
  const std::size_t n = ps.patterns.size();
  if (n == 0) return {};
  if (word_bits == 0) throw std::invalid_argument("word width must be positive");

  std::vector<std::vector<std::uint64_t>> gap_lists(n);
  std::vector<std::set<std::uint64_t>> gap_sets(n);
  for (std::size_t k = 0; k < n; ++k) {
    gap_lists[k] = end_to_end_gaps(ps.patterns[k], ps.convention);
    gap_sets[k].insert(gap_lists[k].begin(), gap_lists[k].end());
  }

  std::vector<bool> placed(n, false);
  std::vector<std::uint32_t> perm;
  perm.reserve(n);

  std::size_t start = 0;
  for (std::size_t k = 1; k < n; ++k) {
    if (gap_lists[k].size() > gap_lists[start].size() ||
        (gap_lists[k].size() == gap_lists[start].size() &&
         gap_sets[k].size() > gap_sets[start].size()))
      start = k;
  }
  perm.push_back(static_cast<std::uint32_t>(start));
  placed[start] = true;
  std::size_t bits = ps.patterns[start].klen();

  while (perm.size() < n) {
    // Distinct gap values inside the last, possibly partial, word of the
    // layout built so far.
    const std::size_t word_begin = ((bits - 1) / word_bits) * word_bits;
    std::set<std::uint64_t> tail;
    std::size_t bit = 0;
    for (std::uint32_t k : perm) {
      const GappedPattern& p = ps.patterns[k];
      for (std::size_t l = 0; l < p.klen(); ++l, ++bit)
        if (l + 1 < p.klen() && bit >= word_begin) tail.insert(gap_lists[k][l]);
    }

    std::size_t best = n;
    std::size_t best_overlap = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (placed[k]) continue;
      std::size_t overlap = 0;
      for (std::uint64_t g : gap_sets[k]) overlap += tail.count(g);
      if (best == n || overlap > best_overlap) {
        best = k;
        best_overlap = overlap;
      }
    }
    perm.push_back(static_cast<std::uint32_t>(best));
    placed[best] = true;
    bits += ps.patterns[best].klen();
  }
  return perm;
}

PatternSet permute(const PatternSet& ps, std::span<const std::uint32_t> perm) {
  check_permutation(ps.patterns.size(), perm);
  PatternSet out;
  out.alphabet = ps.alphabet;
  out.convention = ps.convention;
  out.patterns.reserve(ps.patterns.size());
  for (std::uint32_t k : perm) out.patterns.push_back(ps.patterns[k]);
  return out;
}

}  // namespace gapmatch::ordering
