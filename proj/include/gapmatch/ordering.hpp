#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gapmatch/bitcolumn.hpp"
#include "gapmatch/pattern.hpp"

namespace gapmatch::ordering {

// The column matcher's per-position combine work is the number of distinct
// gap values per machine word of the bit layout, summed over words. Patterns
// packed into the same word should therefore share gap values; choosing the
// permutation that minimizes the sum is NP-hard, so a greedy heuristic is
// provided and both the abstract and the realized cost can be evaluated.
// All costs read the end-to-end gap list of each pattern.

// Abstract cost: concatenate the per-pattern gap lists in permutation order,
// cut the concatenation into bins of bin_width slots (last bin partial), and
// sum the number of distinct values per bin.
std::uint64_t binned_distinct_cost(const PatternSet& ps, std::span<const std::uint32_t> perm,
                                   std::uint64_t bin_width);

// Realized cost: gaps sit at the bit positions of their keyword slots in the
// permuted layout (klen bits per pattern, the last slot of a pattern carries
// no gap); distinct values per word_bits-wide word, summed. This is exactly
// what the column matcher pays per text position.
std::uint64_t layout_gap_cost(const PatternSet& ps, std::span<const std::uint32_t> perm,
                              std::uint64_t word_bits = kWordBits);

std::vector<std::uint32_t> identity_order(std::size_t n);

// Nearest-neighbour chaining: start from the pattern with the most gap
// slots, then repeatedly append the unplaced pattern sharing the most
// distinct gap values with the last (possibly partial) word of the layout
// built so far. Ties fall back to the smallest input index. The result is
// not guaranteed to beat the input order; compare costs when it matters.
std::vector<std::uint32_t> greedy_order(const PatternSet& ps,
                                        std::uint64_t word_bits = kWordBits);

// Reordered copy; perm[i] is the input index placed at position i.
PatternSet permute(const PatternSet& ps, std::span<const std::uint32_t> perm);

}  // namespace gapmatch::ordering
