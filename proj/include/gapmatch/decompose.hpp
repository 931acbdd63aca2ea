#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gapmatch/pattern.hpp"

namespace gapmatch::decompose {

// A set X of gap values such that every gap of interest is a sum of at most
// max_summands (not necessarily distinct) elements of X.
struct GeneratingSet {
  std::vector<std::uint64_t> elements;  // sorted ascending, no duplicates
  std::uint32_t max_summands = 1;
};

// Default construction over the distinct end-to-end gap values: the minimum
// gap plus the powers of two up to the gap range size, so that every gap g
// decomposes as min + binary expansion of (g - min) within
// floor(log2(range)) + 2 summands. A single distinct gap value needs no
// decomposition and yields {g} with one summand.
GeneratingSet power_of_two_generating_set(std::span<const std::uint64_t> gap_values);

// One decomposed gap: an alternating chain of gaps and single-symbol
// wildcards replacing a gap of value g. The chain consumes exactly g text
// positions between the ends of the surrounding keywords.
struct GapChain {
  // Chain entries in order, ascending; these are the end-to-end distances of
  // the wildcard hops, summing to g.
  std::vector<std::uint64_t> summands;

  // Display form: the first size()-1 entries are the surface gaps written
  // before each inserted wildcard (summand - 1), the last entry is the final
  // summand itself. sum(written) + number of wildcards == g.
  std::vector<std::uint64_t> written() const;
};

// Reusable min-summand decomposition table over one generating set.
class GapDecomposer {
 public:
  GapDecomposer(GeneratingSet gs, std::uint64_t max_gap);

  // Throws std::invalid_argument when g cannot be written as a sum of at
  // most max_summands elements (possible only for custom generating sets).
  GapChain chain_for(std::uint64_t g) const;

  const GeneratingSet& generating_set() const { return gs_; }

 private:
  GeneratingSet gs_;
  std::vector<std::uint32_t> count_;   // minimum number of summands, ~0u unreachable
  std::vector<std::uint64_t> choice_;  // summand picked at each value
};

GapChain decompose_gap(std::uint64_t g, const GeneratingSet& gs);

// Rewrites an end_to_end pattern set into an equivalent one whose distinct
// gap values are a subset of the generating set, inserting single-symbol
// wildcard keywords between the chain hops. Keyword count grows by at most
// max_summands - 1 per gap; the occurrence set is unchanged.
PatternSet decompose_gaps(const PatternSet& ps);
PatternSet decompose_gaps(const PatternSet& ps, const GeneratingSet& gs);

}  // namespace gapmatch::decompose
