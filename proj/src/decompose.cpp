#include "gapmatch/decompose.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace gapmatch::decompose {

namespace {
constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();
}

GeneratingSet power_of_two_generating_set(std::span<const std::uint64_t> gap_values) {
  if (gap_values.empty())
    throw std::invalid_argument("generating set needs at least one gap value");
  const auto [min_it, max_it] = std::minmax_element(gap_values.begin(), gap_values.end());
  const std::uint64_t g_min = *min_it;
  const std::uint64_t range = *max_it - g_min + 1;

  GeneratingSet gs;
  if (range == 1) {
    gs.elements = {g_min};
    gs.max_summands = 1;
    return gs;
  }
  const unsigned floor_log = 63u - static_cast<unsigned>(std::countl_zero(range));
  const unsigned ceil_log = floor_log + (std::has_single_bit(range) ? 0u : 1u);
  gs.elements.push_back(g_min);
  for (unsigned i = 0; i <= ceil_log; ++i) gs.elements.push_back(std::uint64_t{1} << i);
  std::sort(gs.elements.begin(), gs.elements.end());
  gs.elements.erase(std::unique(gs.elements.begin(), gs.elements.end()), gs.elements.end());
  gs.max_summands = floor_log + 2;
  return gs;
}

std::vector<std::uint64_t> GapChain::written() const {
  std::vector<std::uint64_t> out(summands);
  for (std::size_t i = 0; i + 1 < out.size(); ++i) out[i] -= 1;
  return out;
}

GapDecomposer::GapDecomposer(GeneratingSet gs, std::uint64_t max_gap) : gs_(std::move(gs)) {
  if (gs_.elements.empty()) throw std::invalid_argument("empty generating set");
  std::sort(gs_.elements.begin(), gs_.elements.end());
  gs_.elements.erase(std::unique(gs_.elements.begin(), gs_.elements.end()), gs_.elements.end());

  count_.assign(max_gap + 1, kUnreachable);
  choice_.assign(max_gap + 1, 0);
  count_[0] = 0;
  // Scan elements descending and improve strictly, so among minimum-length
  // decompositions the one taking the largest element at each step wins.
  // That choice regenerates the plain binary expansion for power-of-two sets.
  for (std::uint64_t a = 1; a <= max_gap; ++a) {
    for (std::size_t e = gs_.elements.size(); e-- > 0;) {
      const std::uint64_t x = gs_.elements[e];
      if (x == 0 || x > a) continue;
      const std::uint32_t prev = count_[a - x];
      if (prev != kUnreachable && prev + 1 < count_[a]) {
        count_[a] = prev + 1;
        choice_[a] = x;
      }
    }
  }
}

GapChain GapDecomposer::chain_for(std::uint64_t g) const {
  GapChain chain;
  if (g == 0) {
    if (!std::binary_search(gs_.elements.begin(), gs_.elements.end(), std::uint64_t{0}))
      throw std::invalid_argument("gap 0 requires 0 in the generating set");
    chain.summands = {0};
    return chain;
  }
  if (g >= count_.size() || count_[g] == kUnreachable || count_[g] > gs_.max_summands)
    throw std::invalid_argument("gap " + std::to_string(g) +
                                " is not generatable within the summand bound");
  std::uint64_t a = g;
  while (a > 0) {
    chain.summands.push_back(choice_[a]);
    a -= choice_[a];
  }
  std::sort(chain.summands.begin(), chain.summands.end());
  return chain;
}

GapChain decompose_gap(std::uint64_t g, const GeneratingSet& gs) {
  return GapDecomposer(gs, g).chain_for(g);
}

PatternSet decompose_gaps(const PatternSet& ps) {
  const auto values = gap_values(ps);
  if (values.empty()) return ps;
  return decompose_gaps(ps, power_of_two_generating_set(values));
}

PatternSet decompose_gaps(const PatternSet& ps, const GeneratingSet& gs) {
  if (ps.convention != GapConvention::end_to_end)
    throw std::invalid_argument("decompose_gaps expects end_to_end gap convention");
  const auto range = gap_range(ps);
  if (!range) return ps;

  const GapDecomposer decomposer(gs, range->max);
  PatternSet out;
  out.alphabet = ps.alphabet;
  out.convention = GapConvention::end_to_end;
  out.patterns.reserve(ps.patterns.size());
  const Keyword wildcard = Keyword::wildcard(ps.alphabet);

  for (const GappedPattern& p : ps.patterns) {
    GappedPattern q;
    q.keywords.push_back(p.keywords[0]);
    for (std::size_t i = 0; i < p.gaps.size(); ++i) {
      const GapChain chain = decomposer.chain_for(p.gaps[i]);
      for (std::size_t j = 0; j < chain.summands.size(); ++j) {
        q.gaps.push_back(chain.summands[j]);
        q.keywords.push_back(j + 1 < chain.summands.size() ? wildcard : p.keywords[i + 1]);
      }
    }
    out.patterns.push_back(std::move(q));
  }
  return out;
}

}  // namespace gapmatch::decompose
