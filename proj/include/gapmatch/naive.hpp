#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "gapmatch/pattern.hpp"

namespace gapmatch::naive {

// Reference implementations used as ground truth by the tests and exposed on
// the command line as the "naive" engine. They test keyword matches by direct
// byte comparison and deliberately share no code with the automaton-based
// matchers.

// Full prefix-occurrence matrix of one surface-convention pattern: entry
// (l, i) is 1 when the prefix made of the first l+1 keywords (and the gaps
// between them) ends at text position i.
std::vector<std::vector<std::uint8_t>> dp_matrix(const GappedPattern& p, std::string_view text);

// All full-pattern matches of a surface-convention set, sorted by
// (end position, pattern index).
std::vector<Occurrence> dp_match(const PatternSet& ps, std::string_view text);

// End positions where the pattern matches, checked directly against the
// occurrence definition: the window of length span() ending there must carry
// every keyword at its fixed offset. Restricted to span() <= 64 and
// |text| <= 256 to keep test instances small; throws std::out_of_range
// beyond that envelope.
std::vector<std::uint64_t> enumerate_match(const GappedPattern& p, std::string_view text);

}  // namespace gapmatch::naive
