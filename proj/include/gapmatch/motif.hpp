#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "gapmatch/pattern.hpp"

namespace gapmatch::motif {

// Motif scoring over weighted features. A feature is a set of
// (window position, symbol) requirements with a weight; the score of a text
// site (window of length m) is the sum of the weights of all features it
// satisfies. Features are compiled into position-independent gapped-pattern
// rules, matched in one pass with the column matcher, and the per-site sums
// are accumulated in a circular queue of m running scores.

struct Feature {
  double weight = 0.0;
  // 1-based positions inside the window, with the required symbol.
  std::vector<std::pair<std::uint32_t, char>> pairs;
};

struct PatternRule {
  // Unit-length literal keywords with gaps position[i+1]-position[i]-1.
  GappedPattern pattern;
  // (position of the last pair, weight) of every feature sharing this
  // pattern, in ascending position order; the summation order is fixed.
  std::vector<std::pair<std::uint32_t, double>> anchors;
};

// Sorts the pairs of each feature by position and merges features that
// induce the same gapped pattern into one rule. Throws std::invalid_argument
// for positions outside 1..window or duplicated within a feature.
std::vector<PatternRule> compile_features(const std::vector<Feature>& features,
                                          std::uint32_t window);

// Score of every site start 0 .. n-window (empty when the text is shorter
// than the window). A rule match ending at text position j credits each
// anchor (q, w) to the site starting at j - q + 1 when that site exists.
std::vector<double> score_sequence(const std::vector<PatternRule>& rules, std::uint32_t window,
                                   std::string_view text,
                                   const Alphabet& alphabet = Alphabet::full());

// Feature file: one feature per line, "weight<TAB>pos:sym,pos:sym,...".
// '#' lines are comments. Reported line numbers are 1-based.
std::vector<Feature> parse_feature_file(std::string_view contents);

}  // namespace gapmatch::motif
