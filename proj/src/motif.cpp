#include "gapmatch/motif.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <stdexcept>

#include "gapmatch/column.hpp"

namespace gapmatch::motif {

std::vector<PatternRule> compile_features(const std::vector<Feature>& features,
                                          std::uint32_t window) {
  std::vector<PatternRule> rules;
  // Rule key: the symbol sequence and the gap sequence of the induced pattern.
  std::map<std::pair<std::string, std::vector<std::uint64_t>>, std::size_t> index;

  for (std::size_t f = 0; f < features.size(); ++f) {
    const Feature& feature = features[f];
    if (feature.pairs.empty())
      throw std::invalid_argument("feature " + std::to_string(f) + " has no pairs");
    auto pairs = feature.pairs;
    std::sort(pairs.begin(), pairs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::string symbols;
    std::vector<std::uint64_t> gaps;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto [pos, sym] = pairs[i];
      if (pos < 1 || pos > window)
        throw std::invalid_argument("feature " + std::to_string(f) + ": position " +
                                    std::to_string(pos) + " outside 1.." + std::to_string(window));
      if (i > 0) {
        if (pos == pairs[i - 1].first)
          throw std::invalid_argument("feature " + std::to_string(f) + ": duplicate position " +
                                      std::to_string(pos));
        gaps.push_back(pos - pairs[i - 1].first - 1);
      }
      symbols.push_back(sym);
    }

    const auto key = std::make_pair(symbols, gaps);
    auto it = index.find(key);
    if (it == index.end()) {
      PatternRule rule;
      for (std::size_t i = 0; i < symbols.size(); ++i)
        rule.pattern.keywords.push_back(Keyword::literal(std::string(1, symbols[i])));
      rule.pattern.gaps = gaps;
      it = index.emplace(key, rules.size()).first;
      rules.push_back(std::move(rule));
    }
    rules[it->second].anchors.emplace_back(pairs.back().first, feature.weight);
  }

  for (PatternRule& rule : rules)
    std::stable_sort(rule.anchors.begin(), rule.anchors.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
  return rules;
}

std::vector<double> score_sequence(const std::vector<PatternRule>& rules, std::uint32_t window,
                                   std::string_view text, const Alphabet& alphabet) {
  if (window == 0) throw std::invalid_argument("window must be positive");
  const std::size_t n = text.size();
  if (n < window) return {};
  std::vector<double> scores(n - window + 1, 0.0);
  if (rules.empty()) return scores;

  PatternSet ps;
  ps.alphabet = alphabet;
  for (const PatternRule& rule : rules) ps.patterns.push_back(rule.pattern);
  const column::Matcher matcher(to_end_to_end_gaps(ps));
  column::Matcher::Cursor cursor(matcher);

  // Running scores for the window sites, slot s % window; the slot of site s
  // is complete once position s + window - 1 has been read, which is exactly
  // when it is flushed and recycled below.
  std::vector<double> queue(window, 0.0);
  std::vector<std::uint32_t> hits;
  for (std::size_t i = 0; i < n; ++i) {
    hits.clear();
    cursor.feed(static_cast<std::uint8_t>(text[i]), hits);
    for (std::uint32_t r : hits) {
      for (const auto& [anchor, weight] : rules[r].anchors) {
        const std::int64_t start = static_cast<std::int64_t>(i) - anchor + 1;
        if (start >= 0 && start <= static_cast<std::int64_t>(n - window))
          queue[static_cast<std::size_t>(start) % window] += weight;
      }
    }
    if (i + 1 >= window) {
      const std::size_t site = i + 1 - window;
      scores[site] = queue[site % window];
      queue[site % window] = 0.0;
    }
  }
  return scores;
}

std::vector<Feature> parse_feature_file(std::string_view contents) {
  std::vector<Feature> features;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= contents.size()) {
    const std::size_t nl = contents.find('\n', pos);
    std::string_view line =
        contents.substr(pos, nl == std::string_view::npos ? contents.size() - pos : nl - pos);
    ++lineno;
    pos = (nl == std::string_view::npos) ? contents.size() + 1 : nl + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    const std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos)
      throw ParseError(lineno, "expected '<weight>\\t<pos:sym,...>'");
    Feature feature;
    const std::string_view weight_text = line.substr(0, tab);
    const auto [wptr, wec] =
        std::from_chars(weight_text.data(), weight_text.data() + weight_text.size(),
                        feature.weight);
    if (wec != std::errc{} || wptr != weight_text.data() + weight_text.size())
      throw ParseError(lineno, "malformed weight '" + std::string(weight_text) + "'");

    std::string_view rest = line.substr(tab + 1);
    while (!rest.empty()) {
      const std::size_t comma = rest.find(',');
      const std::string_view item = rest.substr(0, comma);
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
      const std::size_t colon = item.find(':');
      if (colon == std::string_view::npos || colon + 2 != item.size())
        throw ParseError(lineno, "malformed pair '" + std::string(item) + "'");
      std::uint32_t position = 0;
      const auto [pptr, pec] = std::from_chars(item.data(), item.data() + colon, position);
      if (pec != std::errc{} || pptr != item.data() + colon || position == 0)
        throw ParseError(lineno, "malformed position in '" + std::string(item) + "'");
      feature.pairs.emplace_back(position, item[colon + 1]);
    }
    if (feature.pairs.empty()) throw ParseError(lineno, "feature has no pairs");
    features.push_back(std::move(feature));
  }
  return features;
}

}  // namespace gapmatch::motif
