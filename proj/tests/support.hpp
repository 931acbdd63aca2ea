#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gapmatch/generate.hpp"
#include "gapmatch/pattern.hpp"

namespace testsupport {

using gapmatch::Alphabet;
using gapmatch::GapConvention;
using gapmatch::GappedPattern;
using gapmatch::Keyword;
using gapmatch::Occurrence;
using gapmatch::PatternSet;

inline PatternSet patterns_from(std::string_view text, const Alphabet& a = Alphabet::full()) {
  return gapmatch::parse_pattern_set(text, a);
}

inline GappedPattern pattern_from(std::string_view line, const Alphabet& a = Alphabet::full()) {
  return gapmatch::parse_pattern_set(line, a).patterns.at(0);
}

struct InstanceOptions {
  std::size_t min_patterns = 1;
  std::size_t max_patterns = 8;
  std::size_t max_keywords = 6;
  std::size_t max_keyword_len = 4;
  std::uint64_t max_gap = 16;
  std::string symbols = "acgt";
  // Probability (percent) of a keyword being a character class instead of a
  // literal; classes are drawn as non-empty symbol subsets, occasionally the
  // whole alphabet (a wildcard).
  unsigned class_percent = 0;
};

inline std::string random_text(gapmatch::gen::SplitMix64& rng, std::size_t length,
                               std::string_view symbols) {
  std::string text(length, '\0');
  for (std::size_t i = 0; i < length; ++i)
    text[i] = symbols[rng.below(symbols.size())];
  return text;
}

inline Keyword random_keyword(gapmatch::gen::SplitMix64& rng, const InstanceOptions& opt) {
  if (opt.class_percent > 0 && rng.below(100) < opt.class_percent) {
    if (rng.below(4) == 0) return Keyword::wildcard(Alphabet::of(opt.symbols));
    std::string members;
    for (char s : opt.symbols)
      if (rng.below(2) == 0) members.push_back(s);
    if (members.empty()) members.push_back(opt.symbols[rng.below(opt.symbols.size())]);
    return Keyword::char_class(members);
  }
  const std::size_t len = 1 + rng.below(opt.max_keyword_len);
  std::string bytes(len, '\0');
  for (std::size_t i = 0; i < len; ++i)
    bytes[i] = opt.symbols[rng.below(opt.symbols.size())];
  return Keyword::literal(std::move(bytes));
}

inline PatternSet random_pattern_set(gapmatch::gen::SplitMix64& rng, const InstanceOptions& opt) {
  PatternSet ps;
  ps.alphabet = Alphabet::of(opt.symbols);
  const std::size_t count =
      opt.min_patterns + rng.below(opt.max_patterns - opt.min_patterns + 1);
  for (std::size_t k = 0; k < count; ++k) {
    GappedPattern p;
    const std::size_t klen = 1 + rng.below(opt.max_keywords);
    for (std::size_t l = 0; l < klen; ++l) {
      p.keywords.push_back(random_keyword(rng, opt));
      if (l + 1 < klen) p.gaps.push_back(rng.below(opt.max_gap + 1));
    }
    ps.patterns.push_back(std::move(p));
  }
  return ps;
}

}  // namespace testsupport
