#include "gapmatch/generate.hpp"

#include <stdexcept>

namespace gapmatch::gen {

PatternSet generate_patterns(const Params& params, std::string_view text,
                             const Alphabet& alphabet) {
  if (params.keywords < 1 || params.keyword_len < 1 || params.count < 1)
    throw std::invalid_argument("keywords, keyword_len and count must be >= 1");
  const std::uint64_t max_span =
      std::uint64_t{params.keywords} * params.keyword_len +
      std::uint64_t{params.keywords - 1} * params.max_gap;
  if (text.size() < max_span)
    throw std::invalid_argument("text shorter than the largest possible pattern window (" +
                                std::to_string(max_span) + " symbols)");

  SplitMix64 rng(params.seed);
  PatternSet ps;
  ps.alphabet = alphabet;
  ps.patterns.reserve(params.count);
  for (std::uint32_t c = 0; c < params.count; ++c) {
    GappedPattern p;
    std::uint64_t span = std::uint64_t{params.keywords} * params.keyword_len;
    for (std::uint32_t i = 0; i + 1 < params.keywords; ++i) {
      p.gaps.push_back(rng.below(params.max_gap + 1));
      span += p.gaps.back();
    }
    const std::uint64_t start = rng.below(text.size() - span + 1);
    std::uint64_t pos = start;
    for (std::uint32_t i = 0; i < params.keywords; ++i) {
      p.keywords.push_back(Keyword::literal(std::string(text.substr(pos, params.keyword_len))));
      pos += params.keyword_len;
      if (i < p.gaps.size()) pos += p.gaps[i];
    }
    ps.patterns.push_back(std::move(p));
  }
  return ps;
}

std::string random_text(std::size_t length, std::string_view symbols, std::uint64_t seed) {
  if (symbols.empty()) throw std::invalid_argument("symbol set must not be empty");
  SplitMix64 rng(seed);
  std::string text(length, '\0');
  for (std::size_t i = 0; i < length; ++i) text[i] = symbols[rng.below(symbols.size())];
  return text;
}

}  // namespace gapmatch::gen
