#include "gapmatch/naive.hpp"

#include <algorithm>

namespace gapmatch::naive {

namespace {

// Does keyword kw match with end position i (inclusive)?
bool keyword_ends_at(const Keyword& kw, std::string_view text, std::size_t i) {
  if (kw.is_class()) return kw.class_contains(static_cast<std::uint8_t>(text[i]));
  const std::string& s = kw.value();
  if (i + 1 < s.size()) return false;
  return text.compare(i + 1 - s.size(), s.size(), s) == 0;
}

}  // namespace

std::vector<std::vector<std::uint8_t>> dp_matrix(const GappedPattern& p, std::string_view text) {
  validate(p);
  const std::size_t rows = p.klen();
  const std::size_t n = text.size();
  std::vector<std::vector<std::uint8_t>> d(rows, std::vector<std::uint8_t>(n, 0));
  for (std::size_t l = 0; l < rows; ++l) {
    const Keyword& kw = p.keywords[l];
    for (std::size_t i = 0; i < n; ++i) {
      if (!keyword_ends_at(kw, text, i)) continue;
      if (l == 0) {
        d[l][i] = 1;
        continue;
      }
      // End position of the previous prefix: one keyword length and one gap
      // earlier than this keyword's end.
      const std::uint64_t back = kw.length() + p.gaps[l - 1];
      if (i >= back && d[l - 1][i - back]) d[l][i] = 1;
    }
  }
  return d;
}

std::vector<Occurrence> dp_match(const PatternSet& ps, std::string_view text) {
  if (ps.convention != GapConvention::surface)
    throw std::invalid_argument("dp_match expects surface gap convention");
  std::vector<Occurrence> out;
  for (std::size_t k = 0; k < ps.patterns.size(); ++k) {
    const auto d = dp_matrix(ps.patterns[k], text);
    const auto& last = d.back();
    for (std::size_t i = 0; i < last.size(); ++i)
      if (last[i]) out.push_back(Occurrence{i, static_cast<std::uint32_t>(k)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> enumerate_match(const GappedPattern& p, std::string_view text) {
  validate(p);
  const std::uint64_t m = p.span();
  if (m > 64 || text.size() > 256)
    throw std::out_of_range("enumerate_match: instance outside the small-scale envelope");
  std::vector<std::uint64_t> out;
  if (m == 0 || text.size() < m) return out;
  for (std::size_t i = m - 1; i < text.size(); ++i) {
    // With fixed gaps there is exactly one candidate alignment per end
    // position; check every keyword at its offset in the window.
    std::size_t pos = i + 1 - m;
    bool ok = true;
    for (std::size_t l = 0; l < p.keywords.size() && ok; ++l) {
      const Keyword& kw = p.keywords[l];
      if (kw.is_class()) {
        ok = kw.class_contains(static_cast<std::uint8_t>(text[pos]));
        pos += 1;
      } else {
        ok = text.compare(pos, kw.value().size(), kw.value()) == 0;
        pos += kw.value().size();
      }
      if (l < p.gaps.size()) pos += p.gaps[l];
    }
    if (ok) out.push_back(i);
  }
  return out;
}

}  // namespace gapmatch::naive
