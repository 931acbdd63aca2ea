#include "gapmatch/pattern.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace gapmatch {

Alphabet Alphabet::full() {
  Alphabet a{Raw{}};
  a.symbols_.resize(256);
  for (int s = 0; s < 256; ++s) {
    a.symbols_[static_cast<std::size_t>(s)] = static_cast<char>(s);
    a.member_[static_cast<std::size_t>(s)] = true;
  }
  return a;
}

Alphabet Alphabet::of(std::string_view symbols) {
  Alphabet a{Raw{}};
  for (char c : symbols) a.member_[static_cast<std::uint8_t>(c)] = true;
  for (int s = 0; s < 256; ++s)
    if (a.member_[static_cast<std::size_t>(s)]) a.symbols_.push_back(static_cast<char>(s));
  if (a.symbols_.empty()) throw std::invalid_argument("alphabet must not be empty");
  return a;
}

Keyword Keyword::literal(std::string bytes) {
  if (bytes.empty()) throw std::invalid_argument("literal keyword must not be empty");
  return Keyword(Kind::literal, std::move(bytes));
}

Keyword Keyword::char_class(std::string_view symbols) {
  if (symbols.empty()) throw std::invalid_argument("character class must not be empty");
  std::string s(symbols);
  std::sort(s.begin(), s.end(),
            [](char a, char b) { return static_cast<std::uint8_t>(a) < static_cast<std::uint8_t>(b); });
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return Keyword(Kind::char_class, std::move(s));
}

bool Keyword::class_contains(std::uint8_t s) const {
  return value_.find(static_cast<char>(s)) != std::string::npos;
}

std::size_t GappedPattern::len() const {
  std::size_t n = 0;
  for (const Keyword& k : keywords) n += k.length();
  return n;
}

std::uint64_t GappedPattern::span() const {
  std::uint64_t m = len();
  for (std::uint64_t g : gaps) m += g;
  return m;
}

void validate(const GappedPattern& p) {
  if (p.keywords.empty()) throw std::invalid_argument("pattern must have at least one keyword");
  if (p.gaps.size() + 1 != p.keywords.size())
    throw std::invalid_argument("pattern must have exactly one gap between consecutive keywords");
}

std::size_t PatternSet::klen() const {
  std::size_t n = 0;
  for (const GappedPattern& p : patterns) n += p.klen();
  return n;
}

std::size_t PatternSet::len() const {
  std::size_t n = 0;
  for (const GappedPattern& p : patterns) n += p.len();
  return n;
}

std::vector<std::size_t> pattern_bit_offsets(const PatternSet& ps) {
  std::vector<std::size_t> offsets(ps.patterns.size() + 1, 0);
  for (std::size_t k = 0; k < ps.patterns.size(); ++k)
    offsets[k + 1] = offsets[k] + ps.patterns[k].klen();
  return offsets;
}

std::vector<std::uint64_t> end_to_end_gaps(const GappedPattern& p, GapConvention c) {
  std::vector<std::uint64_t> out(p.gaps);
  if (c == GapConvention::surface) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += p.keywords[i + 1].length();
  }
  return out;
}

std::vector<std::uint64_t> gap_values(const PatternSet& ps) {
  std::vector<std::uint64_t> values;
  for (const GappedPattern& p : ps.patterns) {
    const auto g = end_to_end_gaps(p, ps.convention);
    values.insert(values.end(), g.begin(), g.end());
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

std::optional<GapRange> gap_range(const PatternSet& ps) {
  const auto values = gap_values(ps);
  if (values.empty()) return std::nullopt;
  return GapRange{values.front(), values.back()};
}

PatternSet to_end_to_end_gaps(const PatternSet& ps) {
  PatternSet out = ps;
  out.convention = GapConvention::end_to_end;
  if (ps.convention == GapConvention::end_to_end) return out;
  for (GappedPattern& p : out.patterns) p.gaps = end_to_end_gaps(p, GapConvention::surface);
  return out;
}

GappedPattern split_keywords(const GappedPattern& p) {
  validate(p);
  GappedPattern out;
  for (std::size_t i = 0; i < p.keywords.size(); ++i) {
    const Keyword& kw = p.keywords[i];
    if (kw.is_class())
      throw std::invalid_argument("split_keywords: character classes are not supported");
    for (std::size_t c = 0; c < kw.value().size(); ++c) {
      if (c > 0) out.gaps.push_back(0);
      out.keywords.push_back(Keyword::literal(std::string(1, kw.value()[c])));
    }
    if (i + 1 < p.keywords.size()) out.gaps.push_back(p.gaps[i]);
  }
  return out;
}

PatternSet split_keywords(const PatternSet& ps) {
  if (ps.convention != GapConvention::surface)
    throw std::invalid_argument("split_keywords expects surface gap convention");
  PatternSet out;
  out.alphabet = ps.alphabet;
  out.patterns.reserve(ps.patterns.size());
  for (const GappedPattern& p : ps.patterns) out.patterns.push_back(split_keywords(p));
  return out;
}

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::uint64_t parse_gap_token(std::string_view token, std::size_t lineno) {
  if (token.size() < 3 || token.front() != '{' || token.back() != '}')
    throw ParseError(lineno, "malformed gap token '" + std::string(token) + "'");
  const std::string_view digits = token.substr(1, token.size() - 2);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size())
    throw ParseError(lineno, "malformed gap token '" + std::string(token) + "'");
  return value;
}

Keyword parse_keyword_token(std::string_view token, std::size_t lineno, const Alphabet& alphabet) {
  if (token == "*") return Keyword::wildcard(alphabet);
  if (token.front() == '[') {
    if (token.back() != ']' || token.find(']') != token.size() - 1)
      throw ParseError(lineno, "malformed character class '" + std::string(token) + "'");
    const std::string_view symbols = token.substr(1, token.size() - 2);
    if (symbols.empty()) throw ParseError(lineno, "empty character class");
    for (char c : symbols)
      if (!alphabet.contains(static_cast<std::uint8_t>(c)))
        throw ParseError(lineno, std::string("symbol '") + c + "' outside alphabet");
    return Keyword::char_class(symbols);
  }
  for (char c : token) {
    if (c == '{' || c == '[' || c == '#')
      throw ParseError(lineno, "keyword token '" + std::string(token) + "' contains a reserved character");
    if (!alphabet.contains(static_cast<std::uint8_t>(c)))
      throw ParseError(lineno, std::string("symbol '") + c + "' outside alphabet");
  }
  return Keyword::literal(std::string(token));
}

GappedPattern parse_pattern_line(std::string_view line, std::size_t lineno, const Alphabet& alphabet) {
  const auto tokens = split_tokens(line);
  GappedPattern p;
  bool expect_keyword = true;
  for (std::string_view token : tokens) {
    const bool is_gap = token.front() == '{';
    if (expect_keyword) {
      if (is_gap) {
        if (p.keywords.empty()) throw ParseError(lineno, "pattern must start with a keyword");
        throw ParseError(lineno, "expected a keyword after a gap token");
      }
      p.keywords.push_back(parse_keyword_token(token, lineno, alphabet));
    } else {
      if (!is_gap) throw ParseError(lineno, "expected a gap token between keywords");
      p.gaps.push_back(parse_gap_token(token, lineno));
    }
    expect_keyword = !expect_keyword;
  }
  if (expect_keyword) throw ParseError(lineno, "pattern must end with a keyword");
  return p;
}

}  // namespace

PatternSet parse_pattern_set(std::string_view contents, const Alphabet& alphabet) {
  PatternSet ps;
  ps.alphabet = alphabet;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= contents.size()) {
    const std::size_t nl = contents.find('\n', pos);
    const std::string_view line =
        contents.substr(pos, nl == std::string_view::npos ? contents.size() - pos : nl - pos);
    ++lineno;
    pos = (nl == std::string_view::npos) ? contents.size() + 1 : nl + 1;

    std::size_t first = 0;
    while (first < line.size() && is_space(line[first])) ++first;
    if (first == line.size() || line[first] == '#') continue;
    ps.patterns.push_back(parse_pattern_line(line, lineno, alphabet));
  }
  return ps;
}

namespace {

void serialize_keyword(const Keyword& kw, const Alphabet& alphabet, std::string& out) {
  if (kw.is_class()) {
    if (kw.value() == alphabet.symbols()) {
      out += '*';
      return;
    }
    for (char c : kw.value())
      if (c == ']' || c == '\n')
        throw std::invalid_argument("character class cannot be serialized");
    out += '[';
    out += kw.value();
    out += ']';
    return;
  }
  if (kw.value() == "*")
    throw std::invalid_argument("literal keyword '*' cannot be serialized");
  for (char c : kw.value())
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '{' || c == '[' || c == '#')
      throw std::invalid_argument("literal keyword contains a reserved character");
  out += kw.value();
}

}  // namespace

std::string serialize_pattern_set(const PatternSet& ps) {
  if (ps.convention != GapConvention::surface)
    throw std::invalid_argument("only surface-convention sets can be serialized");
  std::string out;
  for (const GappedPattern& p : ps.patterns) {
    for (std::size_t i = 0; i < p.keywords.size(); ++i) {
      if (i > 0) {
        out += " {";
        out += std::to_string(p.gaps[i - 1]);
        out += "} ";
      }
      serialize_keyword(p.keywords[i], ps.alphabet, out);
    }
    out += '\n';
  }
  return out;
}

}  // namespace gapmatch
