#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gapmatch {

// Symbol universe for patterns and texts. Symbols are raw byte values, so
// sigma <= 256; DNA and protein alphabets are restrictions of the full range.
class Alphabet {
 public:
  Alphabet() : Alphabet(full()) {}

  // All 256 byte values.
  static Alphabet full();
  // Explicit universe, e.g. Alphabet::of("acgt"). Duplicates are ignored.
  static Alphabet of(std::string_view symbols);

  bool contains(std::uint8_t s) const { return member_[s]; }
  // Sorted, duplicate-free symbol list.
  const std::string& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }

  bool operator==(const Alphabet& o) const { return symbols_ == o.symbols_; }

 private:
  struct Raw {};
  explicit Alphabet(Raw) {}

  std::string symbols_;
  std::array<bool, 256> member_{};
};

// One component of a gapped pattern: either a literal byte string or a
// character class (a set of symbols matching any single one of them).
// A wildcard is a class holding the whole alphabet.
class Keyword {
 public:
  enum class Kind : std::uint8_t { literal, char_class };

  static Keyword literal(std::string bytes);
  // Symbols are deduplicated and sorted.
  static Keyword char_class(std::string_view symbols);
  static Keyword wildcard(const Alphabet& a) { return char_class(a.symbols()); }

  Kind kind() const { return kind_; }
  bool is_class() const { return kind_ == Kind::char_class; }
  // Literal bytes, or the sorted symbol set of a class.
  const std::string& value() const { return value_; }
  // A class counts as a single symbol.
  std::size_t length() const { return is_class() ? 1 : value_.size(); }
  bool class_contains(std::uint8_t s) const;

  bool operator==(const Keyword&) const = default;

 private:
  Keyword(Kind k, std::string v) : kind_(k), value_(std::move(v)) {}

  Kind kind_ = Kind::literal;
  std::string value_;
};

// A sequence of keywords with a fixed-length gap between each consecutive
// pair: gaps[i] arbitrary symbols lie between keywords[i] and keywords[i+1].
struct GappedPattern {
  std::vector<Keyword> keywords;  // at least one
  std::vector<std::uint64_t> gaps;  // size keywords.size() - 1

  std::size_t klen() const { return keywords.size(); }
  std::size_t len() const;  // total symbol count, classes count as 1
  std::uint64_t span() const;  // length of any occurrence window

  bool operator==(const GappedPattern&) const = default;
};

// Throws std::invalid_argument when the keyword/gap shape is inconsistent.
void validate(const GappedPattern& p);

// How the stored gap values are to be read.
//   surface:   gaps[i] counts the symbols strictly between keyword i and i+1
//              (the native pattern notation).
//   end_to_end: gaps[i] is the distance between the end positions of
//              keyword i and keyword i+1 matches. This is the form consumed
//              by the column matcher; see to_end_to_end_gaps().
enum class GapConvention : std::uint8_t { surface, end_to_end };

struct PatternSet {
  std::vector<GappedPattern> patterns;
  Alphabet alphabet = Alphabet::full();
  GapConvention convention = GapConvention::surface;

  std::size_t klen() const;  // total keyword count
  std::size_t len() const;   // total symbol count

  bool operator==(const PatternSet&) const = default;
};

// Bit layout shared by the bit-parallel machinery: keyword l (1-based) of
// pattern k (0-based) maps onto bit offsets[k] + l - 1, a bijection onto
// 0 .. klen-1. Returns |patterns|+1 prefix sums.
std::vector<std::size_t> pattern_bit_offsets(const PatternSet& ps);

// End-to-end gap list of one pattern: distance between the end positions of
// consecutive keyword matches. For surface gaps this is gaps[i] plus the
// length of keyword i+1; for an end_to_end pattern the stored values.
std::vector<std::uint64_t> end_to_end_gaps(const GappedPattern& p, GapConvention c);

// Distinct end-to-end gap values across the whole set, sorted ascending.
std::vector<std::uint64_t> gap_values(const PatternSet& ps);

struct GapRange {
  std::uint64_t min = 0;
  std::uint64_t max = 0;
  std::uint64_t size() const { return max - min + 1; }
};

// Empty when no pattern has a gap.
std::optional<GapRange> gap_range(const PatternSet& ps);

// Rewrites every gap to the end-to-end distance between consecutive keyword
// end positions. Keyword slots keep their content and become the global
// keyword list in bit-layout order; occurrence semantics are unchanged.
PatternSet to_end_to_end_gaps(const PatternSet& ps);

// Splits every multi-symbol literal keyword into unit-length keywords joined
// by zero gaps. Character classes are rejected (they are already unit length
// for matching purposes, but the row matcher that needs this form does not
// support them). Occurrence sets are unchanged.
GappedPattern split_keywords(const GappedPattern& p);
PatternSet split_keywords(const PatternSet& ps);

// A full-pattern match: pattern (0-based index into the set) ends at text
// position end (0-based, inclusive). Field order makes the default ordering
// (end position, then pattern index), the canonical report order.
struct Occurrence {
  std::uint64_t end = 0;
  std::uint32_t pattern = 0;

  auto operator<=>(const Occurrence&) const = default;
};

// Pattern file parsing. Reported line numbers are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Text format, one pattern per line: tokens separated by spaces, alternating
// keyword and gap tokens, starting and ending with a keyword. A keyword token
// is a bare byte string (must not contain space, '{', '[' or '#'), a class
// '[abc]', or '*' for a wildcard. A gap token is '{N}' with N a decimal
// integer >= 0. Lines whose first non-space character is '#' are comments.
PatternSet parse_pattern_set(std::string_view contents,
                             const Alphabet& alphabet = Alphabet::full());

// Inverse of parse_pattern_set for surface-convention sets. Throws
// std::invalid_argument for content the format cannot carry (e.g. literal
// keywords containing spaces).
std::string serialize_pattern_set(const PatternSet& ps);

}  // namespace gapmatch
