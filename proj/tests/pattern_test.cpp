#include <doctest.h>

#include "gapmatch/naive.hpp"
#include "gapmatch/pattern.hpp"
#include "support.hpp"

using namespace gapmatch;
using testsupport::pattern_from;
using testsupport::patterns_from;

TEST_CASE("parse: keywords alternate with braced gaps") {
  const PatternSet ps = patterns_from("c {2} at {1} t\n");
  REQUIRE(ps.patterns.size() == 1);
  const GappedPattern& p = ps.patterns[0];
  REQUIRE(p.klen() == 3);
  CHECK(p.keywords[0] == Keyword::literal("c"));
  CHECK(p.keywords[1] == Keyword::literal("at"));
  CHECK(p.keywords[2] == Keyword::literal("t"));
  CHECK(p.gaps == std::vector<std::uint64_t>{2, 1});
  CHECK(p.len() == 4);
  CHECK(p.span() == 7);
}

TEST_CASE("parse: single keyword, no gaps") {
  const GappedPattern p = pattern_from("c");
  CHECK(p.klen() == 1);
  CHECK(p.gaps.empty());
}

TEST_CASE("parse: classes and wildcards") {
  const Alphabet acgt = Alphabet::of("acgt");
  const PatternSet ps = patterns_from("[ag] {0} t\n* {3} [c]\n", acgt);
  CHECK(ps.patterns[0].keywords[0] == Keyword::char_class("ag"));
  CHECK(ps.patterns[0].keywords[1] == Keyword::literal("t"));
  CHECK(ps.patterns[0].gaps == std::vector<std::uint64_t>{0});
  CHECK(ps.patterns[1].keywords[0] == Keyword::wildcard(acgt));
  CHECK(ps.patterns[1].keywords[0].length() == 1);
  CHECK(ps.patterns[1].keywords[1] == Keyword::char_class("c"));
}

TEST_CASE("parse: comments and blank lines are skipped, line numbers reported") {
  const PatternSet ps = patterns_from("# heading\n\n  a {1} b\n");
  CHECK(ps.patterns.size() == 1);

  const auto line_of = [](const char* text) {
    try {
      patterns_from(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(line_of("a {1} b\nc {x} d\n") == 2);
  CHECK(line_of("# ok\n\na {1}\n") == 3);
}

TEST_CASE("parse: malformed input") {
  CHECK_THROWS_AS(patterns_from("a {} b\n"), ParseError);
  CHECK_THROWS_AS(patterns_from("a {-1} b\n"), ParseError);
  CHECK_THROWS_AS(patterns_from("a {1b} b\n"), ParseError);
  CHECK_THROWS_AS(patterns_from("a {1} {2} b\n"), ParseError);
  CHECK_THROWS_AS(patterns_from("a b\n"), ParseError);
  CHECK_THROWS_AS(patterns_from("{1} b\n"), ParseError);
  CHECK_THROWS_AS(patterns_from("a {1}\n"), ParseError);
  CHECK_THROWS_AS(patterns_from("[] a\n"), ParseError);
  CHECK_THROWS_AS(patterns_from("[ab\n"), ParseError);
  // symbol outside a restricted alphabet
  CHECK_THROWS_AS(patterns_from("axg\n", Alphabet::of("acgt")), ParseError);
  CHECK_THROWS_AS(patterns_from("[ax]\n", Alphabet::of("acgt")), ParseError);
}

TEST_CASE("parse/serialize round trip") {
  const Alphabet acgt = Alphabet::of("acgt");
  const char* text = "c {2} at {1} t\n[ag] {0} t\n* {3} c\ncgt {4} ac\n";
  const PatternSet ps = patterns_from(text, acgt);
  const std::string serialized = serialize_pattern_set(ps);
  CHECK(patterns_from(serialized, acgt) == ps);

  gapmatch::gen::SplitMix64 rng(7);
  for (int round = 0; round < 50; ++round) {
    testsupport::InstanceOptions opt;
    opt.class_percent = 30;
    const PatternSet random = testsupport::random_pattern_set(rng, opt);
    CHECK(patterns_from(serialize_pattern_set(random), random.alphabet) == random);
  }
}

TEST_CASE("end-to-end gap transform") {
  // c.2.at.1.t: distances 2+2 and 1+1
  CHECK(end_to_end_gaps(pattern_from("c {2} at {1} t"), GapConvention::surface) ==
        std::vector<std::uint64_t>{4, 2});
  // c.2.a.1.at: distances 2+1 and 1+2
  CHECK(end_to_end_gaps(pattern_from("c {2} a {1} at"), GapConvention::surface) ==
        std::vector<std::uint64_t>{3, 3});

  const PatternSet ps = patterns_from("cgt {2} ac\nc {1} gt {3} c\n");
  const PatternSet transformed = to_end_to_end_gaps(ps);
  REQUIRE(transformed.convention == GapConvention::end_to_end);
  CHECK(transformed.patterns[0].gaps == std::vector<std::uint64_t>{4});
  CHECK(transformed.patterns[1].gaps == std::vector<std::uint64_t>{3, 4});
  // keyword slots are unchanged, only the gap values move
  CHECK(transformed.patterns[0].keywords == ps.patterns[0].keywords);
  CHECK(transformed.patterns[1].keywords == ps.patterns[1].keywords);
  // transforming again is a no-op
  CHECK(to_end_to_end_gaps(transformed) == transformed);

  CHECK(gap_values(transformed) == std::vector<std::uint64_t>{3, 4});
  const auto range = gap_range(transformed);
  REQUIRE(range.has_value());
  CHECK(range->min == 3);
  CHECK(range->max == 4);
  CHECK(range->size() == 2);
}

TEST_CASE("gap stats come from the transformed values even on surface sets") {
  const PatternSet ps = patterns_from("c {2} at {1} t\n");
  CHECK(gap_values(ps) == std::vector<std::uint64_t>{2, 4});
  CHECK(!gap_range(patterns_from("abc\n")).has_value());
}

TEST_CASE("split_keywords") {
  CHECK(split_keywords(pattern_from("c {2} at {1} t")) == pattern_from("c {2} a {0} t {1} t"));
  // all-unit patterns are fixed points
  const GappedPattern unit = pattern_from("c {2} a {0} t {1} t");
  CHECK(split_keywords(unit) == unit);
  CHECK(split_keywords(pattern_from("cgt")) == pattern_from("c {0} g {0} t"));
  CHECK_THROWS_AS(split_keywords(pattern_from("[ag] {1} t")), std::invalid_argument);
}

TEST_CASE("split_keywords preserves the occurrence set") {
  gapmatch::gen::SplitMix64 rng(13);
  for (int round = 0; round < 60; ++round) {
    testsupport::InstanceOptions opt;
    opt.max_keyword_len = 5;
    const PatternSet ps = testsupport::random_pattern_set(rng, opt);
    const std::string text = testsupport::random_text(rng, 1 + rng.below(250), opt.symbols);
    CHECK(naive::dp_match(split_keywords(ps), text) == naive::dp_match(ps, text));
  }
}

TEST_CASE("bit layout maps slot (k,l) to offset[k] + l - 1") {
  const PatternSet ps = patterns_from("a {1} b {1} c\nd {1} e\n");
  CHECK(pattern_bit_offsets(ps) == std::vector<std::size_t>{0, 3, 5});
  CHECK(ps.klen() == 5);
  CHECK(ps.len() == 5);
}

TEST_CASE("keyword and pattern validation") {
  CHECK_THROWS_AS(Keyword::literal(""), std::invalid_argument);
  CHECK_THROWS_AS(Keyword::char_class(""), std::invalid_argument);
  GappedPattern bad;
  bad.keywords.push_back(Keyword::literal("a"));
  bad.gaps.push_back(1);
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  CHECK_THROWS_AS(validate(GappedPattern{}), std::invalid_argument);
}
