#include <doctest.h>

#include <string>

#include "gapmatch/naive.hpp"
#include "support.hpp"

using namespace gapmatch;
using testsupport::pattern_from;
using testsupport::patterns_from;

namespace {

std::string matrix_row(const std::vector<std::vector<std::uint8_t>>& m, std::size_t r) {
  std::string out;
  for (std::uint8_t v : m[r]) out += static_cast<char>('0' + v);
  return out;
}

}  // namespace

TEST_CASE("prefix matrix of c.2.at.1.t over atcgctcatat") {
  const auto m = naive::dp_matrix(pattern_from("c {2} at {1} t"), "atcgctcatat");
  REQUIRE(m.size() == 3);
  CHECK(matrix_row(m, 0) == "00101010000");
  CHECK(matrix_row(m, 1) == "00000000101");
  CHECK(matrix_row(m, 2) == "00000000001");
}

TEST_CASE("prefix matrix of the unit-keyword form c.2.a.0.t.1.t") {
  const auto m = naive::dp_matrix(pattern_from("c {2} a {0} t {1} t"), "atcgctcatat");
  REQUIRE(m.size() == 4);
  CHECK(matrix_row(m, 0) == "00101010000");
  CHECK(matrix_row(m, 1) == "00000001010");
  CHECK(matrix_row(m, 2) == "00000000101");
  CHECK(matrix_row(m, 3) == "00000000001");
}

TEST_CASE("two-pattern example over accgtaaacg") {
  const PatternSet ps = patterns_from("cgt {2} ac\nc {1} gt {3} c\n");
  const auto m1 = naive::dp_matrix(ps.patterns[0], "accgtaaacg");
  const auto m2 = naive::dp_matrix(ps.patterns[1], "accgtaaacg");

  // column 1 holds exactly prefix (2,1); column 4 prefixes (1,1) and (2,2);
  // column 8 prefixes (1,2), (2,1) and (2,3)
  const auto column_bits = [&](std::size_t i) {
    std::string bits;
    for (const auto& m : {m1, m2})
      for (const auto& row : m) bits += static_cast<char>('0' + row[i]);
    return bits;
  };
  CHECK(column_bits(1) == "00100");
  CHECK(column_bits(4) == "10010");
  CHECK(column_bits(8) == "01101");

  CHECK(naive::dp_match(ps, "accgtaaacg") ==
        std::vector<Occurrence>{{8, 0}, {8, 1}});
}

TEST_CASE("pattern longer than the text never matches") {
  CHECK(naive::dp_match(patterns_from("abcd {10} efgh\n"), "abcdefgh").empty());
  CHECK(naive::enumerate_match(pattern_from("abcd {10} efgh"), "abcdefgh").empty());
}

TEST_CASE("classes match any member symbol") {
  const GappedPattern p = pattern_from("[ac] {1} t", Alphabet::of("acgt"));
  const auto m = naive::dp_matrix(p, "agtcgt");
  CHECK(matrix_row(m, 0) == "100100");
  CHECK(matrix_row(m, 1) == "001001");
}

TEST_CASE("dp and direct enumeration agree inside the envelope") {
  gen::SplitMix64 rng(11);
  for (int round = 0; round < 200; ++round) {
    testsupport::InstanceOptions opt;
    opt.max_patterns = 4;
    opt.max_gap = 8;
    opt.class_percent = (round % 2) ? 25 : 0;
    const PatternSet ps = testsupport::random_pattern_set(rng, opt);
    const std::string text = testsupport::random_text(rng, 64 + rng.below(150), opt.symbols);

    const auto dp = naive::dp_match(ps, text);
    for (std::size_t k = 0; k < ps.patterns.size(); ++k) {
      if (ps.patterns[k].span() > 64) continue;
      std::vector<std::uint64_t> dp_ends;
      for (const Occurrence& o : dp)
        if (o.pattern == k) dp_ends.push_back(o.end);
      CHECK(naive::enumerate_match(ps.patterns[k], text) == dp_ends);
    }
  }
}

TEST_CASE("enumeration envelope is enforced") {
  const std::string long_text(300, 'a');
  CHECK_THROWS_AS(naive::enumerate_match(pattern_from("a"), long_text), std::out_of_range);
  CHECK_THROWS_AS(naive::enumerate_match(pattern_from("a {100} a"), "aaa"), std::out_of_range);
}
