#include <doctest.h>

#include <string>

#include "gapmatch/ac.hpp"
#include "gapmatch/naive.hpp"
#include "support.hpp"

using namespace gapmatch;
using testsupport::patterns_from;

namespace {

// Bit set of keyword slots matching with end position i, computed by direct
// byte comparison.
BitColumn slots_ending_at(const PatternSet& ps, std::string_view text, std::size_t i) {
  BitColumn bits(ps.klen());
  std::size_t bit = 0;
  for (const GappedPattern& p : ps.patterns) {
    for (const Keyword& kw : p.keywords) {
      bool match = false;
      if (kw.is_class()) {
        match = kw.class_contains(static_cast<std::uint8_t>(text[i]));
      } else {
        const std::string& s = kw.value();
        match = i + 1 >= s.size() && text.compare(i + 1 - s.size(), s.size(), s) == 0;
      }
      if (match) bits.set(bit);
      ++bit;
    }
  }
  return bits;
}

AcAutomaton::StateId walk(const AcAutomaton& ac, std::string_view label) {
  AcAutomaton::StateId q = AcAutomaton::kRoot;
  for (char c : label) {
    q = ac.trie_child(q, static_cast<std::uint8_t>(c));
    REQUIRE(q != AcAutomaton::kInvalid);
  }
  return q;
}

}  // namespace

TEST_CASE("minimal automaton for a single unit keyword") {
  const AcAutomaton ac(patterns_from("a\n"));
  CHECK(ac.state_count() == 2);
  const auto q = ac.step(AcAutomaton::kRoot, 'a');
  CHECK(q == walk(ac, "a"));
  CHECK(ac.matched_bits(q).test(0));
  CHECK(ac.matched_bits(q).popcount() == 1);
  // bytes without a root transition loop on the root
  CHECK(ac.step(AcAutomaton::kRoot, 'x') == AcAutomaton::kRoot);
  CHECK(ac.matched_bits(AcAutomaton::kRoot).popcount() == 0);
}

TEST_CASE("output links point at the longest proper keyword suffix") {
  const PatternSet ps = patterns_from("a {1} ab {1} b\n");
  const AcAutomaton ac(ps);
  const auto q_ab = walk(ac, "ab");
  const auto q_b = walk(ac, "b");
  CHECK(ac.output_link(q_ab) == q_b);
  const BitColumn bits = ac.matched_bits(q_ab);
  CHECK(bits.test(1));  // "ab" itself
  CHECK(bits.test(2));  // suffix "b"
  CHECK(!bits.test(0));
}

TEST_CASE("two-pattern example: keyword bits along accgtaaacg") {
  // slots: cgt=0, ac=1, c=2, gt=3, c=4
  const PatternSet ps = patterns_from("cgt {2} ac\nc {1} gt {3} c\n");
  const AcAutomaton ac(ps);
  const std::string text = "accgtaaacg";

  std::vector<BitColumn> seen;
  AcAutomaton::StateId q = AcAutomaton::kRoot;
  for (char c : text) {
    q = ac.step(q, static_cast<std::uint8_t>(c));
    seen.push_back(ac.matched_bits(q));
  }

  BitColumn t1(ps.klen()), t4(ps.klen()), t8(ps.klen());
  t1.set(1), t1.set(2), t1.set(4);  // ac, c, c
  t4.set(0), t4.set(3);             // cgt, gt
  t8.set(1), t8.set(2), t8.set(4);
  CHECK(seen[1] == t1);
  CHECK(seen[4] == t4);
  CHECK(seen[8] == t8);
}

TEST_CASE("class keywords share trie paths and set their own slots") {
  const Alphabet acgt = Alphabet::of("acgt");
  const PatternSet ps = patterns_from("[ag] {1} a\n* {0} g\n", acgt);
  const AcAutomaton ac(ps);
  // 'a' is in [ag], in *, and is the literal slot 1
  const auto q_a = ac.step(AcAutomaton::kRoot, 'a');
  CHECK(ac.matched_bits(q_a).test(0));
  CHECK(ac.matched_bits(q_a).test(1));
  CHECK(ac.matched_bits(q_a).test(2));
  // 'c' only matches the wildcard
  const auto q_c = ac.step(AcAutomaton::kRoot, 'c');
  CHECK(!ac.matched_bits(q_c).test(0));
  CHECK(ac.matched_bits(q_c).test(2));
  // the automaton holds one depth-1 state per distinct symbol
  CHECK(ac.state_count() <= 1 + acgt.size() + ps.len());
}

TEST_CASE("matched bits equal the brute-force slot sets on random instances") {
  gen::SplitMix64 rng(23);
  for (const char* symbols : {"ab", "acgt", "acdefghiklmnpqrstvwy"}) {
    for (int round = 0; round < 60; ++round) {
      testsupport::InstanceOptions opt;
      opt.symbols = symbols;
      opt.class_percent = (round % 3 == 0) ? 30 : 0;
      const PatternSet ps = testsupport::random_pattern_set(rng, opt);
      const std::string text = testsupport::random_text(rng, 1 + rng.below(256), opt.symbols);

      const AcAutomaton ac(ps);
      AcAutomaton::StateId q = AcAutomaton::kRoot;
      for (std::size_t i = 0; i < text.size(); ++i) {
        q = ac.step(q, static_cast<std::uint8_t>(text[i]));
        CHECK(ac.matched_bits(q) == slots_ending_at(ps, text, i));
      }
    }
  }
}

TEST_CASE("keyword-state bits contain the output link's bits") {
  gen::SplitMix64 rng(29);
  for (int round = 0; round < 40; ++round) {
    testsupport::InstanceOptions opt;
    opt.symbols = "ab";  // small alphabet forces many suffix relations
    const PatternSet ps = testsupport::random_pattern_set(rng, opt);
    const AcAutomaton ac(ps);
    for (AcAutomaton::StateId q = 0; q < ac.state_count(); ++q) {
      if (!ac.is_keyword_state(q) || ac.output_link(q) == AcAutomaton::kInvalid) continue;
      const BitColumn own = ac.matched_bits(q);
      const BitColumn inherited = ac.matched_bits(ac.output_link(q));
      CHECK((own | inherited) == own);
    }
  }
}

TEST_CASE("empty pattern sets are rejected") {
  CHECK_THROWS_AS(AcAutomaton(PatternSet{}), std::invalid_argument);
}
