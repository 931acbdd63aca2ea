// Python bindings for the main library operations.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <string>
#include <vector>

#include "gapmatch/column.hpp"
#include "gapmatch/decompose.hpp"
#include "gapmatch/generate.hpp"
#include "gapmatch/motif.hpp"
#include "gapmatch/naive.hpp"
#include "gapmatch/ordering.hpp"
#include "gapmatch/pattern.hpp"
#include "gapmatch/row.hpp"

namespace py = pybind11;
using namespace gapmatch;

namespace {

std::vector<std::pair<std::uint32_t, std::uint64_t>> run_search(const PatternSet& parsed,
                                                                const std::string& text,
                                                                const std::string& algorithm,
                                                                bool decompose_gaps,
                                                                const std::string& order) {
  if (parsed.patterns.empty()) throw std::invalid_argument("pattern set is empty");
  std::vector<std::uint32_t> perm = ordering::identity_order(parsed.patterns.size());
  if (order == "greedy")
    perm = ordering::greedy_order(parsed);
  else if (order != "input")
    throw std::invalid_argument("order must be 'input' or 'greedy'");
  const PatternSet ps = ordering::permute(parsed, perm);

  std::vector<Occurrence> hits;
  if (algorithm == "column") {
    PatternSet ets = to_end_to_end_gaps(ps);
    if (decompose_gaps) ets = decompose::decompose_gaps(ets);
    hits = column::Matcher(ets).search(text);
  } else if (algorithm == "row") {
    if (decompose_gaps) throw std::invalid_argument("decompose_gaps requires the column engine");
    hits = row::search_all(ps, text);
  } else if (algorithm == "naive") {
    if (decompose_gaps) throw std::invalid_argument("decompose_gaps requires the column engine");
    hits = naive::dp_match(ps, text);
  } else {
    throw std::invalid_argument("algorithm must be 'column', 'row' or 'naive'");
  }

  for (Occurrence& o : hits) o.pattern = perm[o.pattern];
  std::sort(hits.begin(), hits.end());
  std::vector<std::pair<std::uint32_t, std::uint64_t>> out;
  out.reserve(hits.size());
  for (const Occurrence& o : hits) out.emplace_back(o.pattern, o.end);
  return out;
}

}  // namespace

PYBIND11_MODULE(_gapmatch, m) {
  m.doc() = "bit-parallel matching of gapped patterns";

  py::class_<PatternSet>(m, "PatternSet")
      .def("__len__", [](const PatternSet& ps) { return ps.patterns.size(); })
      .def("__eq__", [](const PatternSet& a, const PatternSet& b) { return a == b; })
      .def_property_readonly("klen", [](const PatternSet& ps) { return ps.klen(); })
      .def_property_readonly("len", [](const PatternSet& ps) { return ps.len(); })
      .def_property_readonly("gap_values", [](const PatternSet& ps) { return gap_values(ps); })
      .def("__repr__", [](const PatternSet& ps) {
        return "<PatternSet of " + std::to_string(ps.patterns.size()) + " patterns, klen " +
               std::to_string(ps.klen()) + ">";
      });

  m.def("parse_patterns", [](const std::string& text) { return parse_pattern_set(text); },
        py::arg("text"),
        "Parse the pattern file format: keyword and {gap} tokens alternating, "
        "classes as [abc], wildcards as *.");
  m.def("serialize_patterns", &serialize_pattern_set, py::arg("patterns"));

  m.def("search", &run_search, py::arg("patterns"), py::arg("text"),
        py::arg("algorithm") = "column", py::arg("decompose_gaps") = false,
        py::arg("order") = "input",
        "Occurrences as (pattern_index, end_position) pairs, both 0-based, "
        "sorted by end position then pattern index.");

  m.def(
      "score_features",
      [](const std::string& features_text, std::uint32_t m_len, const std::string& text) {
        const auto features = motif::parse_feature_file(features_text);
        return motif::score_sequence(motif::compile_features(features, m_len), m_len, text);
      },
      py::arg("features_text"), py::arg("m"), py::arg("text"),
      "Per-site motif scores; feature lines are 'weight<TAB>pos:sym,...'.");

  m.def(
      "generate_patterns",
      [](const std::string& text, std::uint32_t k, std::uint32_t l, std::uint64_t b,
         std::uint32_t count, std::uint64_t seed) {
        return gen::generate_patterns(gen::Params{k, l, b, count, seed}, text);
      },
      py::arg("text"), py::arg("k"), py::arg("l"), py::arg("b"), py::arg("count"),
      py::arg("seed") = 0,
      "Sample `count` patterns of k keywords of length l with gaps in [0, b] "
      "from the text (SplitMix64 stream).");

  m.def(
      "binned_distinct_cost",
      [](const PatternSet& ps, const std::vector<std::uint32_t>& perm, std::uint64_t b) {
        return ordering::binned_distinct_cost(ps, perm, b);
      },
      py::arg("patterns"), py::arg("perm"), py::arg("bin_width"));
  m.def(
      "layout_gap_cost",
      [](const PatternSet& ps, const std::vector<std::uint32_t>& perm, std::uint64_t w) {
        return ordering::layout_gap_cost(ps, perm, w);
      },
      py::arg("patterns"), py::arg("perm"), py::arg("word_bits") = 64);
  m.def(
      "greedy_order",
      [](const PatternSet& ps, std::uint64_t w) { return ordering::greedy_order(ps, w); },
      py::arg("patterns"), py::arg("word_bits") = 64);

  m.attr("__version__") = "0.1.0";
}
