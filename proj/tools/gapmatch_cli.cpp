// gapmatch: search gapped patterns in texts, score motif features, generate
// random pattern sets and benchmark the engines.
#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gapmatch/column.hpp"
#include "gapmatch/decompose.hpp"
#include "gapmatch/generate.hpp"
#include "gapmatch/io.hpp"
#include "gapmatch/motif.hpp"
#include "gapmatch/naive.hpp"
#include "gapmatch/ordering.hpp"
#include "gapmatch/pattern.hpp"
#include "gapmatch/row.hpp"

namespace {

using namespace gapmatch;

struct OutputFile {
  explicit OutputFile(const std::string& path) {
    if (!path.empty()) {
      file.open(path, std::ios::binary);
      if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file.is_open() ? file : std::cout; }
  std::ofstream file;
};

std::string load_text(const std::string& path, bool fasta) {
  std::string text = io::read_file(path);
  if (fasta) text = io::strip_fasta(text);
  return text;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<std::uint64_t> parse_grid_values(const std::string& csv, const char* flag) {
  std::vector<std::uint64_t> values;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      values.push_back(std::stoull(item));
    } catch (const std::exception&) {
      throw std::runtime_error(std::string("invalid value '") + item + "' for " + flag);
    }
  }
  if (values.empty()) throw std::runtime_error(std::string("empty value list for ") + flag);
  return values;
}

struct SearchArgs {
  std::string patterns_path;
  std::string text_path;
  std::string out_path;
  std::string algorithm = "column";
  std::string order = "input";
  bool fasta = false;
  bool decompose_gaps = false;
  bool report_gj_cost = false;
};

int run_search(const SearchArgs& args) {
  const PatternSet parsed = parse_pattern_set(io::read_file(args.patterns_path));
  if (parsed.patterns.empty()) throw std::runtime_error("pattern file contains no patterns");
  const std::string text = load_text(args.text_path, args.fasta);

  std::vector<std::uint32_t> perm = ordering::identity_order(parsed.patterns.size());
  if (args.order == "greedy") perm = ordering::greedy_order(parsed);
  if (args.report_gj_cost) {
    std::cerr << "gj_cost input=" << ordering::layout_gap_cost(parsed,
                     ordering::identity_order(parsed.patterns.size()))
              << " " << args.order << "=" << ordering::layout_gap_cost(parsed, perm) << "\n";
  }
  const PatternSet ps = ordering::permute(parsed, perm);

  if (args.decompose_gaps && args.algorithm != "column")
    throw std::runtime_error("--decompose-gaps requires --algorithm column");

  std::vector<Occurrence> hits;
  std::uint64_t gj_cost = 0;
  double elapsed = 0;
  if (args.algorithm == "column") {
    PatternSet ets = to_end_to_end_gaps(ps);
    if (args.decompose_gaps) ets = decompose::decompose_gaps(ets);
    const column::Matcher matcher(ets);
    gj_cost = matcher.gap_cost();
    const auto start = std::chrono::steady_clock::now();
    hits = matcher.search(text);
    elapsed = seconds_since(start);
  } else if (args.algorithm == "row") {
    row::Searcher searcher(ps);
    gj_cost = ordering::layout_gap_cost(ps, ordering::identity_order(ps.patterns.size()));
    const auto start = std::chrono::steady_clock::now();
    hits = searcher.search(text);
    elapsed = seconds_since(start);
  } else {  // naive
    gj_cost = ordering::layout_gap_cost(ps, ordering::identity_order(ps.patterns.size()));
    const auto start = std::chrono::steady_clock::now();
    hits = naive::dp_match(ps, text);
    elapsed = seconds_since(start);
  }

  for (Occurrence& o : hits) o.pattern = perm[o.pattern];
  std::sort(hits.begin(), hits.end());

  OutputFile out(args.out_path);
  for (const Occurrence& o : hits)
    out.stream() << (o.pattern + 1) << '\t' << o.end << '\n';
  out.stream().flush();

  std::cerr << "n=" << text.size() << " patterns=" << ps.patterns.size()
            << " klen=" << ps.klen() << " distinct_gaps=" << gap_values(ps).size()
            << " gj_cost=" << gj_cost << " occ=" << hits.size() << " time_ms="
            << static_cast<std::uint64_t>(elapsed * 1e6) / 1000.0
            << " algorithm=" << args.algorithm << "\n";
  return 0;
}

struct ScoreArgs {
  std::string features_path;
  std::string text_path;
  std::string out_path;
  std::uint32_t window = 0;
  bool fasta = false;
};

int run_score(const ScoreArgs& args) {
  const auto features = motif::parse_feature_file(io::read_file(args.features_path));
  const std::string text = load_text(args.text_path, args.fasta);
  if (text.size() < args.window)
    throw std::runtime_error("text is shorter than the motif window");
  const auto rules = motif::compile_features(features, args.window);
  const auto scores = motif::score_sequence(rules, args.window, text);

  OutputFile out(args.out_path);
  char buffer[64];
  for (std::size_t s = 0; s < scores.size(); ++s) {
    std::snprintf(buffer, sizeof buffer, "%zu\t%.17g\n", s, scores[s]);
    out.stream() << buffer;
  }
  out.stream().flush();
  std::cerr << "n=" << text.size() << " m=" << args.window << " features=" << features.size()
            << " rules=" << rules.size() << " sites=" << scores.size() << "\n";
  return 0;
}

struct GenArgs {
  std::string text_path;
  std::string out_path;
  bool fasta = false;
  gen::Params params;
};

int run_gen(const GenArgs& args) {
  const std::string text = load_text(args.text_path, args.fasta);
  const PatternSet ps = gen::generate_patterns(args.params, text);
  OutputFile out(args.out_path);
  out.stream() << "# gapmatch gen: k=" << args.params.keywords << " l=" << args.params.keyword_len
               << " b=" << args.params.max_gap << " count=" << args.params.count
               << " seed=" << args.params.seed << " rng=splitmix64\n"
               << serialize_pattern_set(ps);
  out.stream().flush();
  return 0;
}

struct BenchArgs {
  std::string text_path;
  std::string out_path;
  bool fasta = false;
  std::string k_list = "6";
  std::string l_list = "1";
  std::string b_list = "20";
  std::string count_list = "50";
  std::uint64_t seed = 0;
  std::uint32_t reps = 3;
};

int run_bench(const BenchArgs& args) {
  const std::string text = load_text(args.text_path, args.fasta);
  const auto ks = parse_grid_values(args.k_list, "--k");
  const auto ls = parse_grid_values(args.l_list, "--l");
  const auto bs = parse_grid_values(args.b_list, "--b");
  const auto counts = parse_grid_values(args.count_list, "--count");

  OutputFile out(args.out_path);
  out.stream() << "k\tl\tb\tcount\tn\tocc\tcolumn_ms\trow_ms\n";
  gen::SplitMix64 seeds(args.seed);
  for (const std::uint64_t k : ks)
    for (const std::uint64_t l : ls)
      for (const std::uint64_t b : bs)
        for (const std::uint64_t count : counts) {
          gen::Params params;
          params.keywords = static_cast<std::uint32_t>(k);
          params.keyword_len = static_cast<std::uint32_t>(l);
          params.max_gap = b;
          params.count = static_cast<std::uint32_t>(count);
          params.seed = seeds.next();
          const PatternSet ps = gen::generate_patterns(params, text);

          // correctness gates the timing: both engines must agree
          const column::Matcher matcher(to_end_to_end_gaps(ps));
          row::Searcher searcher(ps);
          const auto column_hits = matcher.search(text);
          const auto row_hits = searcher.search(text);
          if (column_hits != row_hits)
            throw std::runtime_error("engine disagreement at k=" + std::to_string(k) +
                                     " l=" + std::to_string(l) + " b=" + std::to_string(b) +
                                     " count=" + std::to_string(count));

          double column_s = 0, row_s = 0;
          for (std::uint32_t rep = 0; rep < args.reps; ++rep) {
            auto start = std::chrono::steady_clock::now();
            (void)matcher.search(text);
            column_s += seconds_since(start);
            start = std::chrono::steady_clock::now();
            (void)searcher.search(text);
            row_s += seconds_since(start);
          }
          char buffer[160];
          std::snprintf(buffer, sizeof buffer, "%llu\t%llu\t%llu\t%llu\t%zu\t%zu\t%.3f\t%.3f\n",
                        static_cast<unsigned long long>(k), static_cast<unsigned long long>(l),
                        static_cast<unsigned long long>(b),
                        static_cast<unsigned long long>(count), text.size(), column_hits.size(),
                        column_s * 1000.0 / args.reps, row_s * 1000.0 / args.reps);
          out.stream() << buffer;
          out.stream().flush();
        }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bit-parallel matching of gapped patterns"};
  app.require_subcommand(1);

  SearchArgs search_args;
  CLI::App* search = app.add_subcommand("search", "report pattern occurrences in a text");
  search->add_option("--patterns", search_args.patterns_path, "pattern file")->required();
  search->add_option("--text", search_args.text_path, "text file (raw bytes)")->required();
  search->add_flag("--fasta", search_args.fasta, "strip FASTA headers and newlines");
  search->add_option("--algorithm", search_args.algorithm, "engine (default column)")
      ->check(CLI::IsMember({"column", "row", "naive"}));
  search->add_flag("--decompose-gaps", search_args.decompose_gaps,
                   "rewrite gaps over a small generating set before column matching");
  search->add_option("--order", search_args.order, "pattern order (default input)")
      ->check(CLI::IsMember({"input", "greedy"}));
  search->add_flag("--report-gj-cost", search_args.report_gj_cost,
                   "print the per-word distinct-gap cost before and after ordering");
  search->add_option("--out", search_args.out_path, "output file (default stdout)");

  ScoreArgs score_args;
  CLI::App* score = app.add_subcommand("score", "score motif features over every site");
  score->add_option("--features", score_args.features_path, "feature file")->required();
  score->add_option("--text", score_args.text_path, "text file")->required();
  score->add_option("--m", score_args.window, "motif window length")->required();
  score->add_flag("--fasta", score_args.fasta, "strip FASTA headers and newlines");
  score->add_option("--out", score_args.out_path, "output file (default stdout)");

  GenArgs gen_args;
  CLI::App* generate = app.add_subcommand("gen", "sample random patterns from a text");
  generate->add_option("--text", gen_args.text_path, "text file to sample from")->required();
  generate->add_flag("--fasta", gen_args.fasta, "strip FASTA headers and newlines");
  generate->add_option("--k", gen_args.params.keywords, "keywords per pattern")->required();
  generate->add_option("--l", gen_args.params.keyword_len, "keyword length")->required();
  generate->add_option("--b", gen_args.params.max_gap, "maximum gap length")->required();
  generate->add_option("--count", gen_args.params.count, "number of patterns")->required();
  generate->add_option("--seed", gen_args.params.seed, "random seed (default 0)");
  generate->add_option("--out", gen_args.out_path, "output file (default stdout)");

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "time the engines on generated instances");
  bench->add_option("--text", bench_args.text_path, "text file")->required();
  bench->add_flag("--fasta", bench_args.fasta, "strip FASTA headers and newlines");
  bench->add_option("--k", bench_args.k_list, "keywords per pattern (comma list)");
  bench->add_option("--l", bench_args.l_list, "keyword length (comma list)");
  bench->add_option("--b", bench_args.b_list, "maximum gap (comma list)");
  bench->add_option("--count", bench_args.count_list, "patterns per set (comma list)");
  bench->add_option("--seed", bench_args.seed, "random seed (default 0)");
  bench->add_option("--reps", bench_args.reps, "timed repetitions per point (default 3)");
  bench->add_option("--out", bench_args.out_path, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (search->parsed()) return run_search(search_args);
    if (score->parsed()) return run_score(score_args);
    if (generate->parsed()) return run_gen(gen_args);
    if (bench->parsed()) return run_bench(bench_args);
  } catch (const std::exception& e) {
    std::cerr << "gapmatch: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
