// eqrw: generate, check, prove, inspect and split equivalence corpora.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "eqrw/dataset.hpp"
#include "eqrw/prover.hpp"

using namespace eqrw;

namespace {

Expr parse_program_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

int cmd_generate(std::uint64_t seed, std::size_t count, const std::string& out,
                 double not_equal_frac, double drop_short, bool no_rebalance) {
  GenConfig cfg;
  cfg.rng_seed = seed;
  PruneRules rules;
  rules.drop_short_fraction = drop_short;
  BuildOptions opts;
  opts.not_equal_fraction = not_equal_frac;
  opts.rebalance = !no_rebalance;
  std::vector<SampleTuple> samples = build(cfg, rules, count, opts);
  write_file(out, samples);
  std::printf("wrote %zu samples to %s (seed %llu, drop-short %.1f%%)\n",
              samples.size(), out.c_str(),
              static_cast<unsigned long long>(seed), 100.0 * drop_short);
  std::cout << format_stats(stats(samples));
  return 0;
}

int cmd_check(const std::string& a_path, const std::string& seq_tokens,
              const std::string& b_path) {
  Expr a = parse_program_file(a_path);
  Expr b = parse_program_file(b_path);
  RewriteSequence seq = parse_sequence(seq_tokens);
  Verdict v = check(a, seq, b);
  std::cout << to_string(v) << "\n";
  return v.proven() ? 0 : 1;
}

int cmd_prove(const std::string& a_path, const std::string& b_path,
              int max_steps, std::size_t max_expansions) {
  Expr a = parse_program_file(a_path);
  Expr b = parse_program_file(b_path);
  SearchConfig cfg;
  cfg.max_steps = max_steps;
  cfg.max_expansions = max_expansions;
  ProveResult r = prove(a, b, cfg);
  if (r.found()) {
    std::cout << sequence_tokens(*r.sequence) << "\n";
    return 0;
  }
  // Mirrors the sequence vocabulary; not a proof of non-equivalence.
  std::cout << "Not_equal\n";
  return 1;
}

int cmd_stats(const std::string& path) {
  std::vector<SampleTuple> samples = read_file(path);
  std::cout << format_stats(stats(samples));
  return 0;
}

int cmd_split(const std::string& path, double train, double val, double test,
              std::uint64_t seed, std::string prefix) {
  std::vector<SampleTuple> samples = read_file(path);
  SplitResult sr = split(std::move(samples), train, val, test, seed);
  if (prefix.empty()) prefix = path;
  write_file(prefix + ".train", sr.train);
  write_file(prefix + ".val", sr.validation);
  write_file(prefix + ".test", sr.test);
  std::printf("train %zu  val %zu  test %zu\n", sr.train.size(),
              sr.validation.size(), sr.test.size());
  std::printf("test pairs with a program unseen in training: %.1f%%\n",
              100.0 * test_novelty_fraction(sr));
  return 0;
}

int cmd_axioms(const std::string& out) {
  if (out.empty()) {
    std::cout << catalog_tsv();
    return 0;
  }
  std::ofstream file(out, std::ios::binary);
  if (!file) throw IoError("cannot open '" + out + "' for writing");
  file << catalog_tsv();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rewrite-rule engine and dataset factory for linear-algebra "
               "program equivalence"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  std::size_t count = 50000;
  std::string out_file;
  double not_equal_frac = 0.0;
  double drop_short = 0.5;
  bool no_rebalance = false;
  CLI::App* generate = app.add_subcommand("generate", "build a corpus file");
  generate->add_option("--seed", seed, "rng seed")->capture_default_str();
  generate->add_option("--count", count, "samples after pruning")
      ->capture_default_str();
  generate->add_option("--out", out_file, "output file")->required();
  generate->add_option("--not-equal-frac", not_equal_frac,
                       "fraction of Not_equal samples")
      ->capture_default_str();
  generate->add_option("--drop-short", drop_short,
                       "fraction of 1-2 step samples dropped")
      ->capture_default_str();
  generate->add_flag("--no-rebalance", no_rebalance,
                     "skip the category-distribution adjustment");

  std::string a_path, b_path, seq_tokens;
  CLI::App* check_cmd =
      app.add_subcommand("check", "verify a rewrite sequence between two "
                                  "program files");
  check_cmd->add_option("A", a_path, "program file")->required();
  check_cmd->add_option("SEQ", seq_tokens, "sequence tokens")->required();
  check_cmd->add_option("B", b_path, "program file")->required();

  int max_steps = 5;
  std::size_t max_expansions = 200000;
  CLI::App* prove_cmd =
      app.add_subcommand("prove", "search for a rewrite sequence between two "
                                  "program files");
  prove_cmd->add_option("A", a_path, "program file")->required();
  prove_cmd->add_option("B", b_path, "program file")->required();
  prove_cmd->add_option("--max-steps", max_steps, "search depth")
      ->capture_default_str();
  prove_cmd->add_option("--max-expansions", max_expansions,
                        "search node budget")
      ->capture_default_str();

  std::string corpus;
  CLI::App* stats_cmd = app.add_subcommand("stats", "corpus statistics");
  stats_cmd->add_option("FILE", corpus, "corpus file")->required();

  double train = 0.8, val = 0.1, test = 0.1;
  std::uint64_t split_seed = 1;
  std::string prefix;
  CLI::App* split_cmd =
      app.add_subcommand("split", "partition a corpus into train/val/test");
  split_cmd->add_option("FILE", corpus, "corpus file")->required();
  split_cmd->add_option("--train", train, "train fraction")
      ->capture_default_str();
  split_cmd->add_option("--val", val, "validation fraction")
      ->capture_default_str();
  split_cmd->add_option("--test", test, "test fraction")->capture_default_str();
  split_cmd->add_option("--seed", split_seed, "shuffle seed")
      ->capture_default_str();
  split_cmd->add_option("--out-prefix", prefix,
                        "output prefix (default: FILE)");

  std::string axioms_out;
  CLI::App* axioms_cmd =
      app.add_subcommand("axioms", "dump the rule catalog as TSV");
  axioms_cmd->add_option("--out", axioms_out, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*generate)
      return cmd_generate(seed, count, out_file, not_equal_frac, drop_short,
                          no_rebalance);
    if (*check_cmd) return cmd_check(a_path, seq_tokens, b_path);
    if (*prove_cmd) return cmd_prove(a_path, b_path, max_steps, max_expansions);
    if (*stats_cmd) return cmd_stats(corpus);
    if (*split_cmd)
      return cmd_split(corpus, train, val, test, split_seed, prefix);
    if (*axioms_cmd) return cmd_axioms(axioms_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
