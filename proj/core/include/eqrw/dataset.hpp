#ifndef EQRW_DATASET_HPP
#define EQRW_DATASET_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "eqrw/generator.hpp"

namespace eqrw {

struct PruneRules {
  int max_pair_tokens = 60;    // node_count(a) + node_count(b)
  int max_depth_edges = 5;     // both programs
  int max_steps = 5;
  int max_seq_tokens = 25;     // selectors + category names
  int max_program_nodes = 30;  // each program
  // Fraction of 1-2 step samples removed, biasing toward longer proofs.
  double drop_short_fraction = 0.5;
};

// Per-category share of samples in the reference corpus (percent of
// samples whose sequence uses the category at least once). Also the
// steering target of the rebalancing pass.
extern const std::array<double, kCategoryCount> kReferenceUsagePercent;

struct BuildOptions {
  // Fraction of corrupted Not_equal pairs; equal-only corpora are the
  // default.
  double not_equal_fraction = 0.0;
  // Steer each category's usage share into
  // [reference - margin, reference + margin] by thinning samples that
  // overshoot a cap or do not help a lagging category. This is the
  // "reasonable statistical distribution" adjustment; switchable for
  // raw-generator studies.
  bool rebalance = true;
  double rebalance_margin_points = 6.0;
  // Attempt budget before ExhaustionError; 0 means 200*n_target + 10000.
  std::uint64_t max_attempts = 0;
};

// Generate until n_target samples survive pruning: drops oversized pairs,
// lexically equal pairs, a fraction of short proofs and global duplicates
// of (print(a), print(b), sequence), and re-checks every sequence before
// emitting. Deterministic for a given cfg: sample i draws from stream
// hash(seed, i), and acceptance is replayed in order.
std::vector<SampleTuple> build(const GenConfig& cfg, const PruneRules& rules,
                               std::size_t n_target,
                               const BuildOptions& opts = {});

struct DatasetStats {
  std::size_t sample_count = 0;
  std::size_t not_equal_count = 0;
  // A sample counts once for every category its sequence uses, so the
  // percentages sum to more than 100.
  std::array<std::size_t, kCategoryCount> category_uses{};
  std::map<int, std::size_t> step_histogram;  // equal samples only
  std::map<int, std::size_t> node_histogram;  // per program, a and b each

  double usage_percent(Category c) const;
};

DatasetStats stats(std::span<const SampleTuple> samples);
std::string format_stats(const DatasetStats& s);

// One sample per line: print(a) TAB print(b) TAB sequence tokens or
// "Not_equal". read(write(x)) == x byte for byte.
void write(std::ostream& out, std::span<const SampleTuple> samples);
void write_file(const std::string& path, std::span<const SampleTuple> samples);
std::vector<SampleTuple> read(std::istream& in);
std::vector<SampleTuple> read_file(const std::string& path);

struct SplitResult {
  std::vector<SampleTuple> train;
  std::vector<SampleTuple> validation;
  std::vector<SampleTuple> test;
};

// Disjoint partition by seeded shuffle. Fractions must sum to 1; tuple
// uniqueness upstream keeps train and test from intersecting.
SplitResult split(std::vector<SampleTuple> samples, double train_frac,
                  double val_frac, double test_frac, std::uint64_t seed);

// Fraction of test pairs with at least one program that never appears in
// the training set. Reported, never enforced.
double test_novelty_fraction(const SplitResult& s);

}  // namespace eqrw

#endif
