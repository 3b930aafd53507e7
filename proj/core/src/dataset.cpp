#include "eqrw/dataset.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "eqrw/axioms.hpp"
#include "eqrw/rng.hpp"

namespace eqrw {

const std::array<double, kCategoryCount> kReferenceUsagePercent = {
    13.0,  // Cancel
    29.2,  // Noop
    7.5,   // Double
    29.5,  // Commute
    28.0,  // DistributeLeft
    19.6,  // DistributeRight
    2.1,   // FactorLeft
    3.1,   // FactorRight
    16.6,  // AssociativeLeft
    16.2,  // AssociativeRight
    9.7,   // FlipLeft
    23.2,  // FlipRight
    10.1,  // Transpose
};

namespace {

std::string dedup_key(const std::string& a, const std::string& b,
                      const std::string& seq) {
  return a + '\t' + b + '\t' + seq;
}

std::array<bool, kCategoryCount> categories_used(const RewriteSequence& seq) {
  std::array<bool, kCategoryCount> used{};
  for (const RewriteStep& step : seq.steps) {
    used[static_cast<std::size_t>(step.category)] = true;
  }
  return used;
}

}  // namespace

std::vector<SampleTuple> build(const GenConfig& cfg, const PruneRules& rules,
                               std::size_t n_target,
                               const BuildOptions& opts) {
  std::vector<SampleTuple> out;
  out.reserve(n_target);
  std::unordered_set<std::string> seen;
  std::array<std::size_t, kCategoryCount> usage{};
  std::size_t equal_accepted = 0;

  std::array<double, kCategoryCount> caps{};
  std::array<double, kCategoryCount> floors{};
  for (int c = 0; c < kCategoryCount; ++c) {
    caps[c] = (kReferenceUsagePercent[c] + opts.rebalance_margin_points) / 100.0;
    floors[c] = std::max(
        0.0, (kReferenceUsagePercent[c] - opts.rebalance_margin_points) / 100.0);
  }
  // Grace keeps the caps from starving the head of the stream, where a
  // single sample swings the share by whole points.
  constexpr double kCapGrace = 25.0;
  // How aggressively samples that help no lagging category are thinned.
  constexpr double kFloorBoost = 0.75;

  const std::uint64_t budget =
      opts.max_attempts ? opts.max_attempts : 200 * n_target + 10000;
  std::size_t not_equal_accepted = 0;

  for (std::uint64_t index = 0; out.size() < n_target; ++index) {
    if (index >= budget) {
      throw ExhaustionError(
          "dataset build accepted " + std::to_string(out.size()) + " of " +
          std::to_string(n_target) + " samples after " +
          std::to_string(index) + " attempts");
    }
    Rng rng(derive_stream(cfg.rng_seed, index));
    // Quota rather than a coin: the flag names the final corpus share.
    const bool make_unequal =
        static_cast<double>(not_equal_accepted + 1) <=
        opts.not_equal_fraction * static_cast<double>(out.size() + 1);
    Expr a = gen_src(cfg, rng);

    if (make_unequal) {
      Expr b;
      try {
        b = gen_unequal(cfg, a, rng);
      } catch (const DegenerateInput&) {
        continue;
      }
      std::string pa = print(a), pb = print(b);
      if (pa == pb) continue;
      if (a.node_count() > rules.max_program_nodes ||
          b.node_count() > rules.max_program_nodes)
        continue;
      if (a.node_count() + b.node_count() > rules.max_pair_tokens) continue;
      if (a.depth_edges() > rules.max_depth_edges ||
          b.depth_edges() > rules.max_depth_edges)
        continue;
      if (!seen.insert(dedup_key(pa, pb, "Not_equal")).second) continue;
      ++not_equal_accepted;
      out.push_back({std::move(a), std::move(b), false, {}});
      continue;
    }

    auto [b, seq] = gen_tgt(cfg, a, rng);
    std::string pa = print(a), pb = print(b);
    if (pa == pb) continue;  // covers the empty sequence as well
    if (a.node_count() > rules.max_program_nodes ||
        b.node_count() > rules.max_program_nodes)
      continue;
    if (a.node_count() + b.node_count() > rules.max_pair_tokens) continue;
    if (a.depth_edges() > rules.max_depth_edges ||
        b.depth_edges() > rules.max_depth_edges)
      continue;
    if (static_cast<int>(seq.size()) > rules.max_steps) continue;
    if (seq.token_count() > rules.max_seq_tokens) continue;
    if (seq.size() <= 2 && rng.bernoulli(rules.drop_short_fraction)) continue;

    std::array<bool, kCategoryCount> used = categories_used(seq);
    if (opts.rebalance) {
      bool over = false;
      bool any_deficit = false;
      bool helps_deficit = false;
      for (int c = 0; c < kCategoryCount; ++c) {
        double projected = static_cast<double>(equal_accepted + 1);
        if (used[c] && static_cast<double>(usage[c] + 1) >
                           caps[c] * projected + kCapGrace) {
          over = true;
        }
        if (static_cast<double>(usage[c]) < floors[c] * projected - kCapGrace) {
          any_deficit = true;
          if (used[c]) helps_deficit = true;
        }
      }
      if (over) continue;
      if (any_deficit && !helps_deficit && rng.bernoulli(kFloorBoost)) continue;
    }

    if (!seen.insert(dedup_key(pa, pb, sequence_tokens(seq))).second) continue;
    if (!check(a, seq, b).proven()) {
      throw std::logic_error("generated sequence failed re-verification");
    }
    for (int c = 0; c < kCategoryCount; ++c) usage[c] += used[c] ? 1 : 0;
    ++equal_accepted;
    out.push_back({std::move(a), std::move(b), true, std::move(seq)});
  }
  return out;
}

double DatasetStats::usage_percent(Category c) const {
  if (sample_count == 0) return 0.0;
  return 100.0 * static_cast<double>(category_uses[static_cast<std::size_t>(c)]) /
         static_cast<double>(sample_count);
}

DatasetStats stats(std::span<const SampleTuple> samples) {
  DatasetStats s;
  for (const SampleTuple& sample : samples) {
    ++s.sample_count;
    ++s.node_histogram[sample.prog_a.node_count()];
    ++s.node_histogram[sample.prog_b.node_count()];
    if (!sample.equal) {
      ++s.not_equal_count;
      continue;
    }
    ++s.step_histogram[static_cast<int>(sample.seq.size())];
    std::array<bool, kCategoryCount> used = categories_used(sample.seq);
    for (int c = 0; c < kCategoryCount; ++c) {
      s.category_uses[c] += used[c] ? 1 : 0;
    }
  }
  return s;
}

namespace {

std::string percent(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f%%", value);
  return buf;
}

}  // namespace

std::string format_stats(const DatasetStats& s) {
  std::ostringstream out;
  out << "samples: " << s.sample_count << "\n";
  if (s.not_equal_count > 0 || s.sample_count == 0) {
    double pct = s.sample_count == 0
                     ? 0.0
                     : 100.0 * static_cast<double>(s.not_equal_count) /
                           static_cast<double>(s.sample_count);
    out << "not_equal: " << s.not_equal_count << " (" << percent(pct) << ")\n";
  }
  out << "samples using rule:\n";
  for (Category c : all_categories()) {
    char line[64];
    std::snprintf(line, sizeof line, "  %-17s %s\n",
                  std::string(category_name(c)).c_str(),
                  percent(s.usage_percent(c)).c_str());
    out << line;
  }
  out << "steps histogram:\n";
  for (const auto& [steps, count] : s.step_histogram) {
    double pct = s.sample_count == 0
                     ? 0.0
                     : 100.0 * static_cast<double>(count) /
                           static_cast<double>(s.sample_count);
    out << "  " << steps << ": " << count << " (" << percent(pct) << ")\n";
  }
  out << "program size histogram (nodes):\n";
  for (const auto& [nodes, count] : s.node_histogram) {
    out << "  " << nodes << ": " << count << "\n";
  }
  return out.str();
}

void write(std::ostream& out, std::span<const SampleTuple> samples) {
  for (const SampleTuple& sample : samples) {
    out << print(sample.prog_a) << '\t' << print(sample.prog_b) << '\t';
    if (sample.equal) {
      out << sequence_tokens(sample.seq);
    } else {
      out << "Not_equal";
    }
    out << '\n';
  }
}

void write_file(const std::string& path, std::span<const SampleTuple> samples) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write(out, samples);
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

std::vector<SampleTuple> read(std::istream& in) {
  std::vector<SampleTuple> samples;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::size_t tab1 = line.find('\t');
    std::size_t tab2 = tab1 == std::string::npos ? std::string::npos
                                                 : line.find('\t', tab1 + 1);
    if (tab1 == std::string::npos || tab2 == std::string::npos ||
        line.find('\t', tab2 + 1) != std::string::npos) {
      throw FormatError("line " + std::to_string(lineno) +
                        ": expected 3 tab-separated fields");
    }
    SampleTuple sample;
    try {
      sample.prog_a = parse(line.substr(0, tab1));
      sample.prog_b = parse(line.substr(tab1 + 1, tab2 - tab1 - 1));
    } catch (const std::runtime_error& e) {
      throw FormatError("line " + std::to_string(lineno) + ": " + e.what());
    }
    std::string field = line.substr(tab2 + 1);
    if (field == "Not_equal") {
      sample.equal = false;
    } else {
      sample.equal = true;
      try {
        sample.seq = parse_sequence(field);
      } catch (const SyntaxError& e) {
        throw FormatError("line " + std::to_string(lineno) + ": " + e.what());
      }
    }
    samples.push_back(std::move(sample));
  }
  return samples;
}

std::vector<SampleTuple> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  return read(in);
}

SplitResult split(std::vector<SampleTuple> samples, double train_frac,
                  double val_frac, double test_frac, std::uint64_t seed) {
  if (train_frac < 0 || val_frac < 0 || test_frac < 0 ||
      std::abs(train_frac + val_frac + test_frac - 1.0) > 1e-9) {
    throw std::invalid_argument("split fractions must be >= 0 and sum to 1");
  }
  Rng rng(seed);
  // Fisher-Yates; std::shuffle is not reproducible across libraries.
  for (std::size_t i = samples.size(); i > 1; --i) {
    std::size_t j = rng.next_below(static_cast<std::uint32_t>(i));
    std::swap(samples[i - 1], samples[j]);
  }
  const std::size_t n = samples.size();
  std::size_t n_train = static_cast<std::size_t>(
      std::llround(train_frac * static_cast<double>(n)));
  std::size_t n_val = static_cast<std::size_t>(
      std::llround(val_frac * static_cast<double>(n)));
  n_train = std::min(n_train, n);
  n_val = std::min(n_val, n - n_train);

  SplitResult result;
  result.train.assign(samples.begin(), samples.begin() + n_train);
  result.validation.assign(samples.begin() + n_train,
                           samples.begin() + n_train + n_val);
  result.test.assign(samples.begin() + n_train + n_val, samples.end());
  return result;
}

double test_novelty_fraction(const SplitResult& s) {
  if (s.test.empty()) return 0.0;
  std::unordered_set<std::string> train_programs;
  for (const SampleTuple& sample : s.train) {
    train_programs.insert(print(sample.prog_a));
    train_programs.insert(print(sample.prog_b));
  }
  std::size_t novel = 0;
  for (const SampleTuple& sample : s.test) {
    if (!train_programs.count(print(sample.prog_a)) ||
        !train_programs.count(print(sample.prog_b))) {
      ++novel;
    }
  }
  return static_cast<double>(novel) / static_cast<double>(s.test.size());
}

}  // namespace eqrw
