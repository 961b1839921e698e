#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cyclomin/decision.hpp"

namespace cyclomin {

enum class WeightDistribution { UniformSorted, LogUniformSorted };

/// Fully determines a sample stream: identical configs produce bit-identical
/// streams regardless of sharding.
struct SamplerConfig {
  int n = 6;
  WeightDistribution distribution = WeightDistribution::UniformSorted;
  std::uint64_t seed = 0;
  std::int64_t samples = 1;
};

/// Deterministic per-index substreams: sample i draws from an mt19937_64
/// seeded with splitmix64(seed + (i+1)·0x9E3779B97F4A7C15), uniforms taken
/// as (x >> 11)·2⁻⁵³. UniformSorted sorts n draws from [0,1);
/// LogUniformSorted maps them through exp(ln(1e-3)·(1-u)) first. Draws whose
/// sorted gaps fall below 1e-12 are rejected and redrawn from the same
/// substream.
class WeightSampler {
 public:
  explicit WeightSampler(SamplerConfig cfg);
  WeightSequence at(std::int64_t index) const;
  const SamplerConfig& config() const { return cfg_; }

 private:
  SamplerConfig cfg_;
};

std::vector<WeightSequence> sample_weights(const SamplerConfig& cfg);

/// Seeded run record. Counts always sum to samples minus ties.
struct ExperimentReport {
  SamplerConfig config;
  std::map<PermClass, std::int64_t> minimizer_counts;
  std::int64_t ties = 0;
  std::int64_t analytic_success = 0;
  std::int64_t analytic_attempts = 0;
  std::set<PermClass> distinct_minimizers;
  std::optional<PermClass> pattern;        // conjecture scans only
  std::optional<bool> pattern_is_modal;    // conjecture scans only
  std::string wall_notes;
};

/// Brute-force minimizer census over cfg.samples seeded draws. n in 4..8.
ExperimentReport run_minimizer_census(const SamplerConfig& cfg);

/// Census plus the certified analytic pipeline per sample; success means
/// conclusive and equal to the brute-force argmin. A conclusive-but-wrong
/// sample raises SoundnessError. n = 6 only.
ExperimentReport run_analytic_success_rate(const SamplerConfig& cfg);

/// Census plus the interleaving-pattern permutation for n and whether it is
/// the modal minimizer. n in 4..8.
ExperimentReport run_conjecture_scan(const SamplerConfig& cfg);

/// Product of the value transpositions (2,n-1), (4,n-3), ... while the left
/// index stays below the right one.
PermClass conjectured_pattern(int n);

/// One recomputed quantity checked against its recorded value.
struct TableCellCheck {
  int block = 0;             // 1..5
  std::string cell;          // "g2", "G2", "row1".."row4"
  std::string detail;        // e.g. the opposing class for row cells
  double expected = 0.0;
  double actual = 0.0;
  double tolerance = 0.0;
  bool sign_expected_positive = false;  // row cells: recorded sign of alpha
  bool sign_matches = true;
  bool pass = false;
};

/// A universal elimination re-verified on random weight sequences.
struct EliminationCheck {
  std::string label;
  PermClass sigma;
  PermClass mu;
  Rule rule = Rule::GershgorinTest;
  std::int64_t trials = 0;
  std::int64_t failures = 0;
  bool pass = false;
};

struct PaperVerification {
  std::vector<TableCellCheck> cells;          // 30 cells: 5 blocks × 6
  std::vector<EliminationCheck> eliminations; // 5 universal eliminations
  bool all_pass() const;
};

/// Recomputes the five verification blocks (interval bounds and the 20
/// gamma/sign rows) against their recorded values, and re-verifies the five
/// universal eliminations on `elimination_trials` random weight sequences.
PaperVerification verify_paper_tables(std::uint64_t elimination_seed = 2026,
                                      std::int64_t elimination_trials = 1000);

/// Worker cap: CYCLOMIN_THREADS, or hardware concurrency when unset/0.
int thread_budget();

}  // namespace cyclomin
