#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cyclomin/cyclic_matrix.hpp"
#include "cyclomin/spectral.hpp"

namespace cyclomin {

/// Comparison statistics of an ordered pair (σ, μ):
///   alpha = cross_sum(σ) - cross_sum(μ)
///   beta  = -odd_product_term(σ) + odd_product_term(μ)
///   gamma = -beta/alpha, defined only when alpha is not treated as zero
///   delta_cap = (Σ a_i²)² - 3·cross_sum(σ) (always positive)
///   x_m, x_M  = critical points of σ's reduced cubic, (Σ a_i² ∓ √Δ)/3
struct PairStats {
  double alpha = 0.0;
  double beta = 0.0;
  std::optional<double> gamma;
  double delta_cap = 0.0;
  double x_m = 0.0;
  double x_M = 0.0;
};

enum class Relation { SigmaStrictlySmaller, MuStrictlySmaller, Inconclusive };
enum class Rule { SameOddSet, DeltaTest, GershgorinTest };

/// Outcome of an analytic radius comparison plus the machine-checkable
/// certificate that produced it.
struct ComparisonVerdict {
  Relation relation = Relation::Inconclusive;
  Rule rule = Rule::DeltaTest;
  PairStats stats;
  std::optional<GershBounds> bounds;  // σ's bounds, Gershgorin rule only
};

/// Two candidates are within the ambiguity tolerance of each other.
struct TieError : std::runtime_error {
  TieError(PermClass first, PermClass second, double first_value,
           double second_value);
  PermClass first;
  PermClass second;
  double first_value;
  double second_value;
};

/// A conclusive analytic verdict contradicted the spectral ordering.
/// Must never fire; raising it aborts the run that detected it.
struct SoundnessError : std::logic_error {
  using std::logic_error::logic_error;
};

PairStats pair_stats(const WeightSequence& w, const PermClass& s,
                     const PermClass& m);

/// Same-family comparison: radii order exactly as the cyclic adjacency sums.
/// Requires family_of(s) == family_of(m); ties within the scale-aware
/// tolerance come back Inconclusive.
ComparisonVerdict compare_same_odd_set(const WeightSequence& w,
                                       const PermClass& s, const PermClass& m);

/// Critical-point test: with alpha = 0 the sign of beta decides; otherwise
/// gamma <= x_M decides by the sign of alpha (alpha > 0 means σ strictly
/// smaller). gamma > x_M stays Inconclusive.
ComparisonVerdict delta_test(const WeightSequence& w, const PermClass& s,
                             const PermClass& m);

/// Interval test: alpha < 0 with gamma > G², or alpha > 0 with gamma < g²,
/// proves σ strictly smaller. Can only ever conclude in σ's favor.
ComparisonVerdict gershgorin_test(const WeightSequence& w, const PermClass& s,
                                  const PermClass& m);

/// The weight-independent minimizer within a family (static 10-entry table).
PermClass family_minimizer(const Family& f);

/// The five classes that minimize the radius for at least one weight
/// sequence, in their canonical order.
const std::vector<PermClass>& m6_set();

/// Result of the certified analytic pipeline: a unique winner with the
/// pairwise certificates that prove it, or the surviving candidate set.
struct AnalyticOutcome {
  std::optional<PermClass> winner;
  std::vector<PermClass> survivors;  // candidates not proven beaten
  struct Certificate {
    PermClass sigma;
    PermClass mu;
    ComparisonVerdict verdict;
  };
  std::vector<Certificate> certificates;  // every conclusive pairwise verdict
};

/// Reduces to the 10 family minimizers, runs Gershgorin then delta tests on
/// undecided ordered pairs, and takes the transitive closure of the strict
/// verdicts. The winner, when one exists, provably beats all other
/// candidates. n = 6 only.
AnalyticOutcome analytic_minimizer(const WeightSequence& w);

/// Exact argmin over all representatives, closed form at n = 6 and power
/// iteration otherwise. Throws TieError when the two smallest radii differ
/// by less than 1e-10 relative. n in 4..8.
std::pair<PermClass, RadiusResult> brute_force_minimizer(const WeightSequence& w);

/// Argmin of the cyclic adjacency sum over the 60 representatives.
PermClass adjacency_argmin_check(const WeightSequence& w);

/// The family whose members minimize the negated odd/even product sum.
Family constant_term_family_check(const WeightSequence& w);

namespace detail {

/// Cached representative list per n (thread-safe).
const std::vector<PermClass>& cached_representatives(int n);

/// Indices and radii of the two smallest entries; no tie handling here.
struct ArgminRadius {
  std::size_t best_idx = 0;
  std::size_t second_idx = 0;
  double best = 0.0;
  double second = 0.0;
};

ArgminRadius argmin_radius(const WeightSequence& w,
                           const std::vector<PermClass>& reps);

}  // namespace detail

}  // namespace cyclomin
