#include "cyclomin/decision.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <string>

namespace cyclomin {

namespace {

PermClass make_class(std::initializer_list<int> img) {
  return PermClass(Permutation(std::vector<int>(img)));
}

Relation relation_from_alpha_sign(double alpha) {
  // alpha > 0 proves w(σ) < w(μ); alpha < 0 proves the reverse.
  return alpha > 0.0 ? Relation::SigmaStrictlySmaller
                     : Relation::MuStrictlySmaller;
}

}  // namespace

TieError::TieError(PermClass first_arg, PermClass second_arg, double v1,
                   double v2)
    : std::runtime_error("ambiguous minimum: two candidates within tolerance (" +
                         std::to_string(v1) + " vs " + std::to_string(v2) + ")"),
      first(std::move(first_arg)),
      second(std::move(second_arg)),
      first_value(v1),
      second_value(v2) {}

PairStats pair_stats(const WeightSequence& w, const PermClass& s,
                     const PermClass& m) {
  PairStats st;
  const double cross_s = cross_sum(w, s);
  st.alpha = cross_s - cross_sum(w, m);
  st.beta = -odd_product_term(w, s) + odd_product_term(w, m);
  const double sum_sq = w.sum_squares();
  st.delta_cap = sum_sq * sum_sq - 3.0 * cross_s;
  const double root = std::sqrt(std::max(st.delta_cap, 0.0));
  st.x_m = (sum_sq - root) / 3.0;
  st.x_M = (sum_sq + root) / 3.0;
  if (std::abs(st.alpha) > linear_coeff_zero_tolerance(w)) {
    st.gamma = -st.beta / st.alpha;
  }
  return st;
}

ComparisonVerdict compare_same_odd_set(const WeightSequence& w,
                                       const PermClass& s, const PermClass& m) {
  if (family_of(s) != family_of(m)) {
    throw std::domain_error(
        "compare_same_odd_set requires both classes in the same family");
  }
  ComparisonVerdict v;
  v.rule = Rule::SameOddSet;
  v.stats = pair_stats(w, s, m);
  const double diff = adjacency_sum(w, s) - adjacency_sum(w, m);
  const double tol = linear_coeff_zero_tolerance(w);
  if (diff < -tol) {
    v.relation = Relation::SigmaStrictlySmaller;
  } else if (diff > tol) {
    v.relation = Relation::MuStrictlySmaller;
  } else {
    v.relation = Relation::Inconclusive;
  }
  return v;
}

ComparisonVerdict delta_test(const WeightSequence& w, const PermClass& s,
                             const PermClass& m) {
  ComparisonVerdict v;
  v.rule = Rule::DeltaTest;
  v.stats = pair_stats(w, s, m);
  if (!v.stats.gamma.has_value()) {
    // alpha treated as zero: the constant-term difference decides alone.
    const double tol = const_coeff_zero_tolerance(w);
    if (v.stats.beta > tol) {
      v.relation = Relation::SigmaStrictlySmaller;
    } else if (v.stats.beta < -tol) {
      v.relation = Relation::MuStrictlySmaller;
    } else {
      v.relation = Relation::Inconclusive;
    }
    return v;
  }
  if (*v.stats.gamma <= v.stats.x_M) {
    v.relation = relation_from_alpha_sign(v.stats.alpha);
  } else {
    v.relation = Relation::Inconclusive;
  }
  return v;
}

ComparisonVerdict gershgorin_test(const WeightSequence& w, const PermClass& s,
                                  const PermClass& m) {
  ComparisonVerdict v;
  v.rule = Rule::GershgorinTest;
  v.stats = pair_stats(w, s, m);
  v.bounds = gersh_bounds(w, s);
  v.relation = Relation::Inconclusive;
  if (v.stats.gamma.has_value()) {
    const double gamma = *v.stats.gamma;
    const double g2 = v.bounds->g * v.bounds->g;
    const double G2 = v.bounds->G * v.bounds->G;
    if ((v.stats.alpha < 0.0 && gamma > G2) ||
        (v.stats.alpha > 0.0 && gamma < g2)) {
      v.relation = Relation::SigmaStrictlySmaller;
    }
  }
  return v;
}

PermClass family_minimizer(const Family& f) {
  static const std::vector<std::pair<Family, PermClass>> table = [] {
    std::vector<std::pair<Family, PermClass>> t;
    t.emplace_back(Family({1, 2, 3}), make_class({1, 5, 3, 4, 2, 6}));
    t.emplace_back(Family({1, 2, 4}), make_class({1, 5, 4, 3, 2, 6}));
    t.emplace_back(Family({1, 2, 5}), make_class({1, 4, 5, 3, 2, 6}));
    t.emplace_back(Family({1, 2, 6}), make_class({1, 4, 6, 3, 2, 5}));
    t.emplace_back(Family({1, 3, 4}), make_class({1, 5, 4, 2, 3, 6}));
    t.emplace_back(Family({1, 3, 5}), make_class({1, 4, 5, 2, 3, 6}));
    t.emplace_back(Family({1, 3, 6}), make_class({1, 4, 6, 2, 3, 5}));
    t.emplace_back(Family({1, 4, 5}), make_class({1, 3, 5, 2, 4, 6}));
    t.emplace_back(Family({1, 4, 6}), make_class({1, 3, 6, 2, 4, 5}));
    t.emplace_back(Family({1, 5, 6}), make_class({1, 3, 6, 2, 5, 4}));
    return t;
  }();
  for (const auto& [fam, cls] : table) {
    if (fam == f) return cls;
  }
  throw std::logic_error("family not in the 10-entry table");  // unreachable
}

const std::vector<PermClass>& m6_set() {
  static const std::vector<PermClass> set = {
      make_class({1, 5, 3, 4, 2, 6}), make_class({1, 4, 5, 3, 2, 6}),
      make_class({1, 5, 4, 3, 2, 6}), make_class({1, 5, 4, 2, 3, 6}),
      make_class({1, 4, 5, 2, 3, 6}),
  };
  return set;
}

namespace detail {

const std::vector<PermClass>& cached_representatives(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<PermClass>> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(n, enumerate_representatives(n)).first;
  }
  return it->second;
}

ArgminRadius argmin_radius(const WeightSequence& w,
                           const std::vector<PermClass>& reps) {
  const int n = w.n();
  if (reps.empty() || reps.front().n() != n || n > 16) {
    throw std::domain_error("argmin_radius: representative list mismatch");
  }
  ArgminRadius out;
  out.best = std::numeric_limits<double>::infinity();
  out.second = std::numeric_limits<double>::infinity();

  double b[16];
  for (std::size_t i = 0; i < reps.size(); ++i) {
    double radius;
    if (n == 6) {
      radius = 0.5 * std::sqrt(std::max(
                         largest_cubic_root(reduced_cubic(w, reps[i])), 0.0));
    } else {
      // Root of the characteristic polynomial rather than power iteration:
      // the batch path must not stall on near-degenerate top eigenpairs.
      const auto& img = reps[i].images();
      for (int kpos = 0; kpos < n; ++kpos) {
        b[kpos] = w[img[static_cast<std::size_t>(kpos)]];
      }
      radius = 0.5 * cycle_lambda_max_newton(b, n);
    }
    if (radius < out.best) {
      out.second = out.best;
      out.second_idx = out.best_idx;
      out.best = radius;
      out.best_idx = i;
    } else if (radius < out.second) {
      out.second = radius;
      out.second_idx = i;
    }
  }
  return out;
}

}  // namespace detail

AnalyticOutcome analytic_minimizer(const WeightSequence& w) {
  if (w.n() != 6) {
    throw std::domain_error("analytic_minimizer is defined for n = 6 only");
  }
  std::vector<PermClass> candidates;
  candidates.reserve(10);
  for (const auto& fam :
       {Family({1, 2, 3}), Family({1, 2, 4}), Family({1, 2, 5}),
        Family({1, 2, 6}), Family({1, 3, 4}), Family({1, 3, 5}),
        Family({1, 3, 6}), Family({1, 4, 5}), Family({1, 4, 6}),
        Family({1, 5, 6})}) {
    candidates.push_back(family_minimizer(fam));
  }

  const std::size_t k = candidates.size();
  std::vector<char> beats(k * k, 0);
  AnalyticOutcome out;

  // Certificates keep the orientation the test ran in; the domination edge
  // follows the relation.
  auto consider = [&](std::size_t i, std::size_t j, const ComparisonVerdict& v) {
    if (v.relation == Relation::Inconclusive) return false;
    if (v.relation == Relation::SigmaStrictlySmaller) {
      beats[i * k + j] = 1;
    } else {
      beats[j * k + i] = 1;
    }
    out.certificates.push_back({candidates[i], candidates[j], v});
    return true;
  };

  // Cheap interval tests first, then the critical-point tests, stopping at
  // the first conclusive verdict per pair.
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (consider(i, j, gershgorin_test(w, candidates[i], candidates[j]))) continue;
      if (consider(j, i, gershgorin_test(w, candidates[j], candidates[i]))) continue;
      if (consider(i, j, delta_test(w, candidates[i], candidates[j]))) continue;
      consider(j, i, delta_test(w, candidates[j], candidates[i]));
    }
  }

  // Transitive closure: strict radius orderings compose.
  for (std::size_t mid = 0; mid < k; ++mid) {
    for (std::size_t i = 0; i < k; ++i) {
      if (!beats[i * k + mid]) continue;
      for (std::size_t j = 0; j < k; ++j) {
        if (beats[mid * k + j]) beats[i * k + j] = 1;
      }
    }
  }

  for (std::size_t i = 0; i < k; ++i) {
    bool beaten = false;
    for (std::size_t j = 0; j < k; ++j) {
      if (beats[j * k + i]) {
        beaten = true;
        break;
      }
    }
    if (!beaten) out.survivors.push_back(candidates[i]);
  }
  for (std::size_t i = 0; i < k; ++i) {
    bool beats_all = true;
    for (std::size_t j = 0; j < k; ++j) {
      if (j != i && !beats[i * k + j]) {
        beats_all = false;
        break;
      }
    }
    if (beats_all) {
      out.winner = candidates[i];
      break;
    }
  }
  return out;
}

std::pair<PermClass, RadiusResult> brute_force_minimizer(const WeightSequence& w) {
  const int n = w.n();
  if (n < 4 || n > 8) {
    throw std::domain_error("brute_force_minimizer supports n in 4..8");
  }
  const auto& reps = detail::cached_representatives(n);
  const detail::ArgminRadius arg = detail::argmin_radius(w, reps);
  if (arg.second - arg.best <
      1e-10 * std::max(std::abs(arg.best), std::abs(arg.second))) {
    throw TieError(reps[arg.best_idx], reps[arg.second_idx], arg.best,
                   arg.second);
  }
  const PermClass& winner = reps[arg.best_idx];
  const RadiusResult result = (n == 6) ? radius_closed_form(w, winner)
                                       : radius_power_iteration(w, winner);
  return {winner, result};
}

PermClass adjacency_argmin_check(const WeightSequence& w) {
  if (w.n() != 6) {
    throw std::domain_error("adjacency_argmin_check is defined for n = 6 only");
  }
  const auto& reps = detail::cached_representatives(6);
  std::size_t best_idx = 0;
  std::size_t second_idx = 0;
  double best = std::numeric_limits<double>::infinity();
  double second = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const double s = adjacency_sum(w, reps[i]);
    if (s < best) {
      second = best;
      second_idx = best_idx;
      best = s;
      best_idx = i;
    } else if (s < second) {
      second = s;
      second_idx = i;
    }
  }
  if (second - best <= linear_coeff_zero_tolerance(w)) {
    throw TieError(reps[best_idx], reps[second_idx], best, second);
  }
  return reps[best_idx];
}

Family constant_term_family_check(const WeightSequence& w) {
  if (w.n() != 6) {
    throw std::domain_error(
        "constant_term_family_check is defined for n = 6 only");
  }
  // Minimizing the negated product sum is maximizing odd_product_term, which
  // is constant on each family.
  std::optional<Family> best_family;
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& rep : detail::cached_representatives(6)) {
    const double value = odd_product_term(w, rep);
    if (value > best) {
      best = value;
      best_family = family_of(rep);
    }
  }
  return *best_family;
}

}  // namespace cyclomin
