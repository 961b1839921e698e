#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <string>

#include "cyclomin/experiments.hpp"

using namespace cyclomin;

namespace {

PermClass cls(std::initializer_list<int> img) {
  return PermClass(Permutation(std::vector<int>(img)));
}

struct ThreadCapGuard {
  std::string saved;
  bool had = false;
  explicit ThreadCapGuard(const char* value) {
    if (const char* old = std::getenv("CYCLOMIN_THREADS")) {
      saved = old;
      had = true;
    }
    setenv("CYCLOMIN_THREADS", value, 1);
  }
  ~ThreadCapGuard() {
    if (had) {
      setenv("CYCLOMIN_THREADS", saved.c_str(), 1);
    } else {
      unsetenv("CYCLOMIN_THREADS");
    }
  }
};

}  // namespace

TEST_CASE("sampler streams are deterministic and valid") {
  SamplerConfig cfg{6, WeightDistribution::UniformSorted, 42, 3};
  const WeightSampler a(cfg);
  const WeightSampler b(cfg);
  for (std::int64_t i = 0; i < cfg.samples; ++i) {
    CHECK(a.at(i).values() == b.at(i).values());
  }
  const auto batch = sample_weights(cfg);
  REQUIRE(batch.size() == 3);
  for (std::int64_t i = 0; i < 3; ++i) {
    CHECK(batch[static_cast<std::size_t>(i)].values() == a.at(i).values());
  }

  SamplerConfig other = cfg;
  other.seed = 43;
  CHECK(WeightSampler(other).at(0).values() != a.at(0).values());

  CHECK_THROWS_AS(WeightSampler(SamplerConfig{3, {}, 1, 10}), std::domain_error);
  CHECK_THROWS_AS(WeightSampler(SamplerConfig{6, {}, 1, 0}), std::domain_error);
}

TEST_CASE("uniform sorted draws behave like sorted uniforms") {
  SamplerConfig cfg{6, WeightDistribution::UniformSorted, 7, 100000};
  const WeightSampler sampler(cfg);
  double mean_max = 0.0;
  for (std::int64_t i = 0; i < cfg.samples; ++i) {
    mean_max += sampler.at(i)[6];
  }
  mean_max /= static_cast<double>(cfg.samples);
  CHECK(std::abs(mean_max - 6.0 / 7.0) < 0.01);  // order-statistics mean
}

TEST_CASE("log-uniform draws stay in range") {
  SamplerConfig cfg{6, WeightDistribution::LogUniformSorted, 9, 200};
  const WeightSampler sampler(cfg);
  for (std::int64_t i = 0; i < cfg.samples; ++i) {
    const auto w = sampler.at(i);
    CHECK(w[1] >= 1e-3);
    CHECK(w[6] <= 1.0);
  }
}

TEST_CASE("census at short cycle lengths finds the unique minimizers") {
  {
    const auto report =
        run_minimizer_census(SamplerConfig{4, {}, 1001, 2000});
    CHECK(report.distinct_minimizers.size() == 1);
    CHECK(report.distinct_minimizers.count(cls({1, 3, 2, 4})) == 1);
    std::int64_t total = report.ties;
    for (const auto& [c, count] : report.minimizer_counts) total += count;
    CHECK(total == 2000);
  }
  {
    const auto report =
        run_minimizer_census(SamplerConfig{5, {}, 1002, 2000});
    CHECK(report.distinct_minimizers.size() == 1);
    CHECK(report.distinct_minimizers.count(cls({1, 4, 3, 2, 5})) == 1);
  }
}

TEST_CASE("census at n=6 stays inside the five-candidate set") {
  const auto report = run_minimizer_census(SamplerConfig{6, {}, 1003, 3000});
  const auto& five = m6_set();
  for (const auto& c : report.distinct_minimizers) {
    CHECK(std::find(five.begin(), five.end(), c) != five.end());
  }
  CHECK(report.distinct_minimizers.size() == 5);  // all five show up by 3000
}

TEST_CASE("reports are identical for any thread count") {
  const SamplerConfig cfg{6, {}, 1004, 2000};
  ExperimentReport solo, duo;
  {
    ThreadCapGuard guard("1");
    solo = run_minimizer_census(cfg);
  }
  {
    ThreadCapGuard guard("3");
    duo = run_minimizer_census(cfg);
  }
  CHECK(solo.minimizer_counts == duo.minimizer_counts);
  CHECK(solo.ties == duo.ties);
}

TEST_CASE("thread budget env override") {
  ThreadCapGuard guard("5");
  CHECK(thread_budget() == 5);
}

TEST_CASE("analytic success-rate run") {
  const auto report =
      run_analytic_success_rate(SamplerConfig{6, {}, 1005, 2000});
  CHECK(report.analytic_attempts == 2000 - report.ties);
  CHECK(report.analytic_success <= report.analytic_attempts);
  const double rate = static_cast<double>(report.analytic_success) /
                      static_cast<double>(report.analytic_attempts);
  CHECK(rate > 0.25);
  CHECK(rate < 0.55);
  CHECK_THROWS_AS(run_analytic_success_rate(SamplerConfig{5, {}, 1, 10}),
                  std::domain_error);
}

TEST_CASE("conjectured pattern permutations") {
  CHECK(conjectured_pattern(4) == cls({1, 3, 2, 4}));
  CHECK(conjectured_pattern(5) == cls({1, 4, 3, 2, 5}));
  CHECK(conjectured_pattern(6) == cls({1, 5, 3, 4, 2, 6}));
  CHECK(conjectured_pattern(7) == cls({1, 6, 3, 4, 5, 2, 7}));
  CHECK(conjectured_pattern(8) == cls({1, 7, 3, 5, 4, 6, 2, 8}));
}

TEST_CASE("conjecture scan marks the modal pattern at n=6") {
  const auto report = run_conjecture_scan(SamplerConfig{6, {}, 1006, 2000});
  REQUIRE(report.pattern.has_value());
  CHECK(*report.pattern == cls({1, 5, 3, 4, 2, 6}));
  REQUIRE(report.pattern_is_modal.has_value());
  CHECK(*report.pattern_is_modal);
}

TEST_CASE("conjecture scan runs at the largest supported cycle length") {
  const auto report = run_conjecture_scan(SamplerConfig{8, {}, 1007, 500});
  REQUIRE(report.pattern.has_value());
  CHECK(*report.pattern == cls({1, 7, 3, 5, 4, 6, 2, 8}));
  std::int64_t total = report.ties;
  for (const auto& [c, count] : report.minimizer_counts) total += count;
  CHECK(total == 500);
  CHECK(report.distinct_minimizers.size() > 10);
  CHECK_THROWS_AS(run_conjecture_scan(SamplerConfig{9, {}, 1, 10}),
                  std::domain_error);
}

TEST_CASE("success-rate reports are identical for any thread count") {
  const SamplerConfig cfg{6, {}, 1008, 1500};
  ExperimentReport solo, trio;
  {
    ThreadCapGuard guard("1");
    solo = run_analytic_success_rate(cfg);
  }
  {
    ThreadCapGuard guard("3");
    trio = run_analytic_success_rate(cfg);
  }
  CHECK(solo.analytic_success == trio.analytic_success);
  CHECK(solo.analytic_attempts == trio.analytic_attempts);
  CHECK(solo.minimizer_counts == trio.minimizer_counts);
}

TEST_CASE("reference tables reproduce") {
  const PaperVerification v = verify_paper_tables(2026, 200);
  REQUIRE(v.cells.size() == 30);
  REQUIRE(v.eliminations.size() == 5);
  for (const auto& c : v.cells) {
    INFO("block ", c.block, " ", c.cell, " expected ", c.expected, " actual ",
         c.actual);
    CHECK(c.pass);
  }
  for (const auto& e : v.eliminations) {
    INFO(e.label);
    CHECK(e.pass);
    CHECK(e.failures == 0);
  }
  CHECK(v.all_pass());

  // spot-check the first block's first row
  const auto& row = v.cells[2];
  CHECK(row.cell == "row1");
  CHECK(row.expected == doctest::Approx(52.464));
  CHECK(row.actual == doctest::Approx(52.4635).epsilon(1e-4));
  CHECK(row.sign_expected_positive);
}
