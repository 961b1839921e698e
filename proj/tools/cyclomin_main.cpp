#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cyclomin/serialize.hpp"

namespace {

using namespace cyclomin;

std::vector<double> parse_weights(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t pos = 0;
    const double v = std::stod(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("bad weight: " + tok);
    out.push_back(v);
  }
  return out;
}

std::vector<int> parse_perm(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stoi(tok));
  }
  return out;
}

std::string format_w(double w) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", w);
  return buf;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open output file " + out_path);
    f << text;
  }
}

std::string report_text(const ExperimentReport& r) {
  std::ostringstream out;
  out << "n=" << r.config.n << " distribution="
      << to_string(r.config.distribution) << " seed=" << r.config.seed
      << " samples=" << r.config.samples << " ties=" << r.ties << '\n';
  const std::int64_t counted = r.config.samples - r.ties;
  for (const auto& [cls, count] : ordered_counts(r)) {
    const double pct =
        counted > 0 ? 100.0 * static_cast<double>(count) / counted : 0.0;
    char line[160];
    std::snprintf(line, sizeof(line), "%-24s %12lld  %7.3f%%\n",
                  perm_csv(cls).c_str(), static_cast<long long>(count), pct);
    out << line;
  }
  out << "distinct minimizers: " << r.distinct_minimizers.size() << '\n';
  if (r.analytic_attempts > 0) {
    out << "analytic: " << r.analytic_success << "/" << r.analytic_attempts
        << " conclusive and correct ("
        << format_w(100.0 * static_cast<double>(r.analytic_success) /
                    static_cast<double>(r.analytic_attempts))
        << "%)\n";
  }
  if (r.pattern.has_value()) {
    out << "pattern " << perm_csv(*r.pattern) << " modal="
        << (r.pattern_is_modal.value_or(false) ? "yes" : "no") << '\n';
  }
  return out.str();
}

int run(int argc, char** argv) {
  CLI::App app{"weighted-cycle numerical radius minimization toolkit"};
  app.require_subcommand(1);

  std::string weights_csv, perm_csv_arg, output = "text", out_path,
              distribution = "uniform";
  int n = 6;
  std::uint64_t seed = 0;
  std::int64_t samples = 100000;

  auto add_output = [&](CLI::App* cmd, bool csv_allowed) {
    cmd->add_option("--output", output,
                    csv_allowed ? "json|csv|text" : "json|text")
        ->check(csv_allowed ? CLI::IsMember({"json", "csv", "text"})
                            : CLI::IsMember({"json", "text"}));
    cmd->add_option("--out", out_path, "write to file instead of stdout");
  };
  auto add_sampling = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "RNG seed (required, no wall-clock default)")
        ->required();
    cmd->add_option("--samples", samples, "sample count")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--distribution", distribution, "uniform|loguniform")
        ->check(CLI::IsMember({"uniform", "loguniform"}));
  };

  auto* cmd_radius = app.add_subcommand("radius", "numerical radius of one arrangement");
  cmd_radius->add_option("--weights", weights_csv)->required();
  cmd_radius->add_option("--perm", perm_csv_arg)->required();
  std::string method = "auto";
  cmd_radius->add_option("--method", method, "auto|closed|power")
      ->check(CLI::IsMember({"auto", "closed", "power"}));
  add_output(cmd_radius, false);

  auto* cmd_min = app.add_subcommand("minimize",
                                     "brute-force and certified analytic minimizer");
  cmd_min->add_option("--weights", weights_csv)->required();
  add_output(cmd_min, false);

  auto* cmd_enum = app.add_subcommand("enumerate", "quotient representatives");
  cmd_enum->add_option("--n", n)->required();
  add_output(cmd_enum, true);

  auto* cmd_census = app.add_subcommand("census", "minimizer frequency census");
  cmd_census->add_option("--n", n);
  add_sampling(cmd_census);
  add_output(cmd_census, true);

  auto* cmd_rate = app.add_subcommand("success-rate",
                                      "analytic pipeline success rate (n=6)");
  add_sampling(cmd_rate);
  add_output(cmd_rate, true);

  auto* cmd_conj = app.add_subcommand("conjecture", "pattern-permutation scan");
  cmd_conj->add_option("--n", n)->required();
  add_sampling(cmd_conj);
  add_output(cmd_conj, true);

  auto* cmd_verify = app.add_subcommand("verify-paper",
                                        "recompute the built-in reference tables");
  std::int64_t trials = 1000;
  std::uint64_t verify_seed = 2026;
  cmd_verify->add_option("--trials", trials, "random draws per elimination check")
      ->check(CLI::PositiveNumber);
  cmd_verify->add_option("--seed", verify_seed);
  add_output(cmd_verify, false);

  CLI11_PARSE(app, argc, argv);

  const auto dist = distribution == "loguniform"
                        ? WeightDistribution::LogUniformSorted
                        : WeightDistribution::UniformSorted;

  if (cmd_radius->parsed()) {
    const WeightSequence w(parse_weights(weights_csv));
    const PermClass cls = canonicalize(Permutation(parse_perm(perm_csv_arg)));
    RadiusResult r;
    if (method == "closed" || (method == "auto" && w.n() == 6)) {
      r = radius_closed_form(w, cls);
    } else {
      r = radius_power_iteration(w, cls);
    }
    if (output == "json") {
      json j{{"schema", kSchemaTag},
             {"weights", to_json(w)},
             {"perm", to_json(cls)},
             {"result", to_json(r)}};
      emit(j.dump(2), out_path);
    } else {
      std::ostringstream text;
      text << "class " << perm_csv(cls) << '\n'
           << "w = " << format_w(r.w) << "  (t = " << format_w(r.t)
           << ", method = " << to_string(r.method)
           << ", iterations = " << r.iterations
           << ", residual = " << format_w(r.residual) << ")\n";
      emit(text.str(), out_path);
    }
    return 0;
  }

  if (cmd_min->parsed()) {
    const WeightSequence w(parse_weights(weights_csv));
    const auto [brute_class, brute_radius] = brute_force_minimizer(w);
    const AnalyticOutcome outcome = analytic_minimizer(w);
    if (output == "json") {
      json j{{"schema", kSchemaTag},
             {"weights", to_json(w)},
             {"brute_force",
              json{{"perm", to_json(brute_class)}, {"radius", to_json(brute_radius)}}},
             {"analytic", to_json(outcome)}};
      emit(j.dump(2), out_path);
    } else {
      std::ostringstream text;
      text << "brute force:  " << perm_csv(brute_class)
           << "  w = " << format_w(brute_radius.w) << '\n';
      if (outcome.winner.has_value()) {
        text << "analytic:     " << perm_csv(*outcome.winner) << "  ("
             << outcome.certificates.size() << " certificates)\n";
      } else {
        text << "analytic:     inconclusive, survivors:";
        for (const auto& s : outcome.survivors) text << ' ' << perm_csv(s);
        text << '\n';
      }
      emit(text.str(), out_path);
    }
    return 0;
  }

  if (cmd_enum->parsed()) {
    const auto reps = enumerate_representatives(n);
    if (output == "json") {
      json arr = json::array();
      for (const auto& r : reps) arr.push_back(to_json(r));
      json j{{"schema", kSchemaTag}, {"n", n},
             {"count", reps.size()}, {"representatives", arr}};
      emit(j.dump(2), out_path);
    } else {
      std::ostringstream text;
      for (const auto& r : reps) text << perm_csv(r) << '\n';
      emit(text.str(), out_path);
    }
    return 0;
  }

  if (cmd_census->parsed() || cmd_rate->parsed() || cmd_conj->parsed()) {
    SamplerConfig cfg;
    cfg.n = cmd_rate->parsed() ? 6 : n;
    cfg.distribution = dist;
    cfg.seed = seed;
    cfg.samples = samples;
    ExperimentReport report;
    if (cmd_census->parsed()) {
      report = run_minimizer_census(cfg);
    } else if (cmd_rate->parsed()) {
      report = run_analytic_success_rate(cfg);
    } else {
      report = run_conjecture_scan(cfg);
    }
    if (output == "json") {
      emit(to_json(report).dump(2), out_path);
    } else if (output == "csv") {
      emit(report_csv(report), out_path);
    } else {
      emit(report_text(report), out_path);
    }
    return 0;
  }

  if (cmd_verify->parsed()) {
    const PaperVerification v = verify_paper_tables(verify_seed, trials);
    if (output == "json") {
      emit(to_json(v).dump(2), out_path);
    } else {
      std::ostringstream text;
      for (const auto& c : v.cells) {
        char line[200];
        std::snprintf(line, sizeof(line),
                      "%s block %d %-5s expected %12.3f  actual %12.6f%s%s\n",
                      c.pass ? "PASS" : "FAIL", c.block, c.cell.c_str(),
                      c.expected, c.actual,
                      c.detail.empty() ? "" : "  ", c.detail.c_str());
        text << line;
      }
      for (const auto& e : v.eliminations) {
        text << "CHECK " << e.label << ' ' << perm_csv(e.sigma) << " beats "
             << perm_csv(e.mu) << " by " << to_string(e.rule) << ": "
             << (e.trials - e.failures) << '/' << e.trials
             << (e.pass ? " ok" : " FAILED") << '\n';
      }
      text << (v.all_pass() ? "all reference values reproduced\n"
                            : "MISMATCH against reference values\n");
      emit(text.str(), out_path);
    }
    return v.all_pass() ? 0 : 4;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const cyclomin::WeightOrderError& e) {
    std::cerr << "invalid weights: " << e.what() << '\n';
    return 2;
  } catch (const cyclomin::WeightSignError& e) {
    std::cerr << "invalid weights: " << e.what() << '\n';
    return 2;
  } catch (const cyclomin::TieError& e) {
    std::cerr << "tie: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
