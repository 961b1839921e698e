#include "cyclomin/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace cyclomin {

std::string to_string(Relation r) {
  switch (r) {
    case Relation::SigmaStrictlySmaller: return "sigma_strictly_smaller";
    case Relation::MuStrictlySmaller: return "mu_strictly_smaller";
    case Relation::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::string to_string(Rule r) {
  switch (r) {
    case Rule::SameOddSet: return "same_odd_set";
    case Rule::DeltaTest: return "delta_test";
    case Rule::GershgorinTest: return "gershgorin_test";
  }
  return "delta_test";
}

std::string to_string(RadiusMethod m) {
  return m == RadiusMethod::ClosedFormCubic ? "closed_form_cubic"
                                            : "power_iteration";
}

std::string to_string(WeightDistribution d) {
  return d == WeightDistribution::UniformSorted ? "uniform_sorted"
                                                : "log_uniform_sorted";
}

json to_json(const Permutation& p) { return json(p.images()); }

json to_json(const PermClass& p) { return json(p.images()); }

json to_json(const WeightSequence& w) { return json(w.values()); }

json to_json(const CubicPoly& q) {
  return json{{"c2", q.c2}, {"c1", q.c1}, {"c0", q.c0}};
}

json to_json(const RadiusResult& r) {
  return json{{"w", r.w},
              {"t", r.t},
              {"method", to_string(r.method)},
              {"iterations", r.iterations},
              {"residual", r.residual}};
}

json to_json(const GershBounds& b) { return json{{"g", b.g}, {"G", b.G}}; }

json to_json(const ComparisonVerdict& v) {
  json j{{"relation", to_string(v.relation)},
         {"rule", to_string(v.rule)},
         {"alpha", v.stats.alpha},
         {"beta", v.stats.beta},
         {"delta", v.stats.delta_cap},
         {"x_m", v.stats.x_m},
         {"x_M", v.stats.x_M}};
  j["gamma"] = v.stats.gamma.has_value() ? json(*v.stats.gamma) : json(nullptr);
  if (v.bounds.has_value()) {
    j["g2"] = v.bounds->g * v.bounds->g;
    j["G2"] = v.bounds->G * v.bounds->G;
  }
  return j;
}

json to_json(const AnalyticOutcome& outcome) {
  json j{{"schema", kSchemaTag}};
  j["winner"] =
      outcome.winner.has_value() ? to_json(*outcome.winner) : json(nullptr);
  json survivors = json::array();
  for (const auto& s : outcome.survivors) survivors.push_back(to_json(s));
  j["survivors"] = survivors;
  json certs = json::array();
  for (const auto& c : outcome.certificates) {
    certs.push_back(json{{"sigma", to_json(c.sigma)},
                         {"mu", to_json(c.mu)},
                         {"verdict", to_json(c.verdict)}});
  }
  j["certificates"] = certs;
  return j;
}

std::vector<std::pair<PermClass, std::int64_t>> ordered_counts(
    const ExperimentReport& report) {
  std::vector<std::pair<PermClass, std::int64_t>> rows(
      report.minimizer_counts.begin(), report.minimizer_counts.end());
  if (report.config.n == 6) {
    const auto& canon = m6_set();
    auto rank = [&](const PermClass& c) {
      for (std::size_t i = 0; i < canon.size(); ++i) {
        if (canon[i] == c) return i;
      }
      return canon.size();
    };
    std::stable_sort(rows.begin(), rows.end(),
                     [&](const auto& a, const auto& b) {
                       const auto ra = rank(a.first), rb = rank(b.first);
                       if (ra != rb) return ra < rb;
                       return a.first < b.first;
                     });
  } else {
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second > b.second;
      return a.first < b.first;
    });
  }
  return rows;
}

json to_json(const ExperimentReport& report) {
  json j{{"schema", kSchemaTag}};
  j["config"] = json{{"n", report.config.n},
                     {"distribution", to_string(report.config.distribution)},
                     {"seed", report.config.seed},
                     {"samples", report.config.samples}};
  const std::int64_t counted = report.config.samples - report.ties;
  json counts = json::array();
  for (const auto& [cls, count] : ordered_counts(report)) {
    counts.push_back(json{
        {"perm", to_json(cls)},
        {"count", count},
        {"frequency",
         counted > 0 ? static_cast<double>(count) / static_cast<double>(counted)
                     : 0.0}});
  }
  j["counts"] = counts;
  j["ties"] = report.ties;
  j["analytic_success"] = report.analytic_success;
  j["analytic_attempts"] = report.analytic_attempts;
  j["distinct_minimizers"] = report.distinct_minimizers.size();
  j["pattern"] =
      report.pattern.has_value() ? to_json(*report.pattern) : json(nullptr);
  if (report.pattern_is_modal.has_value()) {
    j["pattern_is_modal"] = *report.pattern_is_modal;
  }
  j["wall_notes"] = report.wall_notes;
  return j;
}

json to_json(const PaperVerification& verification) {
  json j{{"schema", kSchemaTag}};
  json cells = json::array();
  for (const auto& c : verification.cells) {
    json cell{{"block", c.block},   {"cell", c.cell},
              {"expected", c.expected}, {"actual", c.actual},
              {"tolerance", c.tolerance}, {"pass", c.pass}};
    if (!c.detail.empty()) cell["detail"] = c.detail;
    if (c.cell != "g2" && c.cell != "G2") {
      cell["alpha_sign_expected"] = c.sign_expected_positive ? "+" : "-";
      cell["alpha_sign_matches"] = c.sign_matches;
    }
    cells.push_back(cell);
  }
  j["cells"] = cells;
  json elims = json::array();
  for (const auto& e : verification.eliminations) {
    elims.push_back(json{{"label", e.label},
                         {"sigma", to_json(e.sigma)},
                         {"mu", to_json(e.mu)},
                         {"rule", to_string(e.rule)},
                         {"trials", e.trials},
                         {"failures", e.failures},
                         {"pass", e.pass}});
  }
  j["eliminations"] = elims;
  j["all_pass"] = verification.all_pass();
  return j;
}

Permutation permutation_from_json(const json& j) {
  return Permutation(j.get<std::vector<int>>());
}

WeightSequence weights_from_json(const json& j) {
  return WeightSequence(j.get<std::vector<double>>());
}

std::string perm_csv(const Permutation& p) {
  std::ostringstream out;
  for (std::size_t i = 0; i < p.images().size(); ++i) {
    if (i) out << ',';
    out << p.images()[i];
  }
  return out.str();
}

std::string perm_csv(const PermClass& p) { return perm_csv(p.rep()); }

std::string weights_csv(const WeightSequence& w) {
  std::ostringstream out;
  char buf[40];
  for (std::size_t i = 0; i < w.values().size(); ++i) {
    if (i) out << ',';
    std::snprintf(buf, sizeof(buf), "%.17g", w.values()[i]);
    out << buf;
  }
  return out.str();
}

std::string report_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out << "perm,count,frequency\n";
  const std::int64_t counted = report.config.samples - report.ties;
  for (const auto& [cls, count] : ordered_counts(report)) {
    const double freq =
        counted > 0 ? static_cast<double>(count) / static_cast<double>(counted)
                    : 0.0;
    out << '"' << perm_csv(cls) << "\"," << count << ',' << freq << '\n';
  }
  return out.str();
}

}  // namespace cyclomin
