#include "tropt/scheduling.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tropt {
namespace {

std::map<std::string, int> index_activities(const ProjectSpec& spec) {
  if (spec.activities.empty()) {
    throw std::invalid_argument("project has no activities");
  }
  std::map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(spec.activities.size()); ++i) {
    if (!index.emplace(spec.activities[i], i).second) {
      throw std::invalid_argument("duplicate activity name: " +
                                  spec.activities[i]);
    }
  }
  return index;
}

int lookup(const std::map<std::string, int>& index, const std::string& name) {
  const auto it = index.find(name);
  if (it == index.end()) {
    throw std::invalid_argument("unknown activity name: " + name);
  }
  return it->second;
}

}  // namespace

ProjectMatrices build_matrices(const ProjectSpec& spec) {
  const auto index = index_activities(spec);
  const int n = static_cast<int>(spec.activities.size());
  const SemifieldId sf = SemifieldId::MaxPlus;

  ProjectMatrices m{Mat(sf, n, n), Mat(sf, n, n), Mat(sf, n, 1)};
  for (const auto& [key, lag] : spec.sf_lags) {
    m.A.set(lookup(index, key.first), lookup(index, key.second),
            Scalar::finite(sf, lag));
  }
  for (const auto& [key, lag] : spec.ss_lags) {
    m.C.set(lookup(index, key.first), lookup(index, key.second),
            Scalar::finite(sf, lag));
  }
  for (const auto& [name, t] : spec.early_starts) {
    m.g.set(lookup(index, name), 0, Scalar::finite(sf, t));
  }
  return m;
}

ScheduleOutcome schedule(const ProjectSpec& spec) {
  const ProjectMatrices m = build_matrices(spec);
  const int n = m.A.rows();

  const MinimizeOutcome opt = minimize({m.A, m.C, m.g});
  switch (opt.status) {
    case OptStatus::Infeasible:
      return {ScheduleStatus::Infeasible, std::nullopt};
    case OptStatus::Degenerate:
      return {ScheduleStatus::Degenerate, std::nullopt};
    case OptStatus::Ok:
      break;
  }
  const OptResult& r = *opt.result;

  ScheduleResult out;
  out.activities = spec.activities;

  // Anchor any free start at the project epoch so the schedule is concrete.
  Mat bound = m.g;
  for (int i = 0; i < n; ++i) {
    if (bound.at(i, 0).is_null()) {
      bound.set(i, 0, Scalar::one(SemifieldId::MaxPlus));
      out.anchored.push_back(spec.activities[i]);
    }
  }
  const Mat x0 = r.minimal ? *r.minimal : mul(r.solutions.generator, bound);
  const Mat y = mul(m.A, x0);

  out.max_flow_time = r.theta.value();
  for (int i = 0; i < n; ++i) {
    out.initiation.push_back(x0.at(i, 0).value());
    if (y.at(i, 0).is_null()) {
      out.completion.emplace_back(std::nullopt);
      out.flow_times.emplace_back(std::nullopt);
    } else {
      out.completion.emplace_back(y.at(i, 0).value());
      out.flow_times.emplace_back(y.at(i, 0).value() - x0.at(i, 0).value());
    }
  }
  return {ScheduleStatus::Ok, std::move(out)};
}

ValidationReport validate_schedule(
    const ProjectSpec& spec, const std::map<std::string, double>& initiation) {
  const auto index = index_activities(spec);
  const int n = static_cast<int>(spec.activities.size());

  std::vector<double> x(n);
  std::set<int> provided;
  for (const auto& [name, t] : initiation) {
    const int i = lookup(index, name);
    x[i] = t;
    provided.insert(i);
  }
  if (static_cast<int>(provided.size()) != n) {
    throw std::invalid_argument("initiation times must cover every activity");
  }

  ValidationReport report;
  for (const auto& [key, lag] : spec.ss_lags) {
    const int i = lookup(index, key.first);
    const int j = lookup(index, key.second);
    if (x[j] + lag > x[i] + kDefaultTol) {
      std::ostringstream msg;
      msg << "start-to-start lag violated: start(" << key.second << ") + "
          << lag << " > start(" << key.first << ")";
      report.violations.push_back(msg.str());
    }
  }
  for (const auto& [name, t] : spec.early_starts) {
    const int i = lookup(index, name);
    if (x[i] + kDefaultTol < t) {
      std::ostringstream msg;
      msg << "early start violated: start(" << name << ") = " << x[i] << " < "
          << t;
      report.violations.push_back(msg.str());
    }
  }

  bool any_flow = false;
  for (int i = 0; i < n; ++i) {
    std::optional<double> yi;
    for (int j = 0; j < n; ++j) {
      const auto it = spec.sf_lags.find({spec.activities[i], spec.activities[j]});
      if (it == spec.sf_lags.end()) continue;
      const double t = x[j] + it->second;
      if (!yi || t > *yi) yi = t;
    }
    report.completion.push_back(yi);
    if (yi) {
      const double flow = *yi - x[i];
      report.max_flow_time =
          any_flow ? std::max(report.max_flow_time, flow) : flow;
      any_flow = true;
    }
  }
  return report;
}

}  // namespace tropt
