#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropt/optimizer.hpp"

namespace tropt {

using LagMap = std::map<std::pair<std::string, std::string>, double>;

/// A project: named activities with Start-to-Finish lags a_ij (initiation
/// of j to completion of i), Start-to-Start lags c_ij (initiation of j to
/// initiation of i) and optional earliest initiation times g_i. Times are
/// plain time units; absent lags impose no constraint.
struct ProjectSpec {
  std::vector<std::string> activities;
  LagMap sf_lags;
  LagMap ss_lags;
  std::map<std::string, double> early_starts;
};

struct ProjectMatrices {
  Mat A;  // Start-to-Finish lags
  Mat C;  // Start-to-Start lags
  Mat g;  // earliest initiations, null where unconstrained
};

/// Max-plus matrices in the order of the activities list; absent lags and
/// bounds become null entries. Rejects duplicate or unknown names.
ProjectMatrices build_matrices(const ProjectSpec& spec);

/// Minimum-max-flow-time schedule. Activities whose completion is not
/// pinned by any Start-to-Finish lag have no defined completion or flow
/// time. When some early starts are absent the schedule is anchored by
/// defaulting them to time 0; the affected activities are listed in
/// `anchored`.
struct ScheduleResult {
  std::vector<std::string> activities;
  std::vector<double> initiation;
  std::vector<std::optional<double>> completion;
  std::vector<std::optional<double>> flow_times;
  double max_flow_time = 0.0;  // the attained minimum
  std::vector<std::string> anchored;
};

enum class ScheduleStatus {
  Ok,
  Infeasible,  // contradictory Start-to-Start cycles
  Degenerate,  // no activity has a defined completion chain
};

struct ScheduleOutcome {
  ScheduleStatus status;
  std::optional<ScheduleResult> result;

  bool ok() const { return status == ScheduleStatus::Ok; }
};

ScheduleOutcome schedule(const ProjectSpec& spec);

/// Substitutes the given initiation times into the project constraints.
struct ValidationReport {
  std::vector<std::string> violations;
  std::vector<std::optional<double>> completion;
  double max_flow_time = 0.0;  // achieved by these times
};

ValidationReport validate_schedule(
    const ProjectSpec& spec, const std::map<std::string, double>& initiation);

}  // namespace tropt
