#pragma once

#include <optional>
#include <string>

#include "tropt/scheduling.hpp"

namespace tropt {

/// Representation-level cells: std::nullopt encodes the JSON null that
/// stands for the semifield null element.
using CellVec = std::vector<std::optional<double>>;
using CellGrid = std::vector<std::vector<std::optional<double>>>;

CellVec cells_of_column(const Mat& column);
CellGrid cells_of(const Mat& m);

/// Problem input: a semifield tag, the objective/inequality matrix A and
/// optional constraint matrix C, lower bound g, and inequality bound b.
struct ProblemFile {
  SemifieldId semifield;
  Mat A;
  std::optional<Mat> C;
  std::optional<Mat> g;
  std::optional<Mat> b;
};

/// Parses and validates a problem document; `semifield_override` replaces
/// the file's tag before any value is interpreted. Malformed documents
/// raise std::runtime_error with a diagnostic.
ProblemFile parse_problem(
    const std::string& json_text,
    const std::optional<std::string>& semifield_override = std::nullopt);

/// Solver output: status plus, for "ok", the attained minimum (null when
/// the command has none), the generator, the bound on the free parameter,
/// and the minimal solution when one exists.
struct ResultFile {
  std::string status;  // "ok" | "infeasible" | "degenerate"
  bool theta_present = false;
  std::optional<double> theta;  // nullopt serialises as JSON null
  std::optional<CellGrid> generator;
  std::optional<CellVec> lower;
  std::optional<CellVec> minimal;

  bool operator==(const ResultFile&) const = default;
};

/// Byte-stable serialisation: fixed key order, no locale effects, numbers
/// in shortest round-trip decimal form.
std::string emit_result(const ResultFile& r);
ResultFile parse_result(const std::string& json_text);

ProjectSpec parse_project(const std::string& json_text);
std::string emit_schedule_outcome(const ScheduleOutcome& outcome);

/// Shortest decimal string that parses back to exactly v.
std::string format_number(double v);

}  // namespace tropt
