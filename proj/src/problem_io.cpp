#include "tropt/problem_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace tropt {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) {
  throw std::runtime_error(msg);
}

std::optional<double> cell_from(const json& j, const char* field) {
  if (j.is_null()) return std::nullopt;
  if (!j.is_number()) fail(std::string(field) + " entries must be numbers or null");
  return j.get<double>();
}

CellGrid grid_from(const json& j, const char* field) {
  if (!j.is_array() || j.empty()) fail(std::string(field) + " must be a non-empty array");
  CellGrid grid;
  for (const json& row : j) {
    if (!row.is_array() || row.empty()) {
      fail(std::string(field) + " rows must be non-empty arrays");
    }
    CellVec cells;
    for (const json& cell : row) cells.push_back(cell_from(cell, field));
    if (!grid.empty() && cells.size() != grid.front().size()) {
      fail(std::string(field) + " must be rectangular");
    }
    grid.push_back(std::move(cells));
  }
  return grid;
}

CellVec vec_from(const json& j, const char* field) {
  if (!j.is_array() || j.empty()) fail(std::string(field) + " must be a non-empty array");
  CellVec cells;
  for (const json& cell : j) cells.push_back(cell_from(cell, field));
  return cells;
}

Mat mat_from_cells(SemifieldId sf, const CellGrid& grid, const char* field) {
  try {
    return Mat::from_values(sf, grid);
  } catch (const std::exception& e) {
    fail(std::string(field) + ": " + e.what());
  }
}

Mat column_from_cells(SemifieldId sf, const CellVec& cells, const char* field) {
  try {
    return Mat::column_of(sf, cells);
  } catch (const std::exception& e) {
    fail(std::string(field) + ": " + e.what());
  }
}

void append_escaped(std::string& out, const std::string& s) {
  out += '"';
  for (const char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

void append_cell(std::string& out, const std::optional<double>& cell) {
  out += cell ? format_number(*cell) : "null";
}

void append_vec(std::string& out, const CellVec& v) {
  out += '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    append_cell(out, v[i]);
  }
  out += ']';
}

void append_grid(std::string& out, const CellGrid& g) {
  out += '[';
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) out += ',';
    append_vec(out, g[i]);
  }
  out += ']';
}

}  // namespace

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of negative zero
  char buf[64];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

CellVec cells_of_column(const Mat& column) {
  CellVec cells;
  for (int i = 0; i < column.rows(); ++i) {
    const Scalar& s = column.at(i, 0);
    cells.push_back(s.is_null() ? std::nullopt
                                : std::optional<double>(s.value()));
  }
  return cells;
}

CellGrid cells_of(const Mat& m) {
  CellGrid grid;
  for (int i = 0; i < m.rows(); ++i) {
    CellVec row;
    for (int j = 0; j < m.cols(); ++j) {
      const Scalar& s = m.at(i, j);
      row.push_back(s.is_null() ? std::nullopt
                                : std::optional<double>(s.value()));
    }
    grid.push_back(std::move(row));
  }
  return grid;
}

ProblemFile parse_problem(const std::string& json_text,
                          const std::optional<std::string>& semifield_override) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("problem document must be a JSON object");

  std::string tag = "max-plus";
  if (doc.contains("semifield")) {
    if (!doc["semifield"].is_string()) fail("semifield must be a string tag");
    tag = doc["semifield"].get<std::string>();
  }
  if (semifield_override) tag = *semifield_override;
  SemifieldId sf;
  try {
    sf = semifield_from_tag(tag);
  } catch (const std::exception& e) {
    fail(e.what());
  }

  if (!doc.contains("A")) fail("problem document is missing the matrix A");
  const CellGrid a_cells = grid_from(doc["A"], "A");
  if (a_cells.size() != a_cells.front().size()) fail("A must be square");
  Mat a = mat_from_cells(sf, a_cells, "A");
  const std::size_t n = a_cells.size();

  ProblemFile out{sf, std::move(a), std::nullopt, std::nullopt, std::nullopt};
  if (doc.contains("C") && !doc["C"].is_null()) {
    const CellGrid c = grid_from(doc["C"], "C");
    if (c.size() != n || c.front().size() != n) {
      fail("C must match the order of A");
    }
    out.C = mat_from_cells(sf, c, "C");
  }
  if (doc.contains("g") && !doc["g"].is_null()) {
    const CellVec g = vec_from(doc["g"], "g");
    if (g.size() != n) fail("g must have one entry per row of A");
    out.g = column_from_cells(sf, g, "g");
  }
  if (doc.contains("b") && !doc["b"].is_null()) {
    const CellVec b = vec_from(doc["b"], "b");
    if (b.size() != n) fail("b must have one entry per row of A");
    out.b = column_from_cells(sf, b, "b");
  }
  return out;
}

std::string emit_result(const ResultFile& r) {
  std::string out = "{\"status\":";
  append_escaped(out, r.status);
  if (r.theta_present) {
    out += ",\"theta\":";
    append_cell(out, r.theta);
  }
  if (r.generator) {
    out += ",\"generator\":";
    append_grid(out, *r.generator);
  }
  if (r.lower) {
    out += ",\"lower\":";
    append_vec(out, *r.lower);
  }
  if (r.minimal) {
    out += ",\"minimal\":";
    append_vec(out, *r.minimal);
  }
  out += "}\n";
  return out;
}

ResultFile parse_result(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("status") ||
      !doc["status"].is_string()) {
    fail("result document must carry a status string");
  }
  ResultFile r;
  r.status = doc["status"].get<std::string>();
  if (doc.contains("theta")) {
    r.theta_present = true;
    r.theta = cell_from(doc["theta"], "theta");
  }
  if (doc.contains("generator")) {
    r.generator = grid_from(doc["generator"], "generator");
  }
  if (doc.contains("lower")) r.lower = vec_from(doc["lower"], "lower");
  if (doc.contains("minimal")) r.minimal = vec_from(doc["minimal"], "minimal");
  return r;
}

ProjectSpec parse_project(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("project document must be a JSON object");
  if (!doc.contains("activities") || !doc["activities"].is_array() ||
      doc["activities"].empty()) {
    fail("project document needs a non-empty activities array");
  }

  ProjectSpec spec;
  for (const json& name : doc["activities"]) {
    if (!name.is_string()) fail("activity names must be strings");
    spec.activities.push_back(name.get<std::string>());
  }

  const auto read_lags = [&](const char* field, LagMap& into) {
    if (!doc.contains(field) || doc[field].is_null()) return;
    if (!doc[field].is_object()) {
      fail(std::string(field) + " must be an object keyed by activity");
    }
    for (const auto& [from, row] : doc[field].items()) {
      if (!row.is_object()) {
        fail(std::string(field) + " entries must be objects keyed by activity");
      }
      for (const auto& [to, lag] : row.items()) {
        if (!lag.is_number()) fail(std::string(field) + " lags must be numbers");
        into[{from, to}] = lag.get<double>();
      }
    }
  };
  read_lags("sfLags", spec.sf_lags);
  read_lags("ssLags", spec.ss_lags);

  if (doc.contains("earlyStarts") && !doc["earlyStarts"].is_null()) {
    if (!doc["earlyStarts"].is_object()) {
      fail("earlyStarts must be an object keyed by activity");
    }
    for (const auto& [name, t] : doc["earlyStarts"].items()) {
      if (!t.is_number()) fail("earlyStarts values must be numbers");
      spec.early_starts[name] = t.get<double>();
    }
  }
  return spec;
}

std::string emit_schedule_outcome(const ScheduleOutcome& outcome) {
  std::string out = "{\"status\":";
  switch (outcome.status) {
    case ScheduleStatus::Infeasible:
      out += "\"infeasible\"}\n";
      return out;
    case ScheduleStatus::Degenerate:
      out += "\"degenerate\"}\n";
      return out;
    case ScheduleStatus::Ok:
      break;
  }
  const ScheduleResult& r = *outcome.result;
  out += "\"ok\",\"maxFlowTime\":";
  out += format_number(r.max_flow_time);

  const auto per_activity = [&](const char* key, const auto& get) {
    out += ",\"";
    out += key;
    out += "\":{";
    for (std::size_t i = 0; i < r.activities.size(); ++i) {
      if (i) out += ',';
      append_escaped(out, r.activities[i]);
      out += ':';
      get(i);
    }
    out += '}';
  };
  per_activity("initiation",
               [&](std::size_t i) { out += format_number(r.initiation[i]); });
  per_activity("completion", [&](std::size_t i) {
    out += r.completion[i] ? format_number(*r.completion[i]) : "null";
  });
  per_activity("flowTimes", [&](std::size_t i) {
    out += r.flow_times[i] ? format_number(*r.flow_times[i]) : "null";
  });

  out += ",\"anchored\":[";
  for (std::size_t i = 0; i < r.anchored.size(); ++i) {
    if (i) out += ',';
    append_escaped(out, r.anchored[i]);
  }
  out += "]}\n";
  return out;
}

}  // namespace tropt
