#include "tropt/commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "tropt/optimizer.hpp"
#include "tropt/plot.hpp"
#include "tropt/problem_io.hpp"

namespace tropt {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
}

OptProblem problem_of(const ProblemFile& pf) {
  const int n = pf.A.rows();
  return OptProblem{
      pf.A, pf.C ? *pf.C : Mat::zeros(pf.semifield, n, n),
      pf.g ? *pf.g : Mat(pf.semifield, n, 1)};
}

int report_error(const std::exception& e) {
  std::cerr << "error: " << e.what() << '\n';
  return 1;
}

}  // namespace

int cmd_minimize(const CommandOptions& opt) {
  try {
    const ProblemFile pf =
        parse_problem(read_file(opt.input_path), opt.semifield_override);
    const OptProblem p = problem_of(pf);
    const MinimizeOutcome out = minimize(p);

    ResultFile rf;
    int code = 0;
    switch (out.status) {
      case OptStatus::Ok: {
        const OptResult& r = *out.result;
        rf.status = "ok";
        rf.theta_present = true;
        rf.theta = r.theta.value();
        rf.generator = cells_of(r.solutions.generator);
        rf.lower = cells_of_column(r.solutions.lower);
        if (r.minimal) rf.minimal = cells_of_column(*r.minimal);
        break;
      }
      case OptStatus::Infeasible:
        rf.status = "infeasible";
        code = 2;
        break;
      case OptStatus::Degenerate:
        rf.status = "degenerate";
        code = 3;
        break;
    }
    write_file(opt.output_path, emit_result(rf));

    if (opt.oracle) {
      const Scalar bf = brute_force_min(p, opt.grid_radius, opt.grid_step);
      std::cout << "theta: "
                << (out.ok() ? format_number(out.result->theta.value())
                             : rf.status)
                << "\noracle-min: "
                << (bf.is_null() ? "null" : format_number(bf.value())) << '\n';
    }
    return code;
  } catch (const std::exception& e) {
    return report_error(e);
  }
}

int cmd_inequality(const CommandOptions& opt) {
  try {
    const ProblemFile pf =
        parse_problem(read_file(opt.input_path), opt.semifield_override);
    if (!pf.b) {
      throw std::runtime_error("inequality mode needs the bound vector b");
    }
    const std::optional<SolutionSet> ss = solve_inequality(pf.A, *pf.b);

    ResultFile rf;
    int code = 0;
    if (ss) {
      rf.status = "ok";
      rf.theta_present = true;  // serialised as null: no minimum involved
      rf.generator = cells_of(ss->generator);
      rf.lower = cells_of_column(ss->lower);
      if (is_regular(ss->lower)) {
        rf.minimal = cells_of_column(minimal_solution(*ss));
      }
    } else {
      rf.status = "infeasible";
      code = 2;
    }
    write_file(opt.output_path, emit_result(rf));
    return code;
  } catch (const std::exception& e) {
    return report_error(e);
  }
}

int cmd_schedule(const CommandOptions& opt) {
  try {
    const ProjectSpec spec = parse_project(read_file(opt.input_path));
    const ScheduleOutcome out = schedule(spec);
    write_file(opt.output_path, emit_schedule_outcome(out));
    switch (out.status) {
      case ScheduleStatus::Ok:
        return 0;
      case ScheduleStatus::Infeasible:
        return 2;
      case ScheduleStatus::Degenerate:
        return 3;
    }
    return 0;
  } catch (const std::exception& e) {
    return report_error(e);
  }
}

int cmd_plot(const CommandOptions& opt) {
  try {
    const ProblemFile pf =
        parse_problem(read_file(opt.input_path), opt.semifield_override);
    if (pf.A.rows() != 2) {
      throw std::runtime_error("plotting is limited to 2x2 problems");
    }
    if (pf.semifield != SemifieldId::MaxPlus) {
      throw std::runtime_error("plotting is limited to max-plus problems");
    }

    PlotInput input{pf.A, std::nullopt, Mat::identity(pf.semifield, 2),
                    Mat(pf.semifield, 2, 1), std::nullopt};
    if (pf.b) {
      // inequality mode: the solution region is the feasible region
      const std::optional<SolutionSet> ss = solve_inequality(pf.A, *pf.b);
      if (!ss) {
        std::cerr << "error: no regular solutions to draw\n";
        return 2;
      }
      input.solution_generator = ss->generator;
      input.lower = ss->lower;
      if (is_regular(ss->lower)) input.minimal = minimal_solution(*ss);
    } else {
      const OptProblem p = problem_of(pf);
      const MinimizeOutcome out = minimize(p);
      if (out.status == OptStatus::Infeasible) {
        std::cerr << "error: constraints admit no regular vector\n";
        return 2;
      }
      if (out.status == OptStatus::Degenerate) {
        std::cerr << "error: objective matrix has a null spectral radius\n";
        return 3;
      }
      input.solution_generator = out.result->solutions.generator;
      input.lower = p.g;
      input.minimal = out.result->minimal;
      input.constraint_generator = star(p.C);
    }
    write_file(opt.output_path, render_svg(input));
    return 0;
  } catch (const std::exception& e) {
    return report_error(e);
  }
}

}  // namespace tropt
