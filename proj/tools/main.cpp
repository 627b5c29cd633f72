#include <string>

#include "CLI11.hpp"
#include "tropt/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "tropt: solvers over idempotent semifields -- linear inequalities, "
      "constrained minimisation, project scheduling, and 2-D plots"};
  app.require_subcommand(1);

  tropt::CommandOptions opt;
  std::string semifield;

  const auto add_io = [&](CLI::App* sub, bool with_semifield = true) {
    sub->add_option("--input", opt.input_path, "input JSON file")->required();
    sub->add_option("--output", opt.output_path, "output file")->required();
    if (with_semifield) {
      sub->add_option("--semifield", semifield,
                      "override the file's semifield tag (max-plus, min-plus, "
                      "max-times, min-times)");
    }
  };

  CLI::App* minimize = app.add_subcommand(
      "minimize", "minimise x~Ax subject to Cx <= x and g <= x");
  add_io(minimize);
  minimize->add_flag("--oracle", opt.oracle,
                     "also run the grid-search oracle and print both values");
  minimize->add_option("--grid-radius", opt.grid_radius,
                       "half-width of the oracle lattice");
  minimize->add_option("--grid-step", opt.grid_step, "oracle lattice step");

  CLI::App* inequality = app.add_subcommand(
      "inequality", "solve Ax + b <= x for all regular vectors x");
  add_io(inequality);

  CLI::App* schedule = app.add_subcommand(
      "schedule", "minimum-flow-time schedule for a project description");
  add_io(schedule, false);

  CLI::App* plot = app.add_subcommand(
      "plot", "render a 2-D problem and its solution set as SVG");
  add_io(plot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  if (!semifield.empty()) opt.semifield_override = semifield;

  if (minimize->parsed()) return tropt::cmd_minimize(opt);
  if (inequality->parsed()) return tropt::cmd_inequality(opt);
  if (schedule->parsed()) return tropt::cmd_schedule(opt);
  if (plot->parsed()) return tropt::cmd_plot(opt);
  return 1;
}
