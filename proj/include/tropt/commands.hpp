#pragma once

#include <optional>
#include <string>

namespace tropt {

struct CommandOptions {
  std::string input_path;
  std::string output_path;
  std::optional<std::string> semifield_override;
  double grid_radius = 20.0;
  double grid_step = 0.5;
  bool oracle = false;
};

// Exit codes across all commands: 0 solved, 1 malformed input,
// 2 infeasible, 3 degenerate.
int cmd_minimize(const CommandOptions& opt);
int cmd_inequality(const CommandOptions& opt);
int cmd_schedule(const CommandOptions& opt);
int cmd_plot(const CommandOptions& opt);

}  // namespace tropt
