#pragma once

#include <optional>
#include <string>

#include "tropt/matrix.hpp"

namespace tropt {

/// Schematic 2-D picture of a max-plus problem: the column vectors of A
/// and of the solution generator, the constraint region (hatched), the
/// solution region, and the minimal solution marker. World coordinates
/// are conventional reals; every drawn feature also carries its world
/// coordinates as data attributes.
struct PlotInput {
  Mat A;                                    // 2 x 2
  std::optional<Mat> constraint_generator;  // region {C* u : u >= lower}
  Mat solution_generator;                   // region {S u : u >= lower}
  Mat lower;                                // 2 x 1, entries may be null
  std::optional<Mat> minimal;
};

/// SVG 1.1 document on a fixed 600 x 600 viewport; the world-to-screen
/// transform is linear and includes every finite feature point with a 10%
/// margin. Output is deterministic for identical inputs.
std::string render_svg(const PlotInput& in);

}  // namespace tropt
