#pragma once

#include <cstddef>
#include <optional>

#include "tropt/inequality.hpp"

namespace tropt {

/// Minimise x~ A x subject to C x <= x and g <= x, over regular vectors x.
/// C may be the zero matrix; null entries of g leave components unbounded.
struct OptProblem {
  Mat A;
  Mat C;
  Mat g;
};

/// The attained minimum theta, the full set of minimisers, and its least
/// member when the lower bound is regular.
struct OptResult {
  Scalar theta;
  SolutionSet solutions;
  std::optional<Mat> minimal;
};

enum class OptStatus {
  Ok,
  Infeasible,  // tr_sum(C) > one: the constraint set has no regular vector
  Degenerate,  // spectral radius of A is null: minimum value not defined here
};

struct MinimizeOutcome {
  OptStatus status;
  std::optional<OptResult> result;  // engaged iff status == Ok

  bool ok() const { return status == OptStatus::Ok; }
};

/// The minimum value
///
///   theta = lambda(A) + sum_{k=1}^{n-1} sum_{1 <= i_1+...+i_k <= n-k}
///             tr^{1/k}(A C^{i_1} ... A C^{i_k}),
///
/// evaluated by dynamic programming over composition sums:
/// P(k, s) aggregates all products with k factors of A and C-exponents
/// summing to s, via P(k, s) = P(k-1, s) A + P(k, s-1) C. Two matrix
/// products per cell, O(n^2) products overall; equals the literal
/// composition enumeration by distributivity.
Scalar compute_theta(const Mat& a, const Mat& c);

MinimizeOutcome minimize(const OptProblem& p);

/// Special case C = 0: minimum is the spectral radius, generator is
/// star(lambda^{-1} A).
MinimizeOutcome minimize_lower_bounded(const Mat& a, const Mat& g);

/// Special case g all-null: same theta and generator, no minimal element.
MinimizeOutcome minimize_linear_constrained(const Mat& a, const Mat& c);

/// x~ A x for a regular column vector x, as a scalar.
Scalar objective(const Mat& a, const Mat& x);

/// Exhaustive lattice search over [-radius, radius]^n (per coordinate
/// anchored at the finite components of g), filtering by C x <= x and
/// x >= g and minimising the objective in the semifield order. Returns
/// null when no lattice point is feasible. Restricted to n <= 3 and the
/// plus-based semifields; deliberately avoids the closed-form machinery
/// so it can stand as an independent check of it.
Scalar brute_force_min(const OptProblem& p, double grid_radius,
                       double grid_step, std::size_t max_points = 50'000'000);

}  // namespace tropt
