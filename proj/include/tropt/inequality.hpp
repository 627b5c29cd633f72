#pragma once

#include <optional>

#include "tropt/matrix.hpp"

namespace tropt {

/// Parametric family { generator * u : u regular, u >= lower } describing
/// every regular solution of A x + b <= x. The generator is a star matrix
/// (>= I entrywise and idempotent under multiplication). Null entries of
/// lower leave the corresponding component of u unbounded below, only
/// required regular.
struct SolutionSet {
  Mat generator;
  Mat lower;

  SemifieldId semifield() const { return generator.semifield(); }
};

/// Complete regular solution of A x + b <= x: the set { A* u : u >= b }
/// when tr_sum(A) <= one, and no regular solution otherwise (nullopt).
/// Ties at tr_sum(A) = one count as feasible within kDefaultTol.
std::optional<SolutionSet> solve_inequality(const Mat& a, const Mat& b);

/// generator * lower: the least member of the set, itself a member.
/// Throws std::domain_error when lower is not regular (unbounded below).
Mat minimal_solution(const SolutionSet& ss);

/// Membership by substitution: x regular and A x + b <= x entrywise.
bool verify_inequality(const Mat& a, const Mat& b, const Mat& x,
                       double tol = kDefaultTol);

/// generator * u for a regular u >= lower.
Mat sample(const SolutionSet& ss, const Mat& u);

/// Star computed through the normal-form decomposition A = D + T (block
/// diagonal D, strictly lower block-triangular T) as (D* T)* D*. Agrees
/// with star(A) whenever tr_sum(A) <= one; kept as an independent
/// verification path.
Mat star_via_normal_form(const Mat& a);

}  // namespace tropt
