#include "tropt/optimizer.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace tropt {
namespace {

void require_problem(const OptProblem& p) {
  if (!p.A.is_square()) {
    throw std::invalid_argument("objective matrix must be square");
  }
  if (!p.C.is_square() || p.C.rows() != p.A.rows()) {
    throw std::invalid_argument("constraint matrix shape does not match");
  }
  if (!p.g.is_column() || p.g.rows() != p.A.rows()) {
    throw std::invalid_argument("lower bound shape does not match");
  }
  if (p.C.semifield() != p.A.semifield() ||
      p.g.semifield() != p.A.semifield()) {
    throw std::invalid_argument("semifield mismatch in problem data");
  }
}

}  // namespace

Scalar compute_theta(const Mat& a, const Mat& c) {
  if (!a.is_square() || !c.is_square() || a.rows() != c.rows()) {
    throw std::invalid_argument("theta requires square matrices of equal order");
  }
  if (a.semifield() != c.semifield()) {
    throw std::invalid_argument("semifield mismatch between matrices");
  }
  const SemifieldId sf = a.semifield();
  const int n = a.rows();

  Scalar theta = spectral_radius(a);

  // prev[s] = P(k-1, s); level 0 is P(0, 0) = I, P(0, s) = 0 otherwise.
  std::vector<Mat> prev;
  prev.reserve(n);
  prev.push_back(Mat::identity(sf, n));
  for (int s = 1; s < n; ++s) prev.push_back(Mat::zeros(sf, n, n));

  for (int k = 1; k <= n - 1; ++k) {
    std::vector<Mat> cur;
    cur.reserve(n - k + 1);
    for (int s = 0; s <= n - k; ++s) {
      Mat val = mul(prev[s], a);
      if (s > 0) val = add(val, mul(cur[s - 1], c));
      if (s >= 1) theta = add(theta, pow(trace(val), Rational(1, k)));
      cur.push_back(std::move(val));
    }
    prev = std::move(cur);
  }
  return theta;
}

MinimizeOutcome minimize(const OptProblem& p) {
  require_problem(p);
  const Scalar lambda = spectral_radius(p.A);
  if (lambda.is_null()) return {OptStatus::Degenerate, std::nullopt};
  if (!leq_tol(tr_sum(p.C), Scalar::one(p.C.semifield()), kDefaultTol)) {
    return {OptStatus::Infeasible, std::nullopt};
  }

  const Scalar theta = compute_theta(p.A, p.C);
  const Mat generator = star(add(scalar_mul(inv(theta), p.A), p.C));
  std::optional<Mat> minimal;
  if (is_regular(p.g)) minimal = mul(generator, p.g);
  return {OptStatus::Ok,
          OptResult{theta, SolutionSet{generator, p.g}, std::move(minimal)}};
}

MinimizeOutcome minimize_lower_bounded(const Mat& a, const Mat& g) {
  return minimize({a, Mat::zeros(a.semifield(), a.rows(), a.rows()), g});
}

MinimizeOutcome minimize_linear_constrained(const Mat& a, const Mat& c) {
  return minimize({a, c, Mat(a.semifield(), a.rows(), 1)});
}

Scalar objective(const Mat& a, const Mat& x) {
  if (!a.is_square() || !x.is_column() || x.rows() != a.rows() ||
      x.semifield() != a.semifield()) {
    throw std::invalid_argument("objective shape mismatch");
  }
  if (!is_regular(x)) {
    throw std::domain_error("objective requires a regular vector");
  }
  return mul(conjugate(x), mul(a, x)).at(0, 0);
}

// The oracle works on raw representations with conventional arithmetic;
// nothing here touches star, theta, or the solution-set machinery.
Scalar brute_force_min(const OptProblem& p, double grid_radius,
                       double grid_step, std::size_t max_points) {
  require_problem(p);
  const SemifieldId sf = p.A.semifield();
  if (times_based(sf)) {
    throw std::invalid_argument("grid oracle supports the plus-based semifields");
  }
  const int n = p.A.rows();
  if (n > 3) throw std::invalid_argument("grid oracle is limited to n <= 3");
  if (grid_step <= 0 || grid_radius <= 0) {
    throw std::invalid_argument("grid step and radius must be positive");
  }

  // In the min-plus order "<=" reverses the natural order on reals and the
  // minimum of the objective is the conventionally largest value.
  const bool reversed = min_based(sf);

  auto rep = [](const Scalar& s) -> std::optional<double> {
    if (s.is_null()) return std::nullopt;
    return s.value();
  };

  std::vector<std::vector<double>> axes(n);
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) {
    const std::optional<double> gi = rep(p.g.at(i, 0));
    double lo = -grid_radius, hi = grid_radius;
    double anchor = -grid_radius;
    if (gi) {
      // Anchor the lattice at the bound; points past it are infeasible.
      anchor = *gi;
      if (reversed) {
        hi = *gi;
      } else {
        lo = *gi;
      }
    }
    std::vector<double>& axis = axes[i];
    if (!gi) {
      for (double v = lo; v <= hi + 1e-12; v += grid_step) axis.push_back(v);
    } else if (reversed) {
      for (double v = anchor; v >= lo - 1e-12; v -= grid_step) axis.push_back(v);
    } else {
      for (double v = anchor; v <= hi + 1e-12; v += grid_step) axis.push_back(v);
    }
    if (axis.empty()) axis.push_back(anchor);
    total *= axis.size();
    if (total > max_points) {
      throw std::length_error("grid oracle lattice exceeds the point cap");
    }
  }

  bool any_feasible = false;
  bool best_is_null = false;
  double best = 0.0;

  std::vector<int> idx(n, 0);
  std::vector<double> x(n, 0.0);
  for (;;) {
    for (int i = 0; i < n; ++i) x[i] = axes[i][idx[i]];

    bool feasible = true;
    for (int i = 0; i < n && feasible; ++i) {
      const std::optional<double> gi = rep(p.g.at(i, 0));
      if (gi && (reversed ? x[i] > *gi + 1e-9 : x[i] < *gi - 1e-9)) {
        feasible = false;
      }
    }
    for (int i = 0; i < n && feasible; ++i) {
      // (C x)_i <= x_i in the semifield order
      for (int j = 0; j < n; ++j) {
        const std::optional<double> cij = rep(p.C.at(i, j));
        if (!cij) continue;
        const double t = *cij + x[j];
        if (reversed ? t < x[i] - 1e-9 : t > x[i] + 1e-9) {
          feasible = false;
          break;
        }
      }
    }

    if (feasible) {
      bool seen = false;
      double obj = 0.0;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          const std::optional<double> aij = rep(p.A.at(i, j));
          if (!aij) continue;
          const double t = -x[i] + *aij + x[j];
          if (!seen || (reversed ? t < obj : t > obj)) obj = t;
          seen = true;
        }
      }
      if (!seen) {
        // objective is the null element at every point
        any_feasible = true;
        best_is_null = true;
      } else if (!any_feasible || best_is_null) {
        any_feasible = true;
        best_is_null = false;
        best = obj;
      } else {
        best = reversed ? std::max(best, obj) : std::min(best, obj);
      }
    }

    int carry = n - 1;
    while (carry >= 0 && ++idx[carry] == static_cast<int>(axes[carry].size())) {
      idx[carry--] = 0;
    }
    if (carry < 0) break;
  }

  if (!any_feasible || best_is_null) return Scalar::null(sf);
  return Scalar::finite(sf, best);
}

}  // namespace tropt
