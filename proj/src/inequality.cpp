#include "tropt/inequality.hpp"

#include <stdexcept>

namespace tropt {
namespace {

void require_system(const Mat& a, const Mat& b) {
  if (!a.is_square()) {
    throw std::invalid_argument("inequality matrix must be square");
  }
  if (!b.is_column() || b.rows() != a.rows()) {
    throw std::invalid_argument("bound vector shape does not match the matrix");
  }
  if (a.semifield() != b.semifield()) {
    throw std::invalid_argument("semifield mismatch between matrix and bound");
  }
}

}  // namespace

std::optional<SolutionSet> solve_inequality(const Mat& a, const Mat& b) {
  require_system(a, b);
  const Scalar one = Scalar::one(a.semifield());
  if (!leq_tol(tr_sum(a), one, kDefaultTol)) return std::nullopt;
  return SolutionSet{star(a), b};
}

Mat minimal_solution(const SolutionSet& ss) {
  if (!is_regular(ss.lower)) {
    throw std::domain_error(
        "solution set is unbounded below: lower bound is not regular");
  }
  return mul(ss.generator, ss.lower);
}

bool verify_inequality(const Mat& a, const Mat& b, const Mat& x, double tol) {
  require_system(a, b);
  if (!x.is_column() || x.rows() != a.rows() ||
      x.semifield() != a.semifield()) {
    throw std::invalid_argument("candidate vector shape does not match");
  }
  if (!is_regular(x)) return false;
  return leq_entrywise_tol(add(mul(a, x), b), x, tol);
}

Mat sample(const SolutionSet& ss, const Mat& u) {
  if (!u.is_column() || u.rows() != ss.lower.rows() ||
      u.semifield() != ss.semifield()) {
    throw std::invalid_argument("parameter vector shape does not match");
  }
  if (!is_regular(u)) {
    throw std::invalid_argument("parameter vector must be regular");
  }
  if (!leq_entrywise_tol(ss.lower, u, kDefaultTol)) {
    throw std::invalid_argument("parameter vector violates the lower bound");
  }
  return mul(ss.generator, u);
}

Mat star_via_normal_form(const Mat& a) {
  if (!a.is_square()) {
    throw std::invalid_argument("star_via_normal_form requires a square matrix");
  }
  const NormalForm nf = normal_form(a);
  const Mat p = permute(a, nf.permutation);
  const int n = a.rows();

  Mat diag(a.semifield(), n, n);
  Mat strict(a.semifield(), n, n);
  int offset = 0;
  std::vector<int> block_of(n);
  for (int b = 0; b < nf.block_count(); ++b) {
    for (int k = 0; k < nf.block_sizes[b]; ++k) block_of[offset + k] = b;
    offset += nf.block_sizes[b];
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (block_of[i] == block_of[j]) {
        diag.set(i, j, p.at(i, j));
      } else {
        strict.set(i, j, p.at(i, j));
      }
    }
  }

  const Mat dstar = star(diag);
  const Mat composed = mul(star(mul(dstar, strict)), dstar);

  // back to the original index order
  Mat out(a.semifield(), n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out.set(nf.permutation[i], nf.permutation[j], composed.at(i, j));
    }
  }
  return out;
}

}  // namespace tropt
