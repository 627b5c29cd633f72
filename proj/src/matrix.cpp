#include "tropt/matrix.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

namespace tropt {
namespace {

void require_same_semifield(const Mat& a, const Mat& b) {
  if (a.semifield() != b.semifield()) {
    throw std::invalid_argument("semifield mismatch between matrices");
  }
}

void require_square(const Mat& a, const char* op) {
  if (!a.is_square()) {
    throw std::invalid_argument(std::string(op) + " requires a square matrix");
  }
}

void require_column(const Mat& x, const char* op) {
  if (!x.is_column()) {
    throw std::invalid_argument(std::string(op) + " requires a column vector");
  }
}

}  // namespace

Mat::Mat(SemifieldId s, int rows, int cols)
    : sf_(s), rows_(rows), cols_(cols) {
  if (rows <= 0 || cols <= 0) {
    throw std::invalid_argument("matrix dimensions must be positive");
  }
  entries_.assign(static_cast<std::size_t>(rows) * cols, Scalar::null(s));
}

Mat Mat::identity(SemifieldId s, int n) {
  Mat m(s, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, Scalar::one(s));
  return m;
}

Mat Mat::zeros(SemifieldId s, int rows, int cols) { return Mat(s, rows, cols); }

Mat Mat::from_values(
    SemifieldId s,
    const std::vector<std::vector<std::optional<double>>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw std::invalid_argument("matrix literal must be non-empty");
  }
  const int r = static_cast<int>(rows.size());
  const int c = static_cast<int>(rows.front().size());
  Mat m(s, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) {
      throw std::invalid_argument("matrix literal rows must have equal length");
    }
    for (int j = 0; j < c; ++j) {
      if (rows[i][j]) m.set(i, j, Scalar::finite(s, *rows[i][j]));
    }
  }
  return m;
}

Mat Mat::column_of(SemifieldId s,
                   const std::vector<std::optional<double>>& entries) {
  if (entries.empty()) {
    throw std::invalid_argument("column literal must be non-empty");
  }
  Mat m(s, static_cast<int>(entries.size()), 1);
  for (int i = 0; i < m.rows(); ++i) {
    if (entries[i]) m.set(i, 0, Scalar::finite(s, *entries[i]));
  }
  return m;
}

const Scalar& Mat::at(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) {
    throw std::out_of_range("matrix index out of range");
  }
  return entries_[static_cast<std::size_t>(i) * cols_ + j];
}

void Mat::set(int i, int j, const Scalar& v) {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) {
    throw std::out_of_range("matrix index out of range");
  }
  if (v.semifield() != sf_) {
    throw std::invalid_argument("entry semifield differs from matrix semifield");
  }
  entries_[static_cast<std::size_t>(i) * cols_ + j] = v;
}

bool Mat::operator==(const Mat& other) const {
  require_same_semifield(*this, other);
  if (rows_ != other.rows_ || cols_ != other.cols_) return false;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (!(entries_[k] == other.entries_[k])) return false;
  }
  return true;
}

Mat add(const Mat& a, const Mat& b) {
  require_same_semifield(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("shape mismatch in matrix addition");
  }
  Mat out(a.semifield(), a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      out.set(i, j, add(a.at(i, j), b.at(i, j)));
    }
  }
  return out;
}

Mat mul(const Mat& a, const Mat& b) {
  require_same_semifield(a, b);
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("shape mismatch in matrix product");
  }
  Mat out(a.semifield(), a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) {
      Scalar acc = Scalar::null(a.semifield());
      for (int k = 0; k < a.cols(); ++k) {
        acc = add(acc, mul(a.at(i, k), b.at(k, j)));
      }
      out.set(i, j, acc);
    }
  }
  return out;
}

Mat scalar_mul(const Scalar& x, const Mat& a) {
  if (x.semifield() != a.semifield()) {
    throw std::invalid_argument("semifield mismatch in scalar multiplication");
  }
  Mat out(a.semifield(), a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      out.set(i, j, mul(x, a.at(i, j)));
    }
  }
  return out;
}

Scalar trace(const Mat& a) {
  require_square(a, "trace");
  Scalar acc = Scalar::null(a.semifield());
  for (int i = 0; i < a.rows(); ++i) acc = add(acc, a.at(i, i));
  return acc;
}

Mat mat_pow(const Mat& a, long long p) {
  require_square(a, "matrix power");
  if (p < 0) throw std::invalid_argument("matrix power with negative exponent");
  Mat acc = Mat::identity(a.semifield(), a.rows());
  Mat base = a;
  while (p > 0) {
    if (p & 1) acc = mul(acc, base);
    p >>= 1;
    if (p > 0) base = mul(base, base);
  }
  return acc;
}

Mat star(const Mat& a) {
  require_square(a, "star");
  return mat_pow(add(Mat::identity(a.semifield(), a.rows()), a), a.rows() - 1);
}

Scalar tr_sum(const Mat& a) {
  require_square(a, "tr_sum");
  Scalar acc = Scalar::null(a.semifield());
  Mat p = a;
  for (int m = 1; m <= a.rows(); ++m) {
    acc = add(acc, trace(p));
    if (m < a.rows()) p = mul(p, a);
  }
  return acc;
}

Scalar spectral_radius(const Mat& a) {
  require_square(a, "spectral_radius");
  Scalar acc = Scalar::null(a.semifield());
  Mat p = a;
  for (int m = 1; m <= a.rows(); ++m) {
    acc = add(acc, pow(trace(p), Rational(1, m)));
    if (m < a.rows()) p = mul(p, a);
  }
  return acc;
}

Mat conjugate(const Mat& x) {
  require_column(x, "conjugate");
  Mat out(x.semifield(), 1, x.rows());
  bool any_finite = false;
  for (int i = 0; i < x.rows(); ++i) {
    if (!x.at(i, 0).is_null()) {
      out.set(0, i, inv(x.at(i, 0)));
      any_finite = true;
    }
  }
  if (!any_finite) throw std::domain_error("conjugate of the all-null vector");
  return out;
}

bool is_regular(const Mat& x) {
  require_column(x, "is_regular");
  for (int i = 0; i < x.rows(); ++i) {
    if (x.at(i, 0).is_null()) return false;
  }
  return true;
}

bool leq_entrywise(const Mat& a, const Mat& b) {
  require_same_semifield(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("shape mismatch in entrywise comparison");
  }
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (!leq(a.at(i, j), b.at(i, j))) return false;
    }
  }
  return true;
}

bool leq_entrywise_tol(const Mat& a, const Mat& b, double tol) {
  require_same_semifield(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("shape mismatch in entrywise comparison");
  }
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (!leq_tol(a.at(i, j), b.at(i, j), tol)) return false;
    }
  }
  return true;
}

bool approx_equal(const Mat& a, const Mat& b, double tol) {
  require_same_semifield(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (!approx_equal(a.at(i, j), b.at(i, j), tol)) return false;
    }
  }
  return true;
}

namespace {

// Kosaraju with explicit stacks; components come out keyed by vertex.
std::vector<int> scc_of_pattern(const Mat& a, int* count_out) {
  const int n = a.rows();
  std::vector<std::vector<int>> adj(n), radj(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!a.at(i, j).is_null()) {
        adj[i].push_back(j);
        radj[j].push_back(i);
      }
    }
  }

  std::vector<int> order;
  order.reserve(n);
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::pair<int, std::size_t>> stack{{s, 0}};
    seen[s] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < adj[v].size()) {
        const int w = adj[v][next++];
        if (!seen[w]) {
          seen[w] = 1;
          stack.emplace_back(w, 0);
        }
      } else {
        order.push_back(v);
        stack.pop_back();
      }
    }
  }

  std::vector<int> comp(n, -1);
  int count = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (comp[*it] != -1) continue;
    std::vector<int> stack{*it};
    comp[*it] = count;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const int w : radj[v]) {
        if (comp[w] == -1) {
          comp[w] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  *count_out = count;
  return comp;
}

}  // namespace

NormalForm normal_form(const Mat& a) {
  require_square(a, "normal_form");
  const int n = a.rows();
  int count = 0;
  const std::vector<int> comp = scc_of_pattern(a, &count);

  std::vector<std::vector<int>> members(count);
  for (int v = 0; v < n; ++v) members[comp[v]].push_back(v);
  // members are ascending already (vertices visited in index order)

  // Arcs between distinct components, deduplicated.
  std::set<std::pair<int, int>> edges;
  std::vector<int> outdeg(count, 0);
  std::vector<std::vector<int>> preds(count);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (a.at(i, j).is_null() || comp[i] == comp[j]) continue;
      if (edges.insert({comp[i], comp[j]}).second) {
        ++outdeg[comp[i]];
        preds[comp[j]].push_back(comp[i]);
      }
    }
  }

  // Sinks first so arcs always point from later blocks to earlier ones;
  // the heap keys on the smallest original index in each component.
  std::priority_queue<std::pair<int, int>, std::vector<std::pair<int, int>>,
                      std::greater<>>
      ready;
  for (int c = 0; c < count; ++c) {
    if (outdeg[c] == 0) ready.push({members[c].front(), c});
  }

  NormalForm nf;
  nf.permutation.reserve(n);
  while (!ready.empty()) {
    const int c = ready.top().second;
    ready.pop();
    for (const int v : members[c]) nf.permutation.push_back(v);
    nf.block_sizes.push_back(static_cast<int>(members[c].size()));
    nf.block_is_zero.push_back(members[c].size() == 1 &&
                               a.at(members[c][0], members[c][0]).is_null());
    for (const int p : preds[c]) {
      if (--outdeg[p] == 0) ready.push({members[p].front(), p});
    }
  }
  return nf;
}

bool is_irreducible(const Mat& a) {
  const NormalForm nf = normal_form(a);
  return nf.block_count() == 1 && !nf.block_is_zero.front();
}

Mat permute(const Mat& a, const std::vector<int>& perm) {
  require_square(a, "permute");
  if (static_cast<int>(perm.size()) != a.rows()) {
    throw std::invalid_argument("permutation length differs from matrix order");
  }
  Mat out(a.semifield(), a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      out.set(i, j, a.at(perm[i], perm[j]));
    }
  }
  return out;
}

}  // namespace tropt
