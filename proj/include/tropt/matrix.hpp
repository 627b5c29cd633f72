#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "tropt/semifield.hpp"

namespace tropt {

/// Dense row-major matrix over one semifield; column vectors are n x 1.
/// Matrices are values: every operation returns a fresh matrix and never
/// mutates its inputs, so concurrent reads are safe.
class Mat {
 public:
  /// All entries null.
  Mat(SemifieldId s, int rows, int cols);

  static Mat identity(SemifieldId s, int n);
  static Mat zeros(SemifieldId s, int rows, int cols);

  /// Build from representations; std::nullopt encodes the null element.
  static Mat from_values(
      SemifieldId s,
      const std::vector<std::vector<std::optional<double>>>& rows);
  static Mat column_of(SemifieldId s,
                       const std::vector<std::optional<double>>& entries);

  SemifieldId semifield() const { return sf_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_column() const { return cols_ == 1; }

  const Scalar& at(int i, int j) const;
  void set(int i, int j, const Scalar& v);

  bool operator==(const Mat& other) const;

 private:
  SemifieldId sf_;
  int rows_;
  int cols_;
  std::vector<Scalar> entries_;
};

/// Entrywise idempotent sum; shapes and semifields must agree.
Mat add(const Mat& a, const Mat& b);

/// Semiring matrix product.
Mat mul(const Mat& a, const Mat& b);

/// Entrywise multiplication by a scalar.
Mat scalar_mul(const Scalar& x, const Mat& a);

inline Mat operator+(const Mat& a, const Mat& b) { return add(a, b); }
inline Mat operator*(const Mat& a, const Mat& b) { return mul(a, b); }
inline Mat operator*(const Scalar& x, const Mat& a) { return scalar_mul(x, a); }

/// Sum of the diagonal entries of a square matrix.
Scalar trace(const Mat& a);

/// p-th power of a square matrix, p >= 0; the zeroth power is I.
Mat mat_pow(const Mat& a, long long p);

/// Bounded Kleene star I + A + ... + A^{n-1}, computed as (I + A)^{n-1}
/// by repeated squaring; the two forms agree for every A because addition
/// is idempotent.
Mat star(const Mat& a);

/// tr A + tr A^2 + ... + tr A^n.
Scalar tr_sum(const Mat& a);

/// Largest eigenvalue: sum over m = 1..n of tr^{1/m}(A^m). Null when no
/// power has a finite diagonal entry.
Scalar spectral_radius(const Mat& a);

/// Multiplicative conjugate transpose of a column vector: the row vector
/// of entrywise inverses, with null components passed through. Throws on
/// an all-null vector.
Mat conjugate(const Mat& x);

/// True iff the column vector has no null component.
bool is_regular(const Mat& x);

bool leq_entrywise(const Mat& a, const Mat& b);
bool leq_entrywise_tol(const Mat& a, const Mat& b, double tol = kDefaultTol);
bool approx_equal(const Mat& a, const Mat& b, double tol = kDefaultTol);

/// Simultaneous row/column permutation of a square matrix into lower
/// block-triangular form with irreducible-or-zero diagonal blocks.
/// permutation[k] is the original index placed at position k, so the
/// permuted matrix is B(i, j) = A(permutation[i], permutation[j]).
struct NormalForm {
  std::vector<int> permutation;
  std::vector<int> block_sizes;
  std::vector<bool> block_is_zero;

  int block_count() const { return static_cast<int>(block_sizes.size()); }
};

/// Strongly connected components of the digraph with an arc (i -> j) iff
/// a_ij is non-null, ordered so the permuted matrix is lower
/// block-triangular. Ties in the component order are broken by smallest
/// original index so the form is deterministic.
NormalForm normal_form(const Mat& a);

/// Single diagonal block that is not a 1 x 1 null matrix.
bool is_irreducible(const Mat& a);

/// B(i, j) = A(perm[i], perm[j]).
Mat permute(const Mat& a, const std::vector<int>& perm);

}  // namespace tropt
