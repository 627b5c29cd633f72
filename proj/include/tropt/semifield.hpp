#pragma once

#include <cstdint>
#include <string_view>

namespace tropt {

/// Default absolute tolerance on representations. Order comparisons are
/// exact; this slack is only for feasibility ties and test assertions.
inline constexpr double kDefaultTol = 1e-9;

/// The four concrete linearly ordered radicable idempotent semifields.
///
///   max-plus   (R u {-oo}, -oo, 0, max, +)
///   min-plus   (R u {+oo}, +oo, 0, min, +)
///   max-times  (R+ u {0},    0, 1, max, *)
///   min-times  (R+ u {+oo}, +oo, 1, min, *)
enum class SemifieldId : std::uint8_t { MaxPlus, MinPlus, MaxTimes, MinTimes };

constexpr bool min_based(SemifieldId s) {
  return s == SemifieldId::MinPlus || s == SemifieldId::MinTimes;
}
constexpr bool times_based(SemifieldId s) {
  return s == SemifieldId::MaxTimes || s == SemifieldId::MinTimes;
}

/// "max-plus", "min-plus", "max-times", "min-times".
std::string_view tag_of(SemifieldId s);
SemifieldId semifield_from_tag(std::string_view tag);

/// Exact exponent p/q, kept reduced with q > 0. Conversion to floating
/// point happens only when a power is finally evaluated, so exponents like
/// 1/k never accumulate rounding before use.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(long long num, long long den);

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool positive() const { return num_ > 0; }

  Rational operator+(const Rational& other) const;
  Rational operator*(const Rational& other) const;
  bool operator==(const Rational& other) const = default;

 private:
  long long num_ = 0;
  long long den_ = 1;
};

/// Element of one semifield: the null element or a finite value of the
/// underlying representation. Null is a tagged state, never a floating
/// sentinel, so absorbing-zero rules stay exact. Max-times and min-times
/// admit strictly positive representations only.
///
/// Every Scalar carries its SemifieldId; operations on scalars of
/// different semifields are rejected.
class Scalar {
 public:
  static Scalar null(SemifieldId s);
  static Scalar finite(SemifieldId s, double value);
  static Scalar one(SemifieldId s);

  SemifieldId semifield() const { return sf_; }
  bool is_null() const { return null_; }
  bool is_one() const;

  /// Representation of a finite value; throws std::domain_error on null.
  double value() const;

  /// Exact equality on representations (same semifield required).
  bool operator==(const Scalar& other) const;

 private:
  Scalar(SemifieldId s, bool n, double v) : sf_(s), null_(n), v_(v) {}

  SemifieldId sf_;
  bool null_;
  double v_;
};

/// Idempotent addition: max or min of representations; null is neutral.
Scalar add(const Scalar& a, const Scalar& b);

/// Multiplication: + or * of representations; null is absorbing.
Scalar mul(const Scalar& a, const Scalar& b);

/// Multiplicative inverse; throws std::domain_error on null.
Scalar inv(const Scalar& a);

/// Radicable power. pow(a, 0) = one for finite a; pow(null, q) = null for
/// q > 0 and is a domain error otherwise.
Scalar pow(const Scalar& a, const Rational& q);
Scalar pow(const Scalar& a, long long p);

/// Order induced by addition: a <= b iff a + b = b. Null is the bottom
/// element. For the min-based semifields this reverses the natural order
/// on the representations.
bool leq(const Scalar& a, const Scalar& b);

/// leq with an absolute slack on finite representations; ties count as <=.
bool leq_tol(const Scalar& a, const Scalar& b, double tol = kDefaultTol);

/// Both null, or both finite within an absolute tolerance.
bool approx_equal(const Scalar& a, const Scalar& b, double tol = kDefaultTol);

inline Scalar operator+(const Scalar& a, const Scalar& b) { return add(a, b); }
inline Scalar operator*(const Scalar& a, const Scalar& b) { return mul(a, b); }

}  // namespace tropt
