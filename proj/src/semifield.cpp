#include "tropt/semifield.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tropt {
namespace {

void require_same(const Scalar& a, const Scalar& b) {
  if (a.semifield() != b.semifield()) {
    throw std::invalid_argument("semifield mismatch: " +
                                std::string(tag_of(a.semifield())) + " vs " +
                                std::string(tag_of(b.semifield())));
  }
}

}  // namespace

std::string_view tag_of(SemifieldId s) {
  switch (s) {
    case SemifieldId::MaxPlus:
      return "max-plus";
    case SemifieldId::MinPlus:
      return "min-plus";
    case SemifieldId::MaxTimes:
      return "max-times";
    case SemifieldId::MinTimes:
      return "min-times";
  }
  throw std::invalid_argument("unknown semifield id");
}

SemifieldId semifield_from_tag(std::string_view tag) {
  if (tag == "max-plus") return SemifieldId::MaxPlus;
  if (tag == "min-plus") return SemifieldId::MinPlus;
  if (tag == "max-times") return SemifieldId::MaxTimes;
  if (tag == "min-times") return SemifieldId::MinTimes;
  throw std::invalid_argument("unknown semifield tag: " + std::string(tag));
}

Rational::Rational(long long num, long long den) : num_(num), den_(den) {
  if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator+(const Rational& other) const {
  return Rational(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

Rational Rational::operator*(const Rational& other) const {
  return Rational(num_ * other.num_, den_ * other.den_);
}

Scalar Scalar::null(SemifieldId s) { return Scalar(s, true, 0.0); }

Scalar Scalar::finite(SemifieldId s, double value) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument("finite scalar from non-finite representation");
  }
  if (times_based(s) && value <= 0.0) {
    throw std::domain_error("times-based semifields hold strictly positive values");
  }
  return Scalar(s, false, value);
}

Scalar Scalar::one(SemifieldId s) {
  return Scalar(s, false, times_based(s) ? 1.0 : 0.0);
}

bool Scalar::is_one() const {
  return !null_ && v_ == (times_based(sf_) ? 1.0 : 0.0);
}

double Scalar::value() const {
  if (null_) throw std::domain_error("representation of the null element");
  return v_;
}

bool Scalar::operator==(const Scalar& other) const {
  require_same(*this, other);
  if (null_ || other.null_) return null_ == other.null_;
  return v_ == other.v_;
}

Scalar add(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  if (a.is_null()) return b;
  if (b.is_null()) return a;
  const bool take_min = min_based(a.semifield());
  const double r = take_min ? std::min(a.value(), b.value())
                            : std::max(a.value(), b.value());
  return Scalar::finite(a.semifield(), r);
}

Scalar mul(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  if (a.is_null() || b.is_null()) return Scalar::null(a.semifield());
  const double r = times_based(a.semifield()) ? a.value() * b.value()
                                              : a.value() + b.value();
  return Scalar::finite(a.semifield(), r);
}

Scalar inv(const Scalar& a) {
  if (a.is_null()) throw std::domain_error("inverse of the null element");
  return Scalar::finite(a.semifield(), times_based(a.semifield())
                                           ? 1.0 / a.value()
                                           : -a.value());
}

Scalar pow(const Scalar& a, const Rational& q) {
  if (a.is_null()) {
    if (q.positive()) return a;
    throw std::domain_error("null raised to a non-positive power");
  }
  if (q.num() == 0) return Scalar::one(a.semifield());
  double r;
  if (times_based(a.semifield())) {
    r = std::pow(a.value(), static_cast<double>(q.num()) / q.den());
  } else {
    r = a.value() * q.num() / q.den();
  }
  return Scalar::finite(a.semifield(), r);
}

Scalar pow(const Scalar& a, long long p) { return pow(a, Rational(p, 1)); }

bool leq(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  if (a.is_null()) return true;
  if (b.is_null()) return false;
  return min_based(a.semifield()) ? a.value() >= b.value()
                                  : a.value() <= b.value();
}

bool leq_tol(const Scalar& a, const Scalar& b, double tol) {
  if (leq(a, b)) return true;
  if (a.is_null() || b.is_null()) return false;
  return std::abs(a.value() - b.value()) <= tol;
}

bool approx_equal(const Scalar& a, const Scalar& b, double tol) {
  require_same(a, b);
  if (a.is_null() || b.is_null()) return a.is_null() == b.is_null();
  return std::abs(a.value() - b.value()) <= tol;
}

}  // namespace tropt
