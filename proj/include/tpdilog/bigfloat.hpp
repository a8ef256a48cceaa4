#pragma once

// Radix-2 floating point value with a per-value precision, backed by MPFR.
//
// Every BigFloat carries its own significand width. Binary operations
// produce a result at the wider of the two operand precisions and round
// to nearest. Values created without an explicit precision (including the
// Scalar(0) / Scalar(1) that Eigen manufactures) take the calling thread's
// default precision, which PrecisionScope adjusts.

#include "tpdilog/rational.hpp"

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

namespace tpdilog {

class BigFloat {
 public:
  static constexpr int kDefaultPrecision = 128;

  /// Precision used for values constructed without an explicit one.
  static int default_precision() noexcept;

  BigFloat();
  BigFloat(int value);     // NOLINT(google-explicit-constructor)
  BigFloat(long value);    // NOLINT(google-explicit-constructor)
  BigFloat(double value);  // NOLINT(google-explicit-constructor)
  BigFloat(const Rational& value, int precision_bits);
  explicit BigFloat(const Rational& value) : BigFloat(value, default_precision()) {}

  /// Zero with the given precision.
  static BigFloat zero(int precision_bits);
  /// 2^exponent, exact.
  static BigFloat pow2(long exponent, int precision_bits);
  /// Parses decimal or scientific notation; "inf" is rejected.
  static BigFloat parse(std::string_view text, int precision_bits);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  int precision() const noexcept { return static_cast<int>(mpfr_get_prec(value_)); }
  /// Returns a copy rounded (or widened) to `bits`.
  BigFloat with_precision(int bits) const;

  mpfr_ptr raw() noexcept { return value_; }
  mpfr_srcptr raw() const noexcept { return value_; }

  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);
  BigFloat operator-() const;

  friend BigFloat operator+(BigFloat lhs, const BigFloat& rhs) { return lhs += rhs; }
  friend BigFloat operator-(BigFloat lhs, const BigFloat& rhs) { return lhs -= rhs; }
  friend BigFloat operator*(BigFloat lhs, const BigFloat& rhs) { return lhs *= rhs; }
  friend BigFloat operator/(BigFloat lhs, const BigFloat& rhs) { return lhs /= rhs; }

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }
  int sign() const noexcept { return mpfr_sgn(value_); }
  double to_double() const noexcept { return mpfr_get_d(value_, MPFR_RNDN); }

  /// Scientific notation with `digits` significant digits; zero prints as "0".
  std::string to_string(int digits = 10) const;

 private:
  struct Uninitialized {};
  BigFloat(Uninitialized, int precision_bits);
  void promote_to(int bits);

  mpfr_t value_;
};

/// Sets the calling thread's default precision for the lifetime of the scope.
class PrecisionScope {
 public:
  explicit PrecisionScope(int bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  int saved_;
};

BigFloat abs(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat log1p(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat max(const BigFloat& a, const BigFloat& b);

/// π rounded to `precision_bits`; memoized per precision.
const BigFloat& pi(int precision_bits);

}  // namespace tpdilog

namespace Eigen {

template <>
struct NumTraits<tpdilog::BigFloat> : GenericNumTraits<tpdilog::BigFloat> {
  using Real = tpdilog::BigFloat;
  using NonInteger = tpdilog::BigFloat;
  using Nested = tpdilog::BigFloat;
  using Literal = tpdilog::BigFloat;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = HugeCost,
    AddCost = HugeCost,
    MulCost = HugeCost
  };

  static Real epsilon() { return tpdilog::BigFloat::pow2(1 - tpdilog::BigFloat::default_precision(), 64); }
  static Real dummy_precision() {
    return tpdilog::BigFloat::pow2(-tpdilog::BigFloat::default_precision() / 2, 64);
  }
  static int digits10() { return static_cast<int>(tpdilog::BigFloat::default_precision() * 0.30103); }
};

}  // namespace Eigen
