#include "tpdilog/bigfloat.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tpdilog {
namespace {

thread_local int tls_default_precision = BigFloat::kDefaultPrecision;

void check_precision(int bits) {
  if (bits < MPFR_PREC_MIN || bits > (1 << 20)) {
    throw std::invalid_argument("BigFloat: unsupported precision " + std::to_string(bits));
  }
}

}  // namespace

int BigFloat::default_precision() noexcept { return tls_default_precision; }

BigFloat::BigFloat(Uninitialized, int precision_bits) {
  check_precision(precision_bits);
  mpfr_init2(value_, precision_bits);
}

BigFloat::BigFloat() : BigFloat(Uninitialized{}, default_precision()) { mpfr_set_zero(value_, 1); }

BigFloat::BigFloat(int value) : BigFloat(Uninitialized{}, default_precision()) {
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(long value) : BigFloat(Uninitialized{}, default_precision()) {
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(double value) : BigFloat(Uninitialized{}, default_precision()) {
  mpfr_set_d(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& value, int precision_bits) : BigFloat(Uninitialized{}, precision_bits) {
  mpfr_set_q(value_, value.backend().data(), MPFR_RNDN);
}

BigFloat BigFloat::zero(int precision_bits) {
  BigFloat r(Uninitialized{}, precision_bits);
  mpfr_set_zero(r.value_, 1);
  return r;
}

BigFloat BigFloat::pow2(long exponent, int precision_bits) {
  BigFloat r(Uninitialized{}, precision_bits);
  mpfr_set_ui_2exp(r.value_, 1, exponent, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::parse(std::string_view text, int precision_bits) {
  BigFloat r(Uninitialized{}, precision_bits);
  const std::string s(text);
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(r.value_, s.c_str(), &end, 10, MPFR_RNDN);
  if (s.empty() || end != s.c_str() + s.size() || !r.is_finite()) {
    throw std::invalid_argument("BigFloat: cannot parse \"" + s + "\"");
  }
  return r;
}

BigFloat::BigFloat(const BigFloat& other) : BigFloat(Uninitialized{}, other.precision()) {
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept : BigFloat(Uninitialized{}, MPFR_PREC_MIN) {
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::with_precision(int bits) const {
  BigFloat r(Uninitialized{}, bits);
  mpfr_set(r.value_, value_, MPFR_RNDN);
  return r;
}

void BigFloat::promote_to(int bits) {
  if (bits > precision()) mpfr_prec_round(value_, bits, MPFR_RNDN);
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
  promote_to(rhs.precision());
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
  promote_to(rhs.precision());
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
  promote_to(rhs.precision());
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
  promote_to(rhs.precision());
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(*this);
  mpfr_neg(r.value_, r.value_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

std::string BigFloat::to_string(int digits) const {
  if (is_zero()) return "0";
  const std::string fmt = "%." + std::to_string(digits - 1) + "Re";
  const int len = mpfr_snprintf(nullptr, 0, fmt.c_str(), value_);
  std::string out(static_cast<std::size_t>(len) + 1, '\0');
  mpfr_snprintf(out.data(), out.size(), fmt.c_str(), value_);
  out.resize(static_cast<std::size_t>(len));
  return out;
}

PrecisionScope::PrecisionScope(int bits) : saved_(tls_default_precision) {
  check_precision(bits);
  tls_default_precision = bits;
}

PrecisionScope::~PrecisionScope() { tls_default_precision = saved_; }

BigFloat abs(const BigFloat& x) {
  BigFloat r(x);
  mpfr_abs(r.raw(), r.raw(), MPFR_RNDN);
  return r;
}

BigFloat log(const BigFloat& x) {
  BigFloat r(x);
  mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat log1p(const BigFloat& x) {
  BigFloat r(x);
  mpfr_log1p(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat exp(const BigFloat& x) {
  BigFloat r(x);
  mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat r(x);
  mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

const BigFloat& pi(int precision_bits) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const BigFloat>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[precision_bits];
  if (!slot) {
    auto value = std::make_unique<BigFloat>(BigFloat::zero(precision_bits));
    mpfr_const_pi(value->raw(), MPFR_RNDN);
    slot = std::move(value);
  }
  return *slot;
}

}  // namespace tpdilog
