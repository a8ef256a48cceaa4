#include "tpdilog/dilog.hpp"

#include <stdexcept>

namespace tpdilog {

namespace {

constexpr int kGuardBits = 32;

void require_positive_argument(const BigFloat& x, const char* context) {
  if (x.sign() <= 0 || !x.is_finite())
    throw std::domain_error(std::string(context) + ": argument must be positive, got " + x.to_string());
}

}  // namespace

namespace detail {

BigFloat li2_series(const BigFloat& w, int precision_bits) {
  if (w.sign() < 0 || w >= BigFloat(1)) throw std::domain_error("li2_series: argument outside [0, 1)");
  const BigFloat threshold = BigFloat::pow2(-precision_bits - 4, 64);
  BigFloat sum = BigFloat::zero(precision_bits);
  BigFloat power = w.with_precision(precision_bits);
  for (long k = 1;; ++k) {
    const BigFloat term = power / BigFloat(k * k);
    sum += term;
    if (term < threshold) break;
    power *= w;
  }
  return sum;
}

BigFloat rogers_l_branch(const BigFloat& x, bool reflect, int precision_bits) {
  require_positive_argument(x, "rogers_l");
  const int wp = precision_bits + kGuardBits;
  const BigFloat xw = x.with_precision(wp);
  const BigFloat one = BigFloat(1).with_precision(wp);
  const BigFloat log1p_x = log1p(xw);
  // log u and log(1-u) for u = x/(1+x), without forming 1-u.
  const BigFloat log_u = log(xw) - log1p_x;
  const BigFloat log_v = -log1p_x;
  const BigFloat half_product = log_u * log_v / BigFloat(2);

  BigFloat big_l;
  if (!reflect) {
    big_l = li2_series(xw / (one + xw), wp) + half_product;
  } else {
    const BigFloat& p = pi(wp);
    big_l = p * p / BigFloat(6) - half_product - li2_series(one / (one + xw), wp);
  }
  const BigFloat& p = pi(wp);
  return (BigFloat(6) * big_l / (p * p)).with_precision(precision_bits);
}

}  // namespace detail

BigFloat rogers_l(const BigFloat& x, int precision_bits) {
  require_positive_argument(x, "rogers_l");
  if (precision_bits == 0) precision_bits = x.precision();
  // The series argument stays at most 1/2.
  return detail::rogers_l_branch(x, x > BigFloat(1), precision_bits);
}

BigFloat rogers_l(const Rational& x, int precision_bits) {
  if (x <= 0) throw std::domain_error("rogers_l: argument must be positive, got " + to_canonical_string(x));
  return rogers_l(BigFloat(x, precision_bits + kGuardBits), precision_bits);
}

BigFloat f_xyz(const BigFloat& x, const BigFloat& y, const BigFloat& z) {
  require_positive_argument(x, "f_xyz");
  require_positive_argument(y, "f_xyz");
  require_positive_argument(z, "f_xyz");
  const BigFloat one(1);
  const BigFloat sxy = one + x + y;
  return rogers_l(x / (one + y)) + rogers_l(sxy * z / ((one + x) * (one + y))) +
         rogers_l(x * y / (sxy * (one + z))) + rogers_l(y / (one + x));
}

BigFloat f_xyz(const Rational& x, const Rational& y, const Rational& z, int precision_bits) {
  if (x <= 0 || y <= 0 || z <= 0) throw std::domain_error("f_xyz: arguments must be positive");
  const Rational sxy = 1 + x + y;
  return rogers_l(Rational(x / (1 + y)), precision_bits) +
         rogers_l(Rational(sxy * z / ((1 + x) * (1 + y))), precision_bits) +
         rogers_l(Rational(x * y / (sxy * (1 + z))), precision_bits) +
         rogers_l(Rational(y / (1 + x)), precision_bits);
}

Rational xyz_delta(const Coords& x) {
  if (x.n() != 4) throw std::invalid_argument("xyz_delta: requires n = 4");
  return x(2, 4) * x(3, 4) - x(1, 2) * x(1, 3);
}

std::optional<XYZ> solve_xyz(const Coords& c) {
  if (c.n() != 4) throw std::invalid_argument("solve_xyz: requires n = 4");
  require_positive(c);
  const Rational delta = xyz_delta(c);
  if (delta == 0) return std::nullopt;
  XYZ s;
  s.x = (c(1, 2) * c(1, 3) + c(1, 2) * c(2, 4) + c(2, 3) * c(2, 4)) / delta;
  s.y = c(1, 3) / c(2, 4) * (1 + s.x);
  s.z = c(1, 2) / c(2, 3) * (1 + s.y);
  return s;
}

std::array<Rational, 4> script_l_arguments(const RMatrix& g) {
  if (g.rows() != 4 || g.cols() != 4) throw std::invalid_argument("script_l: requires a 4 x 4 matrix");
  require_totally_positive(g, "script_l");
  const auto d = [&](std::initializer_list<int> rows) { return flag_minor_right(g, IndexSet(rows)); };
  return {d({1, 4}) * d({2, 3, 4}) / (d({3, 4}) * d({1, 2, 4})), d({1}) * d({2, 4}) / (d({4}) * d({1, 2})),
          d({1, 2}) * d({2, 3, 4}) / (d({2, 4}) * d({1, 2, 3})), d({2}) * d({3, 4}) / (d({4}) * d({2, 3}))};
}

BigFloat script_l(const RMatrix& g, int precision_bits) {
  BigFloat sum = BigFloat::zero(precision_bits);
  for (const Rational& arg : script_l_arguments(g)) sum += rogers_l(arg, precision_bits);
  return sum;
}

}  // namespace tpdilog
