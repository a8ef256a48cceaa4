#include "tpdilog/rational.hpp"

#include <stdexcept>
#include <string>

namespace tpdilog {
namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

std::string to_canonical_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(std::string_view text) {
  const auto fail = [&] { return std::invalid_argument("malformed rational \"" + std::string(text) + "\""); };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  const bool negative = !num.empty() && num.front() == '-';
  std::string_view num_digits = (negative || (!num.empty() && num.front() == '+')) ? num.substr(1) : num;
  if (!is_digits(num_digits) || !is_digits(den)) throw fail();
  const Integer p{std::string(num_digits)};
  const Integer q{std::string(den)};
  if (q == 0) throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
  Rational r(p, q);
  return negative ? Rational(-r) : r;
}

Rational factorial(int k) {
  if (k < 0) throw std::invalid_argument("factorial of a negative integer");
  Integer f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return Rational(f);
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  return factorial(n) / (factorial(k) * factorial(n - k));
}

}  // namespace tpdilog
