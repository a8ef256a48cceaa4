#include "tpdilog/yvars.hpp"

#include "tpdilog/involutions.hpp"

namespace tpdilog {

std::string_view family_name(YFamily family) {
  switch (family) {
    case YFamily::lower: return "Y_lower";
    case YFamily::lower_tilde: return "Y_lower_tilde";
    case YFamily::upper: return "Y_upper";
    case YFamily::upper_tilde: return "Y_upper_tilde";
  }
  return "?";
}

YFamily parse_family(std::string_view name) {
  for (YFamily f : kAllFamilies)
    if (family_name(f) == name) return f;
  throw std::invalid_argument("unknown Y family \"" + std::string(name) + "\"");
}

YIndexSets y_index_sets(YFamily family, const Triple& t, int n) {
  t.validate(n);
  const auto iv = IndexSet::interval;
  const int a = t.a, b = t.b, c = t.c;
  switch (family) {
    case YFamily::lower:
      return {{iv(a, b - 1) | iv(c + 1, n), iv(a + 1, b) | iv(c, n)},
              {iv(a, b) | iv(c + 1, n), iv(a + 1, b - 1) | iv(c, n)}};
    case YFamily::lower_tilde:
      return {{iv(1, a) | iv(b + 1, c - 1), iv(1, a - 1) | iv(b, c)},
              {iv(1, a) | iv(b, c - 1), iv(1, a - 1) | iv(b + 1, c)}};
    case YFamily::upper:
      return {{iv(a, b) | iv(c + 1, n), iv(a + 1, b - 1) | iv(c, n)},
              {iv(a, b - 1) | iv(c + 1, n), iv(a + 1, b) | iv(c, n)}};
    case YFamily::upper_tilde:
      return {{iv(1, a) | iv(b, c - 1), iv(1, a - 1) | iv(b + 1, c)},
              {iv(1, a) | iv(b + 1, c - 1), iv(1, a - 1) | iv(b, c)}};
  }
  throw std::invalid_argument("y_index_sets: unknown family");
}

bool y_relations_check(const RMatrix& m) {
  require_unitriangular(m, "y_relations_check");
  const int n = static_cast<int>(m.rows());
  const GaussTriple g = decompose_gauss(m);
  const auto iv = IndexSet::interval;
  for (const Triple& t : triples(n)) {
    const int a = t.a, b = t.b, c = t.c;
    const Rational y = y_value(m, YFamily::lower, t);
    if (y != y_value(m, YFamily::upper_tilde, Triple{a, a + c - b, c})) return false;
    const Rational general = minor(m, iv(a, b - 1), iv(a + c - b + 1, c)) * minor(m, iv(a + 1, b), iv(a + c - b, c - 1)) /
                             (minor(m, iv(a, b), iv(a + c - b, c)) *
                              minor(m, iv(a + 1, b - 1), iv(a + c - b + 1, c - 1)));
    if (y != general) return false;

    const Triple r = t.reversed(n);
    if (y_value(g.m_prime, YFamily::lower_tilde, t) * y_value(m, YFamily::lower, r) != 1) return false;
    if (y_value(g.m_dprime, YFamily::upper_tilde, t) * y_value(m, YFamily::upper, r) != 1) return false;
    if (y_value(m, YFamily::lower_tilde, t) * y_value(g.m_prime, YFamily::lower, r) != 1) return false;
    if (y_value(m, YFamily::upper_tilde, t) * y_value(g.m_dprime, YFamily::upper, r) != 1) return false;
  }
  return true;
}

RMatrix m_x(int n, const Rational& x) {
  if (n < 2) throw std::invalid_argument("m_x: n must be at least 2");
  if (x <= 0) throw std::invalid_argument("m_x: x must be positive");
  RMatrix m = RMatrix::Zero(n, n);
  for (int i = 1; i <= n; ++i) {
    Rational power(1);
    for (int j = i; j <= n; ++j) {
      m(i - 1, j - 1) = binomial(n - i, j - i) * power;
      power *= x;
    }
  }
  return m;
}

RMatrix toeplitz_matrix(int k, int m) {
  if (k < 0 || m < 0) throw std::invalid_argument("toeplitz_matrix: k and m must be non-negative");
  RMatrix t(m + 1, m + 1);
  for (int i = 1; i <= m + 1; ++i)
    for (int j = 1; j <= m + 1; ++j) {
      const int p = k + j - i;
      t(i - 1, j - 1) = p < 0 ? Rational(0) : Rational(1) / factorial(p);
    }
  return t;
}

Rational toeplitz_det(int k, int m) {
  if (k < 0 || m < 0) throw std::invalid_argument("toeplitz_det: k and m must be non-negative");
  Rational value(1);
  for (int p = 1; p <= m; ++p) value *= factorial(p);
  for (int p = k; p <= k + m; ++p) value /= factorial(p);
  return value;
}

}  // namespace tpdilog
