#pragma once

// Y-variables: ratios of four flag minors attached to each triple
// 1 <= a < b < c <= n. Two families use right flag minors (Y_abc, Ỹ_abc),
// two use upper flag minors (Y^abc, Ỹ^abc).

#include "tpdilog/core.hpp"

#include <array>
#include <map>
#include <string_view>
#include <vector>

namespace tpdilog {

enum class YFamily { lower, lower_tilde, upper, upper_tilde };

inline constexpr std::array<YFamily, 4> kAllFamilies = {YFamily::lower, YFamily::lower_tilde, YFamily::upper,
                                                        YFamily::upper_tilde};

std::string_view family_name(YFamily family);
YFamily parse_family(std::string_view name);

inline bool uses_upper_minors(YFamily family) {
  return family == YFamily::upper || family == YFamily::upper_tilde;
}

/// Y = Δ(num[0]) Δ(num[1]) / (Δ(den[0]) Δ(den[1])).
struct YIndexSets {
  std::array<IndexSet, 2> num;
  std::array<IndexSet, 2> den;
};

YIndexSets y_index_sets(YFamily family, const Triple& t, int n);

namespace detail {

template <typename Derived>
typename Derived::Scalar family_minor(const Eigen::MatrixBase<Derived>& m, YFamily family, const IndexSet& set) {
  return uses_upper_minors(family) ? flag_minor_upper(m, set) : flag_minor_right(m, set);
}

template <typename Scalar>
Scalar ratio(const Scalar& n0, const Scalar& n1, const Scalar& d0, const Scalar& d1) {
  Scalar den = d0 * d1;
  if (den == 0) throw NotTotallyPositive("Y-variable denominator vanishes: matrix is not totally positive");
  return n0 * n1 / den;
}

}  // namespace detail

template <typename Derived>
typename Derived::Scalar y_value(const Eigen::MatrixBase<Derived>& m, YFamily family, const Triple& t) {
  const int n = static_cast<int>(m.rows());
  t.validate(n);
  const YIndexSets s = y_index_sets(family, t, n);
  const auto f = [&](const IndexSet& set) { return detail::family_minor(m, family, set); };
  return detail::ratio(f(s.num[0]), f(s.num[1]), f(s.den[0]), f(s.den[1]));
}

/// Y-values for every triple of triples(n), in that order. Each distinct
/// flag minor is evaluated once.
template <typename Derived>
std::vector<typename Derived::Scalar> y_values(const Eigen::MatrixBase<Derived>& m, YFamily family) {
  using Scalar = typename Derived::Scalar;
  const int n = static_cast<int>(m.rows());
  std::map<IndexSet, Scalar> minors;
  const auto f = [&](const IndexSet& set) -> const Scalar& {
    auto it = minors.find(set);
    if (it == minors.end()) it = minors.emplace(set, detail::family_minor(m, family, set)).first;
    return it->second;
  };
  std::vector<Scalar> out;
  for (const Triple& t : triples(n)) {
    const YIndexSets s = y_index_sets(family, t, n);
    out.push_back(detail::ratio(f(s.num[0]), f(s.num[1]), f(s.den[0]), f(s.den[1])));
  }
  return out;
}

/// Checks, exactly and over every triple:
///   Y_abc(M) = Ỹ^{a,a+c-b,c}(M) = (general-minor form),
///   Ỹ_abc(M') = 1/Y_{n+1-c,n+1-b,n+1-a}(M),  Ỹ^abc(M'') = 1/Y^{n+1-c,n+1-b,n+1-a}(M),
/// and the same two relations with M' <-> M, M'' <-> M exchanged.
bool y_relations_check(const RMatrix& m);

/// Unitriangular matrix with every Jacobi coordinate equal to x:
/// (M_x)_{ij} = C(n-i, j-i) x^{j-i}.
RMatrix m_x(int n, const Rational& x);

/// (m+1) x (m+1) Toeplitz matrix with entries 1/(k+j-i)!, zero when k+j-i < 0.
RMatrix toeplitz_matrix(int k, int m);

/// det T_{k,m} = 1!2!⋯m! / (k!(k+1)!⋯(k+m)!).
Rational toeplitz_det(int k, int m);

}  // namespace tpdilog
