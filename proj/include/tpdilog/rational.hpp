#pragma once

// Exact rational scalar used for every matrix computation in the library.
//
// Backed by GMP's mpq_t through Boost.Multiprecision. Expression templates
// are disabled so that the type behaves like a plain value inside Eigen
// expressions (no lazily evaluated temporaries escaping through `auto`).

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace tpdilog {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RMatrix = Matrix<Rational>;
using RVector = Vector<Rational>;
/// Diagonal matrix with rational entries (Λ, D_M, S, ...).
using RDiagonal = Eigen::DiagonalMatrix<Rational, Eigen::Dynamic>;

/// True for scalars on which == 0 is a meaningful test (no rounding).
template <typename Scalar>
inline constexpr bool is_exact_scalar_v = false;
template <>
inline constexpr bool is_exact_scalar_v<Rational> = true;

/// Canonical "p/q" form; the denominator is always written, even when it is 1.
std::string to_canonical_string(const Rational& q);

/// Parses "p" or "p/q" (optional sign on p, q > 0). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

Rational factorial(int k);
Rational binomial(int n, int k);

}  // namespace tpdilog
