#pragma once

// Normalized Rogers dilogarithm l(x) = (6/π²) L(x/(1+x)), with
// L(u) = Li₂(u) + ½ log u log(1-u), so that l(x) + l(1/x) = 1.

#include "tpdilog/bigfloat.hpp"
#include "tpdilog/core.hpp"

#include <array>
#include <optional>

namespace tpdilog {

/// l(x) for x > 0, correct to about 2^(8-precision_bits). A precision of 0
/// means "the precision of x". Throws std::domain_error for x <= 0.
BigFloat rogers_l(const BigFloat& x, int precision_bits = 0);
/// l(x) with x converted once at `precision_bits`.
BigFloat rogers_l(const Rational& x, int precision_bits = BigFloat::kDefaultPrecision);

namespace detail {
/// Evaluates l(x) through one fixed reduction branch: the direct series in
/// u = x/(1+x) (reflect = false) or the series in 1-u (reflect = true).
BigFloat rogers_l_branch(const BigFloat& x, bool reflect, int precision_bits);
/// Li₂(w) = Σ w^k/k² for 0 <= w <= 1/2.
BigFloat li2_series(const BigFloat& w, int precision_bits);
}  // namespace detail

/// F(x,y,z) = l(x/(1+y)) + l((1+x+y)z/((1+x)(1+y))) + l(xy/((1+x+y)(1+z))) + l(y/(1+x)).
BigFloat f_xyz(const BigFloat& x, const BigFloat& y, const BigFloat& z);
/// Same, with the four arguments formed exactly before conversion.
BigFloat f_xyz(const Rational& x, const Rational& y, const Rational& z,
               int precision_bits = BigFloat::kDefaultPrecision);

struct XYZ {
  Rational x;
  Rational y;
  Rational z;
};

/// δ = x24 x34 - x12 x13 for n = 4 coordinates.
Rational xyz_delta(const Coords& x);

/// Solves z/(1+y) = x12/x23, y/(1+x) = x13/x24, x/(1+z) = x23/x34.
/// Empty when δ = 0. Throws std::invalid_argument unless n = 4.
std::optional<XYZ> solve_xyz(const Coords& x);

/// The four dilogarithm arguments of ℒ(G), in the order
/// Δ14Δ234/(Δ34Δ124), Δ1Δ24/(Δ4Δ12), Δ12Δ234/(Δ24Δ123), Δ2Δ34/(Δ4Δ23).
std::array<Rational, 4> script_l_arguments(const RMatrix& g);

/// ℒ(G) for G totally positive upper triangular, 4 x 4.
BigFloat script_l(const RMatrix& g, int precision_bits = BigFloat::kDefaultPrecision);

}  // namespace tpdilog
