#pragma once

// Numerical surrogate for the wedge identity
//   Σ_{T_n} X ∧ (1-X) + Σ_{T_n} X′ ∧ (1-X′) = 0
// (and the W, W″ analogue). Ω(u, v) pairs central differences of log X and
// log(1-X) along two tangent directions in log x_{ij}. Each difference is
// linear in the logs of the minors, so the symbolic cancellation makes Ω
// vanish at every step h, up to rounding. A single family does not cancel;
// its Ω is the O(h²) discretization of d log X ∧ d log(1-X), which is
// identically zero termwise. This checks a consequence of the identity,
// not the identity itself.

#include "tpdilog/bigfloat.hpp"
#include "tpdilog/yvars.hpp"

#include <cstdint>
#include <map>

namespace tpdilog {

/// X uses Y_abc with M and M′; W uses Y^abc with M and M″.
enum class WedgeKind { X, W };

/// X_abc = Y/(1+Y) for the kind's Y-family, at M or (partner) at M′ / M″.
std::map<Triple, Rational> x_variables(const RMatrix& m, WedgeKind kind, bool partner = false);

using TangentVector = JacobiCoords<BigFloat>;

struct TwoFormResult {
  /// |Ω(u, v)|.
  BigFloat value;
  /// Σ over the terms of |D_u log X · D_v log(1-X)| + |D_v log X · D_u log(1-X)|.
  BigFloat scale;

  BigFloat relative() const { return scale.is_zero() ? value : value / scale; }
};

struct TwoFormOptions {
  double step = 1e-6;
  int precision_bits = BigFloat::kDefaultPrecision;
  /// Include the X′ (or W″) family; dropping it breaks the cancellation.
  bool include_partner = true;
};

/// Throws std::invalid_argument for step <= 0 or step > 1e-3, for a zero
/// tangent vector, or for mismatched dimensions.
TwoFormResult two_form_residual(const Coords& x, const TangentVector& u, const TangentVector& v, WedgeKind kind,
                                const TwoFormOptions& options = {});

/// Tangent vector with components uniform in [-1, 1].
TangentVector random_tangent(int n, Rng& rng, int precision_bits = BigFloat::kDefaultPrecision);

struct ConstancyResult {
  BigFloat spread;
  BigFloat min;
  BigFloat max;
};

/// Over `trials` random M (generator seed + k): spread of
/// Σ l(Z(M)) + Σ l(Z(M*)), where M* = M′ for right-minor families and
/// M″ for upper-minor families.
ConstancyResult constancy_probe(int n, YFamily family, int trials, std::uint64_t seed, int coord_max = 10,
                                int precision_bits = BigFloat::kDefaultPrecision);

}  // namespace tpdilog
