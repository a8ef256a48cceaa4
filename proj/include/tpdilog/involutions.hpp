#pragma once

// The involutions M -> M', M -> M'' on totally positive unitriangular
// matrices, defined by the Gauss decomposition  P M P = M' P D_M M'',
// together with their closed forms in Jacobi coordinates, the coordinate
// involution x -> 1/x, the flag-minor reversing maps G -> Ǧ, G -> Ĝ on
// totally positive upper triangular matrices, and the BFZ twist.

#include "tpdilog/core.hpp"

namespace tpdilog {

/// A = L · diag(d) · U with L unit lower triangular, U unit upper triangular.
struct LduFactors {
  RMatrix lower;
  RVector diagonal;
  RMatrix upper;
};

/// Doolittle elimination without pivoting. Throws NotTotallyPositive when
/// a leading principal minor vanishes.
LduFactors ldu_decompose(const RMatrix& a);

/// Outputs of P M P = M' P D_M M''.
struct GaussTriple {
  RMatrix m_prime;
  RDiagonal d;
  RMatrix m_dprime;
};

/// Exact LDU factorization of M P; L = P M' P and U = D_M M''.
GaussTriple decompose_gauss(const RMatrix& m);

/// Jacobi coordinates of M' in closed form.
template <typename Scalar>
JacobiCoords<Scalar> jacobi_prime(const JacobiCoords<Scalar>& x) {
  const int n = x.n();
  JacobiCoords<Scalar> out(n, Scalar(1));
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      Scalar num(1);
      Scalar den(1);
      for (int k = 1; k <= i - 1; ++k) num *= x(k, n + i - j);
      for (int k = 1; k <= i; ++k) den *= x(k, n + 1 + i - j);
      out(i, j) = num / den;
    }
  }
  return out;
}

/// Jacobi coordinates of M'' in closed form.
template <typename Scalar>
JacobiCoords<Scalar> jacobi_dprime(const JacobiCoords<Scalar>& x) {
  const int n = x.n();
  JacobiCoords<Scalar> out(n, Scalar(1));
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      Scalar num(1);
      Scalar den(1);
      for (int k = j + 1; k <= n; ++k) num *= x(j + 1 - i, k);
      for (int k = j; k <= n; ++k) den *= x(j - i, k);
      out(i, j) = num / den;
    }
  }
  return out;
}

/// x_{ij} -> 1/x_{ij}.
template <typename Scalar>
JacobiCoords<Scalar> bar(const JacobiCoords<Scalar>& x) {
  return x.map([](const Scalar& v) { return Scalar(Scalar(1) / v); });
}

/// (D_M)_{ii} = (-1)^{i-1} ∏_{k>i} x_{ik} / ∏_{k<i} x_{ki}.
RDiagonal d_matrix(const Coords& x);

/// Ǧ = M' Λ P D̃_M P for G = M Λ; flag minors satisfy Δ_I(Ǧ) = Δ_{Ī}(G).
/// Throws NotTotallyPositive unless G is totally positive.
RMatrix check_g(const RMatrix& g);
/// Ĝ = Λ D̃_M M'' for G = Λ M; flag minors satisfy Δ^J(Ĝ) = Δ^{J̄}(G).
RMatrix hat_g(const RMatrix& g);

/// u in P zᵗ = vᵗ d u with u, v unitriangular.
RMatrix bfz_twist(const RMatrix& z);

}  // namespace tpdilog
