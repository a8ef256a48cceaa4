#pragma once

// Three-variable changes of Jacobi coordinates L_abc, R_abc and their
// compositions. The 4-fold compositions satisfy the tetrahedron equation
// and reproduce the involutions x -> bar(x') and x -> bar(x'').

#include "tpdilog/core.hpp"

#include <span>
#include <vector>

namespace tpdilog {

enum class TransformKind { L, R };

/// Changes only x_ab, x_ac, x_bc:
/// x_ab -> x_ac,  x_ac -> x_ab,  x_bc -> x_ac x_bc / x_ab.
template <typename Scalar>
JacobiCoords<Scalar> l_transform(const JacobiCoords<Scalar>& x, const Triple& t) {
  t.validate(x.n());
  JacobiCoords<Scalar> y = x;
  y(t.a, t.b) = x(t.a, t.c);
  y(t.a, t.c) = x(t.a, t.b);
  y(t.b, t.c) = x(t.a, t.c) * x(t.b, t.c) / x(t.a, t.b);
  return y;
}

/// Changes only x_ab, x_ac, x_bc:
/// x_ab -> x_ab x_ac / x_bc,  x_ac -> x_bc,  x_bc -> x_ac.
template <typename Scalar>
JacobiCoords<Scalar> r_transform(const JacobiCoords<Scalar>& x, const Triple& t) {
  t.validate(x.n());
  JacobiCoords<Scalar> y = x;
  y(t.a, t.b) = x(t.a, t.b) * x(t.a, t.c) / x(t.b, t.c);
  y(t.a, t.c) = x(t.b, t.c);
  y(t.b, t.c) = x(t.a, t.c);
  return y;
}

struct TransformStep {
  TransformKind kind;
  Triple triple;
};

/// Applies the steps in sequence order (steps[0] first).
Coords apply_steps(const Coords& x, std::span<const TransformStep> steps);

/// The lexicographically ordered composition of all C(n,3) transforms of one
/// kind, written outermost-first as T_{123} ∘ T_{124} ∘ ... ∘ T_{n-2,n-1,n};
/// the lexicographically largest triple acts on the input first.
std::vector<TransformStep> lex_steps(int n, TransformKind kind);
/// The same transforms applied in the opposite order.
std::vector<TransformStep> reverse_lex_steps(int n, TransformKind kind);

Coords lex_composition(const Coords& x, TransformKind kind);

/// Both sides of the tetrahedron equation for n = 4 agree exactly and equal
/// bar(x') for L, bar(x'') for R. Throws std::invalid_argument unless n = 4.
bool verify_tetrahedron(const Coords& x, TransformKind kind);

/// Exact agreement of two step sequences on x.
bool chains_agree(const Coords& x, std::span<const TransformStep> lhs, std::span<const TransformStep> rhs);

}  // namespace tpdilog
