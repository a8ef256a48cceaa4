#include "tpdilog/tetra.hpp"

#include "tpdilog/involutions.hpp"

#include <algorithm>

namespace tpdilog {

Coords apply_steps(const Coords& x, std::span<const TransformStep> steps) {
  Coords y = x;
  for (const auto& step : steps) {
    y = step.kind == TransformKind::L ? l_transform(y, step.triple) : r_transform(y, step.triple);
  }
  return y;
}

std::vector<TransformStep> lex_steps(int n, TransformKind kind) {
  if (n < 3) throw std::invalid_argument("lex_steps: n must be at least 3");
  std::vector<TransformStep> steps;
  for (const Triple& t : triples(n)) steps.push_back({kind, t});
  std::reverse(steps.begin(), steps.end());
  return steps;
}

std::vector<TransformStep> reverse_lex_steps(int n, TransformKind kind) {
  auto steps = lex_steps(n, kind);
  std::reverse(steps.begin(), steps.end());
  return steps;
}

Coords lex_composition(const Coords& x, TransformKind kind) { return apply_steps(x, lex_steps(x.n(), kind)); }

bool chains_agree(const Coords& x, std::span<const TransformStep> lhs, std::span<const TransformStep> rhs) {
  return apply_steps(x, lhs) == apply_steps(x, rhs);
}

bool verify_tetrahedron(const Coords& x, TransformKind kind) {
  if (x.n() != 4) throw std::invalid_argument("verify_tetrahedron: requires n = 4");
  require_positive(x);
  const Coords lhs = apply_steps(x, lex_steps(4, kind));
  const Coords rhs = apply_steps(x, reverse_lex_steps(4, kind));
  const Coords target = bar(kind == TransformKind::L ? jacobi_prime(x) : jacobi_dprime(x));
  return lhs == rhs && lhs == target;
}

}  // namespace tpdilog
