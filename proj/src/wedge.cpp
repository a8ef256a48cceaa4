#include "tpdilog/wedge.hpp"

#include "tpdilog/identities.hpp"
#include "tpdilog/involutions.hpp"

#include <boost/random/uniform_real_distribution.hpp>

#include <vector>

namespace tpdilog {

namespace {

YFamily family_of(WedgeKind kind) { return kind == WedgeKind::X ? YFamily::lower : YFamily::upper; }

/// log X_k and log(1 - X_k) for every term of the 2-form.
struct TermValues {
  std::vector<BigFloat> a;
  std::vector<BigFloat> b;
};

void append_terms(const JacobiCoords<BigFloat>& x, YFamily family, TermValues& out) {
  const Matrix<BigFloat> m = jacobi_to_matrix(x);
  for (const BigFloat& y : y_values(m, family)) {
    // X = Y/(1+Y), 1 - X = 1/(1+Y).
    const BigFloat l1p = log1p(y);
    out.a.push_back(log(y) - l1p);
    out.b.push_back(-l1p);
  }
}

TermValues evaluate(const JacobiCoords<BigFloat>& x, WedgeKind kind, const TwoFormOptions& o) {
  TermValues out;
  const YFamily f = family_of(kind);
  append_terms(x, f, out);
  if (o.include_partner) append_terms(kind == WedgeKind::X ? jacobi_prime(x) : jacobi_dprime(x), f, out);
  return out;
}

JacobiCoords<BigFloat> shifted(const JacobiCoords<BigFloat>& x, const TangentVector& dir, const BigFloat& h) {
  JacobiCoords<BigFloat> y = x;
  for (int i = 1; i < x.n(); ++i)
    for (int j = i + 1; j <= x.n(); ++j) y(i, j) = x(i, j) * exp(h * dir(i, j));
  return y;
}

/// Central differences of log X_k and log(1 - X_k) along `dir`.
TermValues directional(const JacobiCoords<BigFloat>& x, const TangentVector& dir, const BigFloat& h, WedgeKind kind,
                       const TwoFormOptions& o) {
  const TermValues plus = evaluate(shifted(x, dir, h), kind, o);
  const TermValues minus = evaluate(shifted(x, dir, -h), kind, o);
  TermValues d;
  const BigFloat two_h = BigFloat(2) * h;
  for (std::size_t k = 0; k < plus.a.size(); ++k) {
    d.a.push_back((plus.a[k] - minus.a[k]) / two_h);
    d.b.push_back((plus.b[k] - minus.b[k]) / two_h);
  }
  return d;
}

bool is_zero_vector(const TangentVector& v) {
  for (const BigFloat& c : v.values())
    if (!c.is_zero()) return false;
  return true;
}

}  // namespace

std::map<Triple, Rational> x_variables(const RMatrix& m, WedgeKind kind, bool partner) {
  require_unitriangular(m, "x_variables");
  RMatrix base = m;
  if (partner) {
    GaussTriple g = decompose_gauss(m);
    base = kind == WedgeKind::X ? std::move(g.m_prime) : std::move(g.m_dprime);
  }
  const int n = static_cast<int>(m.rows());
  const auto ys = y_values(base, family_of(kind));
  const auto ts = triples(n);
  std::map<Triple, Rational> out;
  for (std::size_t k = 0; k < ts.size(); ++k) out.emplace(ts[k], ys[k] / (1 + ys[k]));
  return out;
}

TwoFormResult two_form_residual(const Coords& x, const TangentVector& u, const TangentVector& v, WedgeKind kind,
                                const TwoFormOptions& options) {
  if (!(options.step > 0.0) || options.step > 1e-3)
    throw std::invalid_argument("two_form_residual: step must lie in (0, 1e-3]");
  if (u.n() != x.n() || v.n() != x.n()) throw std::invalid_argument("two_form_residual: dimension mismatch");
  if (is_zero_vector(u) || is_zero_vector(v)) throw std::invalid_argument("two_form_residual: zero tangent vector");
  require_positive(x);

  const int prec = options.precision_bits;
  PrecisionScope scope(prec);
  const auto base = x.map([prec](const Rational& q) { return BigFloat(q, prec); });
  const BigFloat h(options.step);
  const TermValues du = directional(base, u, h, kind, options);
  const TermValues dv = directional(base, v, h, kind, options);

  BigFloat omega = BigFloat::zero(prec);
  BigFloat scale = BigFloat::zero(prec);
  for (std::size_t k = 0; k < du.a.size(); ++k) {
    const BigFloat p = du.a[k] * dv.b[k];
    const BigFloat q = dv.a[k] * du.b[k];
    omega += p - q;
    scale += abs(p) + abs(q);
  }
  return {abs(omega), scale};
}

TangentVector random_tangent(int n, Rng& rng, int precision_bits) {
  boost::random::uniform_real_distribution<double> dist(-1.0, 1.0);
  TangentVector t(n, BigFloat::zero(precision_bits));
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) t(i, j) = BigFloat(dist(rng)).with_precision(precision_bits);
  return t;
}

ConstancyResult constancy_probe(int n, YFamily family, int trials, std::uint64_t seed, int coord_max,
                                int precision_bits) {
  if (n < 3) throw std::invalid_argument("constancy_probe: n must be at least 3");
  if (trials < 1) throw std::invalid_argument("constancy_probe: trials must be at least 1");
  std::vector<BigFloat> values;
  for (int k = 0; k < trials; ++k) {
    Rng rng(seed + static_cast<std::uint64_t>(k));
    const RMatrix m = jacobi_to_matrix(random_coords(n, coord_max, rng));
    GaussTriple g = decompose_gauss(m);
    const RMatrix& partner = uses_upper_minors(family) ? g.m_dprime : g.m_prime;
    values.push_back(dilog_sum(m, family, false, precision_bits) + dilog_sum(partner, family, false, precision_bits));
  }
  ConstancyResult r{spread(values), values.front(), values.front()};
  for (const BigFloat& v : values) {
    if (v < r.min) r.min = v;
    if (r.max < v) r.max = v;
  }
  return r;
}

}  // namespace tpdilog
