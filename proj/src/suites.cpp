#include "tpdilog/suites.hpp"

#include "tpdilog/dilog.hpp"
#include "tpdilog/involutions.hpp"
#include "tpdilog/tetra.hpp"
#include "tpdilog/wedge.hpp"

#include <array>

namespace tpdilog {

namespace {

constexpr std::array<Suite, 8> kSuites = {Suite::chain, Suite::s3,       Suite::tetra,    Suite::mrho,
                                          Suite::wedge, Suite::bversion, Suite::script_l, Suite::all};

IdentityReport chain_trial(const Coords& x, Rng&, const VerifyOptions& o) {
  const RMatrix m = jacobi_to_matrix(x);
  IdentityReport r = verify_sum_constant(m, o);
  r.merge(verify_chain(m, o));
  return r;
}

IdentityReport s3_trial(const Coords& x, Rng&, const VerifyOptions& o) {
  return verify_s3_exhaustive(jacobi_to_matrix(x), o);
}

IdentityReport tetra_trial(const Coords& x, Rng&, const VerifyOptions&) {
  IdentityReport r;
  r.record_exact("lex_composition_L", lex_composition(x, TransformKind::L) == bar(jacobi_prime(x)));
  r.record_exact("lex_composition_R", lex_composition(x, TransformKind::R) == bar(jacobi_dprime(x)));
  if (x.n() == 4) {
    r.record_exact("tetrahedron_L", verify_tetrahedron(x, TransformKind::L));
    r.record_exact("tetrahedron_R", verify_tetrahedron(x, TransformKind::R));
  }
  return r;
}

IdentityReport mrho_trial(const Coords& x, Rng&, const VerifyOptions&) {
  const int n = x.n();
  IdentityReport r;
  const Coords t = project_to_tilde(x);
  r.record_exact("mrho_on_tilde", in_tilde(t) && verify_mrho(jacobi_to_matrix(t)));
  const bool tilde = in_tilde(x);
  r.record_exact("mrho_criteria", verify_mrho(jacobi_to_matrix(x)) == tilde && d_criterion(x) == tilde &&
                                      dp_squared_is_scalar(x) == tilde);

  const auto q = q_values(x);
  const auto qp = q_values(jacobi_prime(x));
  const auto qpp = q_values(jacobi_dprime(x));
  bool inverted = true;
  for (std::size_t k = 0; k < q.size(); ++k) inverted = inverted && qp[k] * q[k] == 1 && qpp[k] * q[k] == 1;
  r.record_exact("q_inversion", inverted);

  const Coords p = jacobi_prime(x);
  const Coords pp = jacobi_dprime(x);
  const Coords lhs = s3_apply(x, S3Word::s1s2s1);
  const Coords rhs = s3_apply(x, S3Word::s2s1s2);
  bool laws = true;
  for (int i = 1; i < n - 1; ++i)
    for (int j = i + 1; j <= n - 1; ++j) {
      laws = laws && y_ratio(p, i, j) == y_ratio_bar(x, i, n + i - j);
      laws = laws && y_ratio(pp, i, j) == y_ratio_bar(x, j - i, j);
      laws = laws && y_ratio(lhs, i, j) == y_ratio(rhs, i, j);
      laws = laws && y_ratio_bar(lhs, i, j) == y_ratio_bar(rhs, i, j);
    }
  r.record_exact("y_ratio_laws", laws);
  return r;
}

IdentityReport wedge_trial(const Coords& x, Rng& rng, const VerifyOptions& o) {
  IdentityReport r;
  TwoFormOptions opts;
  opts.precision_bits = o.precision_bits;
  const BigFloat tol(kWedgeTolerance);
  for (WedgeKind kind : {WedgeKind::X, WedgeKind::W}) {
    const TangentVector u = random_tangent(x.n(), rng, o.precision_bits);
    const TangentVector v = random_tangent(x.n(), rng, o.precision_bits);
    r.record(kind == WedgeKind::X ? "wedge_X" : "wedge_W", two_form_residual(x, u, v, kind, opts).relative(), tol);
  }
  return r;
}

IdentityReport bversion_trial(const Coords& x, Rng& rng, const VerifyOptions& o) {
  const RMatrix g = random_diagonal(x.n(), 10, rng) * jacobi_to_matrix(x) * random_diagonal(x.n(), 10, rng);
  return verify_b_version(g, o);
}

IdentityReport script_l_trial(const Coords& x, Rng& rng, const VerifyOptions& o) {
  const RMatrix g = jacobi_to_matrix(x) * random_diagonal(4, 10, rng);
  const int prec = o.precision_bits;
  const BigFloat l = script_l(g, prec);
  const BigFloat four(4);
  IdentityReport r;
  r.record("script_l_check", script_l(check_g(g), prec) - (four - l), o.effective_tolerance());
  r.record("script_l_hat", script_l(hat_g(g), prec) - (four - l), o.effective_tolerance());
  if (const auto s = solve_xyz(x); s && s->x > 0) {
    r.record("script_l_equals_F", l - f_xyz(s->x, s->y, s->z, prec), o.effective_tolerance());
  }
  return r;
}

TrialBody body_for(Suite s) {
  switch (s) {
    case Suite::chain: return chain_trial;
    case Suite::s3: return s3_trial;
    case Suite::tetra: return tetra_trial;
    case Suite::mrho: return mrho_trial;
    case Suite::wedge: return wedge_trial;
    case Suite::bversion: return bversion_trial;
    case Suite::script_l: return script_l_trial;
    case Suite::all: break;
  }
  throw std::logic_error("body_for: composite suite");
}

}  // namespace

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::chain: return "chain";
    case Suite::s3: return "s3";
    case Suite::tetra: return "tetra";
    case Suite::mrho: return "mrho";
    case Suite::wedge: return "wedge";
    case Suite::bversion: return "bversion";
    case Suite::script_l: return "script-l";
    case Suite::all: return "all";
  }
  return "?";
}

Suite parse_suite(std::string_view name) {
  for (Suite s : kSuites)
    if (suite_name(s) == name) return s;
  throw std::invalid_argument("unknown suite \"" + std::string(name) + "\"");
}

IdentityReport run_suite(Suite suite, const TrialConfig& config) {
  if (config.n < 3) throw std::invalid_argument("suite " + std::string(suite_name(suite)) + " needs n >= 3");
  if (suite == Suite::script_l && config.n != 4) throw std::invalid_argument("suite script-l needs n = 4");
  if (suite != Suite::all) return run_trials(config, body_for(suite));

  IdentityReport report;
  for (Suite s : kSuites) {
    if (s == Suite::all || (s == Suite::script_l && config.n != 4)) continue;
    IdentityReport part = run_trials(config, body_for(s));
    part.trials = 0;
    report.merge(part);
  }
  report.trials = config.trials;
  return report;
}

}  // namespace tpdilog
