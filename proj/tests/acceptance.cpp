// Acceptance suite: one PASS/FAIL line per criterion. Exit status 0 iff all pass.

#include "tpdilog/dilog.hpp"
#include "tpdilog/identities.hpp"
#include "tpdilog/involutions.hpp"
#include "tpdilog/s3action.hpp"
#include "tpdilog/tetra.hpp"
#include "tpdilog/wedge.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

using namespace tpdilog;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int g_failures = 0;

void report(int id, bool pass, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::string sci(const BigFloat& v) { return v.to_string(3); }

Rational q(long p, long d = 1) { return Rational(p, d); }

Rational random_positive(Rng& rng, int k) {
  return Rational(static_cast<long>(rng() % k + 1), static_cast<long>(rng() % k + 1));
}

RMatrix random_g(const Coords& x, Rng& rng) {
  RVector lambda(x.n());
  for (int i = 0; i < x.n(); ++i) lambda(i) = random_positive(rng, 9);
  return jacobi_to_matrix(x) * lambda.asDiagonal();
}

Rational epsilon(int k) { return (k * (k - 1) / 2) % 2 == 0 ? q(1) : q(-1); }

// ---------------------------------------------------------------------------

void criterion_sum_constant() {
  const auto start = Clock::now();
  BigFloat worst = BigFloat::zero(64);
  bool ok = true;
  for (int n = 3; n <= 7; ++n) {
    TrialConfig c;
    c.n = n;
    c.trials = 20;
    c.seed = 1000 + static_cast<std::uint64_t>(n);
    const IdentityReport r = run_trials(c, [](const Coords& x, Rng&, const VerifyOptions& o) {
      return verify_sum_constant(jacobi_to_matrix(x), o);
    });
    const BigFloat res = r.identities.at("sum_constant_lower").max_residual;
    worst = max(worst, res);
    ok = ok && res < BigFloat(1e-25);
  }
  const double elapsed = seconds_since(start);
  ok = ok && elapsed < 60.0;
  char buf[160];
  std::snprintf(buf, sizeof buf, "sum constant C(n,3), n=3..7 x 20 trials, max residual %s, %.2f s",
                sci(worst).c_str(), elapsed);
  report(1, ok, buf);
}

void criterion_chain() {
  BigFloat worst = BigFloat::zero(64);
  bool ok = true;
  for (int n = 3; n <= 6; ++n) {
    TrialConfig c;
    c.n = n;
    c.trials = 20;
    c.seed = 2000 + static_cast<std::uint64_t>(n);
    const IdentityReport r = run_trials(c, [](const Coords& x, Rng&, const VerifyOptions& o) {
      return verify_chain(jacobi_to_matrix(x), o);
    });
    const BigFloat res = r.identities.at("chain").max_residual;
    worst = max(worst, res);
    ok = ok && res < BigFloat(1e-25);
  }
  report(2, ok, "12-sum chain, n=3..6 x 20 trials, max spread " + sci(worst));
}

void criterion_script_l() {
  Rng rng(3000);
  BigFloat worst = BigFloat::zero(64);
  for (int k = 0; k < 50; ++k) {
    const RMatrix g = random_g(random_coords(4, 10, rng), rng);
    const BigFloat target = BigFloat(4) - script_l(g);
    worst = max(worst, abs(script_l(check_g(g)) - target));
    worst = max(worst, abs(script_l(hat_g(g)) - target));
  }
  BigFloat worst_two = BigFloat::zero(64);
  int degenerate = 0;
  for (int k = 0; k < 10; ++k) {
    Coords x = random_coords(4, 10, rng);
    x(3, 4) = x(1, 2) * x(1, 3) / x(2, 4);
    if (xyz_delta(x) == 0) ++degenerate;
    const RMatrix g = random_g(x, rng);
    for (const RMatrix& h : {g, check_g(g), hat_g(g)}) worst_two = max(worst_two, abs(script_l(h) - BigFloat(2)));
  }
  const bool ok = worst < BigFloat(1e-25) && worst_two < BigFloat(1e-25) && degenerate == 10;
  report(3, ok, "L(G check) = L(G hat) = 4 - L(G) on 50 G, residual " + sci(worst) + "; L = 2 on " +
                    std::to_string(degenerate) + " delta=0 inputs, residual " + sci(worst_two));
}

// ---------------------------------------------------------------------------

struct ExactSuite {
  std::vector<std::string> failed;
  int checks = 0;

  void check(const std::string& name, bool ok) {
    ++checks;
    if (!ok && std::find(failed.begin(), failed.end(), name) == failed.end()) failed.push_back(name);
  }
};

void exact_involutions(ExactSuite& s, Rng& rng) {
  for (int n = 2; n <= 8; ++n) {
    const Coords x = random_coords(n, 10, rng);
    const RMatrix m = jacobi_to_matrix(x);
    const GaussTriple g = decompose_gauss(m);
    s.check("involutive", decompose_gauss(g.m_prime).m_prime == m && decompose_gauss(g.m_dprime).m_dprime == m);
    s.check("closed forms vs LDU",
            matrix_to_jacobi(g.m_prime) == jacobi_prime(x) && matrix_to_jacobi(g.m_dprime) == jacobi_dprime(x));
    s.check("D_M", d_matrix(x).diagonal() == g.d.diagonal());
    s.check("round trip", matrix_to_jacobi(m) == x);
    for (int a = 1; a <= n; ++a)
      for (int b = a; b <= n; ++b) {
        Rational product(1);
        for (int i = 1; i <= b - a + 1; ++i)
          for (int j = b + 1; j <= n; ++j) product *= x(i, j);
        s.check("corner minors", flag_minor_right(m, IndexSet::interval(a, b)) == product);
      }
  }
  for (int n = 2; n <= 5; ++n) {
    const RMatrix m = jacobi_to_matrix(random_coords(n, 10, rng));
    const GaussTriple g = decompose_gauss(m);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      const IndexSet i = IndexSet::from_mask(mask);
      Rational dk(1);
      for (int k = 0; k < i.size(); ++k) dk *= g.d.diagonal()(k);
      const Rational e = epsilon(i.size());
      s.check("Binet-Cauchy", e * flag_minor_right(m, i.reflected(n)) == dk * flag_minor_right(g.m_prime, i) &&
                                  e * flag_minor_upper(m, i.reflected(n)) == dk * flag_minor_upper(g.m_dprime, i));
    }
  }
}

void exact_tetra(ExactSuite& s, Rng& rng) {
  for (int k = 0; k < 20; ++k) {
    const Coords x = random_coords(4, 10, rng);
    s.check("tetrahedron", verify_tetrahedron(x, TransformKind::L) && verify_tetrahedron(x, TransformKind::R));
  }
  for (int n = 5; n <= 6; ++n) {
    const Coords x = random_coords(n, 10, rng);
    s.check("lex composition", lex_composition(x, TransformKind::L) == bar(jacobi_prime(x)) &&
                                   lex_composition(x, TransformKind::R) == bar(jacobi_dprime(x)));
  }
}

void exact_minors(ExactSuite& s, Rng& rng) {
  for (int n = 3; n <= 6; ++n) s.check("Y relations", y_relations_check(jacobi_to_matrix(random_coords(n, 10, rng))));

  for (int n = 3; n <= 5; ++n) {
    const RMatrix m = jacobi_to_matrix(random_coords(n, 10, rng));
    for (const Triple& t : triples(n))
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const IndexSet i = IndexSet::from_mask(mask);
        if (i.contains(t.a) || i.contains(t.b) || i.contains(t.c)) continue;
        const auto w = [&](std::initializer_list<int> e) { return i | IndexSet(e); };
        const auto r = [&](const IndexSet& x) { return flag_minor_right(m, x); };
        const auto u = [&](const IndexSet& x) { return flag_minor_upper(m, x); };
        s.check("Pluecker", r(w({t.a, t.c})) * r(w({t.b})) ==
                                r(w({t.a, t.b})) * r(w({t.c})) + r(w({t.b, t.c})) * r(w({t.a})));
        s.check("Pluecker", u(w({t.a, t.c})) * u(w({t.b})) ==
                                u(w({t.a, t.b})) * u(w({t.c})) + u(w({t.b, t.c})) * u(w({t.a})));
      }
  }

  for (int m = 2; m <= 6; ++m) {
    RMatrix a(m + 1, m + 1);
    for (int i = 0; i <= m; ++i)
      for (int j = 0; j <= m; ++j) a(i, j) = Rational(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 9 + 1));
    const auto det = [](const RMatrix& b) { return determinant(b); };
    s.check("Desnanot", det(a) * det(RMatrix(a.block(1, 1, m - 1, m - 1))) +
                                det(RMatrix(a.topRightCorner(m, m))) * det(RMatrix(a.bottomLeftCorner(m, m))) ==
                            det(RMatrix(a.topLeftCorner(m, m))) * det(RMatrix(a.bottomRightCorner(m, m))));
  }

  for (int k = 0; k <= 8; ++k)
    for (int m = 0; m <= 8; ++m) s.check("Toeplitz", determinant(toeplitz_matrix(k, m)) == toeplitz_det(k, m));

  for (int n = 3; n <= 7; ++n)
    for (const Rational& x : {q(1, 3), q(1), q(7)}) {
      const RMatrix mx = m_x(n, x);
      bool entries = true;
      for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
          Rational p(1);
          for (int e = 0; e < j - i; ++e) p *= x;
          entries = entries && mx(i - 1, j - 1) == binomial(n - i, j - i) * p;
        }
      s.check("M_x entries", entries);
      for (YFamily f : kAllFamilies)
        for (const Triple& t : triples(n)) {
          const Rational lower = q(t.c - t.b) / (t.b - t.a);
          s.check("M_x Y-values", y_value(mx, f, t) == (uses_upper_minors(f) ? Rational(1 / lower) : lower));
        }
    }
}

void exact_s3(ExactSuite& s, Rng& rng) {
  for (int n = 3; n <= 7; ++n) {
    const Coords x = random_coords(n, 10, rng);
    const Coords xp = jacobi_prime(x), xd = jacobi_dprime(x);
    const Coords a = s3_apply(x, S3Word::s1s2s1), b = s3_apply(x, S3Word::s2s1s2);
    for (int i = 1; i < n - 1; ++i)
      for (int j = i + 1; j <= n - 1; ++j) {
        s.check("y-ratio laws", y_ratio(xp, i, j) == y_ratio_bar(x, i, n + i - j) &&
                                    y_ratio(xd, i, j) == y_ratio_bar(x, j - i, j) &&
                                    y_ratio(a, i, j) == y_ratio(b, i, j) &&
                                    y_ratio_bar(a, i, j) == y_ratio_bar(b, i, j));
      }
    const auto qs = q_values(x), qp = q_values(xp), qd = q_values(xd);
    for (std::size_t i = 0; i < qs.size(); ++i) s.check("Q inversion", qs[i] * qp[i] == 1 && qs[i] * qd[i] == 1);
    s.check("M rho on tilde samples", verify_mrho(jacobi_to_matrix(project_to_tilde(x))));
  }
  Coords witness(4, q(1));
  witness(1, 2) = q(2);
  s.check("M rho fails on witness", !verify_mrho(jacobi_to_matrix(witness)));
}

void criterion_exact() {
  Rng rng(4000);
  ExactSuite s;
  exact_involutions(s, rng);
  exact_tetra(s, rng);
  exact_minors(s, rng);
  exact_s3(s, rng);
  std::string detail = std::to_string(s.checks) + " exact rational checks";
  if (!s.failed.empty()) {
    detail += "; failed:";
    for (const auto& f : s.failed) detail += " [" + f + "]";
  }
  report(4, s.failed.empty(), detail);
}

// ---------------------------------------------------------------------------

void criterion_dilog() {
  Rng rng(5000);
  BigFloat sym = BigFloat::zero(64), pent = BigFloat::zero(64), inv = BigFloat::zero(64);
  for (int k = 0; k < 100; ++k) {
    std::array<Rational, 3> v{random_positive(rng, 20), random_positive(rng, 20), random_positive(rng, 20)};
    std::sort(v.begin(), v.end());
    const BigFloat base = f_xyz(v[0], v[1], v[2]);
    while (std::next_permutation(v.begin(), v.end())) sym = max(sym, abs(f_xyz(v[0], v[1], v[2]) - base));

    const Rational x = v[0], y = v[1];
    const BigFloat lhs = rogers_l(x) + rogers_l(y);
    const BigFloat rhs = rogers_l(Rational(x / (1 + y))) + rogers_l(Rational(x * y / (1 + x + y))) +
                         rogers_l(Rational(y / (1 + x)));
    pent = max(pent, abs(lhs - rhs));
    inv = max(inv, abs(rogers_l(x) + rogers_l(Rational(1 / x)) - BigFloat(1)));
  }
  const BigFloat tol(1e-28);
  report(5, sym < tol && pent < tol && inv < tol,
         "F symmetry on 100 triples " + sci(sym) + ", pentagon " + sci(pent) + ", inversion " + sci(inv));
}

void criterion_wedge() {
  Rng rng(6000);
  BigFloat worst = BigFloat::zero(64);
  double min_ratio = 1e300;
  for (int n = 3; n <= 5; ++n)
    for (WedgeKind kind : {WedgeKind::X, WedgeKind::W})
      for (int k = 0; k < 20; ++k) {
        const Coords x = random_coords(n, 10, rng);
        const TangentVector u = random_tangent(n, rng), v = random_tangent(n, rng);
        TwoFormOptions o;
        o.step = 1e-6;
        worst = max(worst, two_form_residual(x, u, v, kind, o).relative());
        o.include_partner = false;
        const BigFloat coarse = two_form_residual(x, u, v, kind, o).relative();
        o.step = 5e-7;
        const BigFloat fine = two_form_residual(x, u, v, kind, o).relative();
        min_ratio = std::min(min_ratio, (coarse / fine).to_double());
      }
  char buf[300];
  std::snprintf(buf, sizeof buf,
                "2-form relative residual %s at h=1e-6 (n=3..5, X and W, 20 trials each); "
                "halving h on the single-family form shrinks it by >= %.2fx",
                sci(worst).c_str(), min_ratio);
  report(6, worst < BigFloat(1e-8) && min_ratio >= 3.5, buf);
}

void criterion_constancy() {
  BigFloat worst = BigFloat::zero(64);
  for (int n = 3; n <= 5; ++n)
    for (YFamily f : kAllFamilies) worst = max(worst, constancy_probe(n, f, 50, 7000).spread);
  report(7, worst < BigFloat(1e-24), "paired-sum spread over 50 M, n=3..5, all families: " + sci(worst));
}

void criterion_negative_controls() {
  const std::string cmd =
      std::string(TPDILOG_CLI_PATH) + " verify --suite chain --n 4 --trials 2 --sabotage >/dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  const int status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;

  Rng rng(8000);
  int detected = 0, attempts = 0;
  for (int k = 0; k < 10; ++k) {
    // L_abc and R_abc coincide when x_ab = x_bc, so draw from a wide range.
    const Coords x = random_coords(4, 100000, rng);
    for (TransformKind kind : {TransformKind::L, TransformKind::R}) {
      const TransformKind other = kind == TransformKind::L ? TransformKind::R : TransformKind::L;
      const auto lhs = lex_steps(4, kind);
      const auto rhs = reverse_lex_steps(4, kind);
      for (std::size_t i = 0; i < lhs.size(); ++i) {
        auto broken = lhs;
        broken[i].kind = other;
        ++attempts;
        if (!chains_agree(x, broken, rhs)) ++detected;
      }
    }
  }
  report(8, status == 1 && detected == attempts,
         "--sabotage exit status " + std::to_string(status) + "; swapped L/R factor rejected in " +
             std::to_string(detected) + "/" + std::to_string(attempts) + " chains");
}

}  // namespace

int main() {
  const std::array<std::function<void()>, 8> criteria = {
      criterion_sum_constant, criterion_chain, criterion_script_l, criterion_exact,
      criterion_dilog,        criterion_wedge, criterion_constancy, criterion_negative_controls};
  for (const auto& c : criteria) {
    try {
      c();
    } catch (const std::exception& e) {
      std::printf("FAIL criterion: exception %s\n", e.what());
      ++g_failures;
    }
  }
  std::printf("%d of 8 criteria failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
