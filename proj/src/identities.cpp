#include "tpdilog/identities.hpp"

#include "tpdilog/dilog.hpp"
#include "tpdilog/involutions.hpp"

#include <boost/random/uniform_int_distribution.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

namespace tpdilog {

BigFloat VerifyOptions::effective_tolerance() const {
  return tolerance ? *tolerance : BigFloat::pow2(-precision_bits / 2, 64);
}

void IdentityReport::record(const std::string& name, const BigFloat& residual, const BigFloat& tolerance) {
  IdentityResult r;
  r.max_residual = abs(residual);
  r.pass = r.max_residual <= tolerance;
  IdentityReport single;
  single.identities.emplace(name, std::move(r));
  merge(single);
}

void IdentityReport::record_exact(const std::string& name, const Rational& residual) {
  IdentityResult r;
  r.max_residual = BigFloat(Rational(abs(residual)), 64);
  r.pass = residual == 0;
  IdentityReport single;
  single.identities.emplace(name, std::move(r));
  merge(single);
}

void IdentityReport::record_exact(const std::string& name, bool holds) {
  record_exact(name, holds ? Rational(0) : Rational(1));
}

void IdentityReport::merge(const IdentityReport& other) {
  if (n != 0 && other.n != 0 && n != other.n)
    throw std::invalid_argument("cannot merge reports for n = " + std::to_string(n) + " and n = " +
                                std::to_string(other.n));
  if (n != 0 && other.n != 0 && precision_bits != other.precision_bits)
    throw std::invalid_argument("cannot merge reports with different precisions");
  if (n == 0) {
    n = other.n;
    precision_bits = other.precision_bits;
    seed = other.seed;
  } else if (other.n != 0) {
    seed = std::min(seed, other.seed);
  }
  trials += other.trials;
  elapsed_seconds += other.elapsed_seconds;
  for (const auto& [name, result] : other.identities) {
    auto [it, inserted] = identities.emplace(name, result);
    if (!inserted) {
      it->second.max_residual = max(it->second.max_residual, result.max_residual);
      it->second.pass = it->second.pass && result.pass;
    }
  }
}

bool IdentityReport::all_pass() const {
  return std::all_of(identities.begin(), identities.end(), [](const auto& kv) { return kv.second.pass; });
}

BigFloat spread(const std::vector<BigFloat>& values) {
  if (values.empty()) return BigFloat::zero(64);
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end(),
                                            [](const BigFloat& a, const BigFloat& b) { return a < b; });
  return *hi - *lo;
}

BigFloat sum_l(const std::vector<Rational>& ys, bool invert, int precision_bits) {
  BigFloat sum = BigFloat::zero(precision_bits);
  for (const Rational& y : ys) sum += rogers_l(invert ? Rational(1 / y) : y, precision_bits);
  return sum;
}

BigFloat dilog_sum(const RMatrix& m, YFamily family, bool invert, int precision_bits) {
  return sum_l(y_values(m, family), invert, precision_bits);
}

namespace {

BigFloat c_n3(int n, int precision_bits) { return BigFloat(binomial(n, 3), precision_bits); }

}  // namespace

IdentityReport verify_sum_constant(const RMatrix& m, const VerifyOptions& options) {
  const int prec = options.precision_bits;
  const int n = static_cast<int>(m.rows());
  const GaussTriple g = decompose_gauss(m);
  const BigFloat tol = options.effective_tolerance();
  IdentityReport report;
  const BigFloat lower = dilog_sum(m, YFamily::lower, false, prec) + dilog_sum(g.m_prime, YFamily::lower, false, prec);
  const BigFloat upper =
      dilog_sum(m, YFamily::upper, false, prec) + dilog_sum(g.m_dprime, YFamily::upper, false, prec);
  report.record("sum_constant_lower", lower - c_n3(n, prec), tol);
  report.record("sum_constant_upper", upper - c_n3(n, prec), tol);
  return report;
}

IdentityReport verify_chain(const RMatrix& m, const VerifyOptions& options) {
  const int prec = options.precision_bits;
  const GaussTriple g = decompose_gauss(m);
  std::vector<BigFloat> sums;
  for (YFamily f : kS3FamilyOrder) {
    std::vector<Rational> at_prime = y_values(g.m_prime, f);
    if (options.sabotage && sums.empty()) at_prime.front() *= 2;
    sums.push_back(sum_l(at_prime, false, prec));
    sums.push_back(dilog_sum(m, f, true, prec));
    sums.push_back(dilog_sum(g.m_dprime, f, false, prec));
  }
  IdentityReport report;
  report.record("chain", spread(sums), options.effective_tolerance());
  return report;
}

BigFloat s3_sum(const RMatrix& m, YFamily family, S3Word word, int precision_bits) {
  return dilog_sum(s3_value(m, word), family, word_sign(word) < 0, precision_bits);
}

IdentityReport verify_s3_form(const RMatrix& m, const std::array<S3Word, 4>& words, const VerifyOptions& options) {
  std::vector<BigFloat> sums;
  for (std::size_t k = 0; k < 4; ++k) sums.push_back(s3_sum(m, kS3FamilyOrder[k], words[k], options.precision_bits));
  IdentityReport report;
  report.record("s3_form", spread(sums), options.effective_tolerance());
  return report;
}

IdentityReport verify_s3_exhaustive(const RMatrix& m, const VerifyOptions& options) {
  std::vector<BigFloat> sums;
  for (S3Word w : kAllWords) {
    const RMatrix s = s3_value(m, w);
    for (YFamily f : kS3FamilyOrder) sums.push_back(dilog_sum(s, f, word_sign(w) < 0, options.precision_bits));
  }
  IdentityReport report;
  report.record("s3_exhaustive", spread(sums), options.effective_tolerance());
  return report;
}

namespace {

Rational max_abs_difference(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational worst(0);
  for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, Rational(abs(a[k] - b[k])));
  return worst;
}

}  // namespace

IdentityReport verify_b_version(const RMatrix& g, const VerifyOptions& options) {
  require_totally_positive(g, "verify_b_version");
  const int prec = options.precision_bits;
  const int n = static_cast<int>(g.rows());
  const RDiagonal lambda(RVector(g.diagonal()));
  const RMatrix m_right = g * lambda.inverse();
  const RMatrix m_left = lambda.inverse() * g;
  const RMatrix gc = check_g(g);
  const RMatrix gh = hat_g(g);

  std::vector<BigFloat> sums;
  for (YFamily f : kS3FamilyOrder) {
    sums.push_back(dilog_sum(gc, f, false, prec));
    sums.push_back(dilog_sum(g, f, true, prec));
    sums.push_back(dilog_sum(gh, f, false, prec));
  }
  IdentityReport report;
  report.record("b_chain", spread(sums), options.effective_tolerance());

  RVector l1(n), l2(n);
  for (int k = 0; k < n; ++k) {
    l1(k) = Rational(k + 2, 1);
    l2(k) = Rational(1, 2 * k + 3);
  }
  const RMatrix scaled = RDiagonal(l1) * g * RDiagonal(l2);
  const RMatrix mr_prime = decompose_gauss(m_right).m_prime;
  const RMatrix ml_dprime = decompose_gauss(m_left).m_dprime;
  Rational worst(0);
  for (YFamily f : kAllFamilies) {
    const auto yg = y_values(g, f);
    worst = std::max(worst, max_abs_difference(yg, y_values(scaled, f)));
    worst = std::max(worst, max_abs_difference(yg, y_values(m_right, f)));
    worst = std::max(worst, max_abs_difference(yg, y_values(m_left, f)));
    worst = std::max(worst, max_abs_difference(y_values(gc, f), y_values(mr_prime, f)));
    worst = std::max(worst, max_abs_difference(y_values(gh, f), y_values(ml_dprime, f)));
  }
  report.record_exact("b_scaling_invariance", worst);
  return report;
}

RDiagonal random_diagonal(int n, int coord_max, Rng& rng) {
  boost::random::uniform_int_distribution<int> dist(1, coord_max);
  RVector d(n);
  for (int k = 0; k < n; ++k) {
    const int p = dist(rng);
    const int q = dist(rng);
    d(k) = Rational(p, q);
  }
  return RDiagonal(d);
}

int default_thread_count() {
  if (const char* env = std::getenv("TPDILOG_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min(v, 256L));
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

IdentityReport run_trials(const TrialConfig& config, const TrialBody& body) {
  if (config.trials < 1) throw std::invalid_argument("run_trials: trials must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  const int threads = std::min(config.threads > 0 ? config.threads : default_thread_count(), config.trials);

  std::vector<IdentityReport> results(static_cast<std::size_t>(config.trials));
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&] {
    PrecisionScope scope(config.options.precision_bits);
    for (int k = next++; k < config.trials; k = next++) {
      try {
        Rng rng(config.seed + static_cast<std::uint64_t>(k));
        const Coords x = random_coords(config.n, config.coord_max, rng);
        results[static_cast<std::size_t>(k)] = body(x, rng, config.options);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  IdentityReport report;
  report.n = config.n;
  report.seed = config.seed;
  report.precision_bits = config.options.precision_bits;
  for (const auto& r : results) {
    IdentityReport body_only = r;
    body_only.n = 0;
    body_only.trials = 0;
    report.merge(body_only);
  }
  report.trials = config.trials;
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace tpdilog
