#pragma once

// Numerical verification of the dilogarithm identities over T_n: the paired
// sums with constant value C(n,3), the twelve-term chain, its S₃ form, and
// the extension from N⁺ₙ to B⁺ₙ.

#include "tpdilog/bigfloat.hpp"
#include "tpdilog/s3action.hpp"
#include "tpdilog/yvars.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tpdilog {

struct VerifyOptions {
  int precision_bits = BigFloat::kDefaultPrecision;
  /// Defaults to 2^(-precision_bits/2).
  std::optional<BigFloat> tolerance;
  /// Corrupts one Y-value of the chain (negative control).
  bool sabotage = false;

  BigFloat effective_tolerance() const;
};

struct IdentityResult {
  BigFloat max_residual = BigFloat::zero(64);
  bool pass = true;
};

/// Per-identity maximum residuals. Merging is associative and commutative.
struct IdentityReport {
  int n = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  int precision_bits = BigFloat::kDefaultPrecision;
  std::map<std::string, IdentityResult> identities;
  double elapsed_seconds = 0.0;

  /// Records a residual against a tolerance.
  void record(const std::string& name, const BigFloat& residual, const BigFloat& tolerance);
  /// Records an exact check: pass iff the residual is zero.
  void record_exact(const std::string& name, const Rational& residual);
  void record_exact(const std::string& name, bool holds);

  void merge(const IdentityReport& other);
  bool all_pass() const;
};

/// max - min.
BigFloat spread(const std::vector<BigFloat>& values);

/// Σ_{T_n} l(y) over the given values, or l(1/y) when `invert`.
BigFloat sum_l(const std::vector<Rational>& ys, bool invert, int precision_bits);

/// Σ_{T_n} l(Y(M)) or Σ l(1/Y(M)); Y computed exactly, converted once.
BigFloat dilog_sum(const RMatrix& m, YFamily family, bool invert,
                   int precision_bits = BigFloat::kDefaultPrecision);

/// Σ l(Y_abc(M)) + Σ l(Y_abc(M′)) = C(n,3) and Σ l(Y^abc(M)) + Σ l(Y^abc(M″)) = C(n,3).
IdentityReport verify_sum_constant(const RMatrix& m, const VerifyOptions& options = {});

/// The twelve sums (four families, each at M′, inverted at M, and at M″)
/// agree pairwise.
IdentityReport verify_chain(const RMatrix& m, const VerifyOptions& options = {});

/// Σ l(Y_f(s(M))^{sgn s}).
BigFloat s3_sum(const RMatrix& m, YFamily family, S3Word word, int precision_bits = BigFloat::kDefaultPrecision);

/// The families in the order of the S₃ identities: Y_abc, Ỹ^abc, Ỹ_abc, Y^abc.
inline constexpr std::array<YFamily, 4> kS3FamilyOrder = {YFamily::lower, YFamily::upper_tilde, YFamily::lower_tilde,
                                                          YFamily::upper};

/// One choice of words s1..s4, assigned to kS3FamilyOrder.
IdentityReport verify_s3_form(const RMatrix& m, const std::array<S3Word, 4>& words, const VerifyOptions& options = {});
/// Every choice of words: since each sum depends on a single word, this
/// evaluates the 4 x 7 sums once and checks their spread.
IdentityReport verify_s3_exhaustive(const RMatrix& m, const VerifyOptions& options = {});

/// The chain with M, M′, M″ replaced by G, Ǧ, Ĝ, plus the exact scaling
/// invariance Z(Λ₁ G Λ₂) = Z(G) of all four families.
IdentityReport verify_b_version(const RMatrix& g, const VerifyOptions& options = {});

/// Random positive diagonal matrix with entries p/q, p, q in [1, coord_max].
RDiagonal random_diagonal(int n, int coord_max, Rng& rng);

// ---------------------------------------------------------------------------
// Trial campaigns
// ---------------------------------------------------------------------------

/// TPDILOG_THREADS if set to a positive integer, otherwise the hardware
/// concurrency (at least 1).
int default_thread_count();

struct TrialConfig {
  int n = 4;
  int trials = 1;
  std::uint64_t seed = 0;
  int coord_max = 10;
  int threads = 0;  // 0: default_thread_count()
  VerifyOptions options;
};

/// One trial: receives the random coordinates and the trial's generator
/// (already advanced past coordinate generation).
using TrialBody = std::function<IdentityReport(const Coords&, Rng&, const VerifyOptions&)>;

/// Runs trial k with generator seed + k on a bounded worker pool and merges
/// the reports.
IdentityReport run_trials(const TrialConfig& config, const TrialBody& body);

}  // namespace tpdilog
