#pragma once

// Exact linear algebra on upper triangular matrices: Jacobi factorization
// and its inverse, general and flag minors, total positivity.
//
// All indices in this API are 1-based: rows, columns, Jacobi coordinates
// x_{ij} and index sets use the labels 1..n.

#include "tpdilog/rational.hpp"

#include <boost/random/mersenne_twister.hpp>

#include <cmath>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tpdilog {

/// Raised when an input is outside the totally positive stratum required by an operation.
class NotTotallyPositive : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

using Rng = boost::random::mt19937_64;

// ---------------------------------------------------------------------------
// Index sets and triples
// ---------------------------------------------------------------------------

/// Strictly increasing list of positive labels.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<int> elements);
  explicit IndexSet(std::vector<int> elements);

  /// [a, b]; empty when b < a.
  static IndexSet interval(int a, int b);
  /// Set whose bit k (k = 0..) marks label k + 1.
  static IndexSet from_mask(std::uint64_t mask);

  /// Set union.
  IndexSet operator|(const IndexSet& other) const;
  /// The set with label a replaced by n + 1 - a.
  IndexSet reflected(int n) const;

  int size() const noexcept { return static_cast<int>(elements_.size()); }
  bool empty() const noexcept { return elements_.empty(); }
  bool contains(int label) const;
  int operator[](int k) const { return elements_[static_cast<std::size_t>(k)]; }
  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }
  const std::vector<int>& elements() const noexcept { return elements_; }
  /// True if every label lies in [1, n].
  bool within(int n) const noexcept { return empty() || elements_.back() <= n; }

  std::string to_string() const;

  auto operator<=>(const IndexSet&) const = default;

 private:
  std::vector<int> elements_;
};

/// Point (a, b, c) of the discrete tetrahedron, 1 <= a < b < c <= n.
struct Triple {
  int a = 1;
  int b = 2;
  int c = 3;

  /// Throws std::invalid_argument unless 1 <= a < b < c <= n.
  void validate(int n) const;
  /// (n+1-c, n+1-b, n+1-a).
  Triple reversed(int n) const { return {n + 1 - c, n + 1 - b, n + 1 - a}; }
  std::string to_string() const;

  auto operator<=>(const Triple&) const = default;
};

/// All triples of [1, n] in lexicographic order.
std::vector<Triple> triples(int n);

// ---------------------------------------------------------------------------
// Jacobi coordinates
// ---------------------------------------------------------------------------

/// The coordinates x_{ij}, 1 <= i < j <= n, of the factorization
/// M = 𝕁_1 ⋯ 𝕁_{n-1},  𝕁_k = J_k(x_{1,k+1}) J_{k-1}(x_{2,k+1}) ⋯ J_1(x_{k,k+1}).
template <typename Scalar>
class JacobiCoords {
 public:
  JacobiCoords(int n, const Scalar& fill) : n_(n) {
    if (n < 2) throw std::invalid_argument("JacobiCoords: dimension must be at least 2");
    values_.assign(static_cast<std::size_t>(n) * (n - 1) / 2, fill);
  }

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return values_.size(); }

  const Scalar& operator()(int i, int j) const { return values_[offset(i, j)]; }
  Scalar& operator()(int i, int j) { return values_[offset(i, j)]; }

  /// Storage in row-major (i, j) order: x12, x13, ..., x1n, x23, ...
  const std::vector<Scalar>& values() const noexcept { return values_; }

  template <typename F>
  auto map(F&& f) const {
    using Out = std::decay_t<decltype(f(values_.front()))>;
    JacobiCoords<Out> out(n_, Out(0));
    for (int i = 1; i < n_; ++i)
      for (int j = i + 1; j <= n_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  friend bool operator==(const JacobiCoords& a, const JacobiCoords& b) {
    return a.n_ == b.n_ && a.values_ == b.values_;
  }

 private:
  std::size_t offset(int i, int j) const {
    if (i < 1 || j <= i || j > n_) {
      throw std::out_of_range("JacobiCoords: index (" + std::to_string(i) + "," + std::to_string(j) +
                              ") outside 1 <= i < j <= " + std::to_string(n_));
    }
    return static_cast<std::size_t>((i - 1) * (2 * n_ - i) / 2 + (j - i - 1));
  }

  int n_;
  std::vector<Scalar> values_;
};

using Coords = JacobiCoords<Rational>;

/// Throws std::invalid_argument naming the first coordinate that is not > 0.
template <typename Scalar>
void require_positive(const JacobiCoords<Scalar>& coords) {
  for (int i = 1; i < coords.n(); ++i)
    for (int j = i + 1; j <= coords.n(); ++j)
      if (!(coords(i, j) > Scalar(0)))
        throw std::invalid_argument("Jacobi coordinate x_{" + std::to_string(i) + "," + std::to_string(j) +
                                    "} is not positive");
}

/// x_{ij} = p/q with p, q uniform in [1, coord_max].
Coords random_coords(int n, int coord_max, Rng& rng);

// ---------------------------------------------------------------------------
// Determinants and minors
// ---------------------------------------------------------------------------

/// Fraction-free (Bareiss) elimination. Exact for Rational; for inexact
/// scalars the pivot is chosen by magnitude.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  using Eigen::Index;
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix is not square");
  const Index n = a.rows();
  if (n == 0) return Scalar(1);

  Matrix<Scalar> m = a;
  Scalar previous(1);
  bool negate = false;
  for (Index k = 0; k < n; ++k) {
    Index pivot = -1;
    if constexpr (is_exact_scalar_v<Scalar>) {
      for (Index i = k; i < n && pivot < 0; ++i)
        if (m(i, k) != 0) pivot = i;
    } else {
      using std::abs;
      Scalar best(0);
      for (Index i = k; i < n; ++i) {
        Scalar mag = abs(m(i, k));
        if (mag > best) {
          best = mag;
          pivot = i;
        }
      }
    }
    if (pivot < 0) return Scalar(0);
    if (pivot != k) {
      m.row(k).swap(m.row(pivot));
      negate = !negate;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
    }
    previous = m(k, k);
  }
  return negate ? Scalar(-m(n - 1, n - 1)) : m(n - 1, n - 1);
}

/// Δ_rows^cols(M): determinant of the rows × cols submatrix; Δ_∅^∅ = 1.
template <typename Derived>
typename Derived::Scalar minor(const Eigen::MatrixBase<Derived>& m, const IndexSet& rows, const IndexSet& cols) {
  using Scalar = typename Derived::Scalar;
  if (rows.size() != cols.size()) {
    throw std::invalid_argument("minor: row set " + rows.to_string() + " and column set " + cols.to_string() +
                                " differ in size");
  }
  if (!rows.within(static_cast<int>(m.rows())) || !cols.within(static_cast<int>(m.cols()))) {
    throw std::invalid_argument("minor: index set exceeds matrix dimension");
  }
  const int k = rows.size();
  Matrix<Scalar> sub(k, k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) sub(r, c) = m(rows[r] - 1, cols[c] - 1);
  return determinant(sub);
}

/// Δ_I(M): rows I, last |I| columns.
template <typename Derived>
typename Derived::Scalar flag_minor_right(const Eigen::MatrixBase<Derived>& m, const IndexSet& rows) {
  const int n = static_cast<int>(m.cols());
  return minor(m, rows, IndexSet::interval(n + 1 - rows.size(), n));
}

/// Δ^J(M): first |J| rows, columns J.
template <typename Derived>
typename Derived::Scalar flag_minor_upper(const Eigen::MatrixBase<Derived>& m, const IndexSet& cols) {
  return minor(m, IndexSet::interval(1, cols.size()), cols);
}

// ---------------------------------------------------------------------------
// Jacobi factorization
// ---------------------------------------------------------------------------

/// Multiplies out the J_k factors. Throws std::invalid_argument on a
/// non-positive coordinate.
template <typename Scalar>
Matrix<Scalar> jacobi_to_matrix(const JacobiCoords<Scalar>& coords) {
  require_positive(coords);
  const int n = coords.n();
  Matrix<Scalar> m = Matrix<Scalar>::Identity(n, n);
  for (int k = 1; k < n; ++k) {
    for (int i = 1; i <= k; ++i) {
      // Right multiplication by J_s(x) adds x * (column s) to column s + 1.
      const int s = k + 1 - i;
      const Scalar& x = coords(i, k + 1);
      for (int r = 0; r < s; ++r) m(r, s) += x * m(r, s - 1);
    }
  }
  return m;
}

/// Recovers the Jacobi coordinates from ratios of corner flag minors.
/// Throws NotTotallyPositive if a corner minor vanishes, a coordinate is not
/// positive, or M is not reproduced by the recovered coordinates.
Coords matrix_to_jacobi(const RMatrix& m);

template <typename Derived>
bool is_upper_triangular(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 1; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < i; ++j)
      if (m(i, j) != 0) return false;
  return true;
}

template <typename Derived>
bool is_upper_unitriangular(const Eigen::MatrixBase<Derived>& m) {
  if (!is_upper_triangular(m)) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    if (m(i, i) != 1) return false;
  return true;
}

/// Throws std::invalid_argument unless M is square upper unitriangular.
void require_unitriangular(const RMatrix& m, const char* context);

/// P_{ij} = δ_{i+j,n+1}.
RMatrix permutation_w0(int n);
/// S = diag(1, -1, 1, ...).
RDiagonal sign_matrix(int n);

// ---------------------------------------------------------------------------
// Total positivity
// ---------------------------------------------------------------------------

struct MinorWitness {
  IndexSet rows;
  IndexSet cols;
  Rational value;

  std::string describe() const;
};

/// First minor violating total positivity, if any.
///
/// For n <= 6 every minor is inspected; a minor is required to be positive
/// unless it vanishes on a generic witness (Jacobi coordinates set to
/// distinct primes), which is treated as vanishing identically. This is a
/// probabilistic test of "identically zero". For n > 6 only the right and
/// upper flag minors are inspected, relying on the fact (Berenstein,
/// Fomin, Zelevinsky) that their positivity characterises the totally
/// positive upper triangular matrices.
///
/// Throws std::invalid_argument if M is not upper triangular.
std::optional<MinorWitness> find_nonpositive_minor(const RMatrix& m);

inline bool is_totally_positive(const RMatrix& m) { return !find_nonpositive_minor(m).has_value(); }

/// Throws NotTotallyPositive (message names the failing minor) unless M is totally positive.
void require_totally_positive(const RMatrix& m, const char* context);

}  // namespace tpdilog
