#include "tpdilog/core.hpp"

#include <boost/random/uniform_int_distribution.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <mutex>
#include <sstream>

namespace tpdilog {

// ---------------------------------------------------------------------------
// IndexSet / Triple
// ---------------------------------------------------------------------------

IndexSet::IndexSet(std::initializer_list<int> elements) : IndexSet(std::vector<int>(elements)) {}

IndexSet::IndexSet(std::vector<int> elements) : elements_(std::move(elements)) {
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    if (elements_[k] < 1 || (k > 0 && elements_[k] <= elements_[k - 1])) {
      throw std::invalid_argument("IndexSet: labels must be positive and strictly increasing");
    }
  }
}

IndexSet IndexSet::interval(int a, int b) {
  IndexSet s;
  for (int k = a; k <= b; ++k) s.elements_.push_back(k);
  if (!s.elements_.empty() && s.elements_.front() < 1) throw std::invalid_argument("IndexSet: interval below 1");
  return s;
}

IndexSet IndexSet::from_mask(std::uint64_t mask) {
  IndexSet s;
  for (int k = 0; k < 64; ++k)
    if (mask & (std::uint64_t{1} << k)) s.elements_.push_back(k + 1);
  return s;
}

IndexSet IndexSet::operator|(const IndexSet& other) const {
  IndexSet s;
  std::set_union(elements_.begin(), elements_.end(), other.elements_.begin(), other.elements_.end(),
                 std::back_inserter(s.elements_));
  return s;
}

IndexSet IndexSet::reflected(int n) const {
  IndexSet s;
  s.elements_.reserve(elements_.size());
  for (auto it = elements_.rbegin(); it != elements_.rend(); ++it) {
    if (*it > n) throw std::invalid_argument("IndexSet::reflected: label exceeds n");
    s.elements_.push_back(n + 1 - *it);
  }
  return s;
}

bool IndexSet::contains(int label) const { return std::binary_search(elements_.begin(), elements_.end(), label); }

std::string IndexSet::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t k = 0; k < elements_.size(); ++k) out << (k ? "," : "") << elements_[k];
  out << '}';
  return out.str();
}

void Triple::validate(int n) const {
  if (!(1 <= a && a < b && b < c && c <= n)) {
    throw std::invalid_argument("triple " + to_string() + " violates 1 <= a < b < c <= " + std::to_string(n));
  }
}

std::string Triple::to_string() const {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

std::vector<Triple> triples(int n) {
  std::vector<Triple> out;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) out.push_back({a, b, c});
  return out;
}

Coords random_coords(int n, int coord_max, Rng& rng) {
  if (coord_max < 1) throw std::invalid_argument("random_coords: coordinate range must be >= 1");
  boost::random::uniform_int_distribution<int> dist(1, coord_max);
  Coords x(n, Rational(1));
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const int p = dist(rng);
      const int q = dist(rng);
      x(i, j) = Rational(p, q);
    }
  }
  return x;
}

// ---------------------------------------------------------------------------
// Jacobi recovery
// ---------------------------------------------------------------------------

void require_unitriangular(const RMatrix& m, const char* context) {
  if (!is_upper_unitriangular(m)) {
    throw std::invalid_argument(std::string(context) + ": matrix is not upper unitriangular");
  }
}

Coords matrix_to_jacobi(const RMatrix& m) {
  require_unitriangular(m, "matrix_to_jacobi");
  const int n = static_cast<int>(m.rows());
  if (n < 2) throw std::invalid_argument("matrix_to_jacobi: dimension must be at least 2");

  std::map<std::pair<int, int>, Rational> corner;
  const auto delta = [&](int a, int b) -> const Rational& {
    auto [it, inserted] = corner.try_emplace({a, b});
    if (inserted) {
      it->second = a > b ? Rational(1) : flag_minor_right(m, IndexSet::interval(a, b));
      if (it->second == 0) {
        throw NotTotallyPositive("corner minor Δ_[" + std::to_string(a) + "," + std::to_string(b) +
                                 "] vanishes: not in the totally positive stratum");
      }
    }
    return it->second;
  };

  Coords x(n, Rational(1));
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const Rational value =
          delta(j - i, j - 1) * delta(j - i + 2, j) / (delta(j - i + 1, j - 1) * delta(j - i + 1, j));
      if (value <= 0) {
        throw NotTotallyPositive("recovered coordinate x_{" + std::to_string(i) + "," + std::to_string(j) +
                                 "} = " + to_canonical_string(value) + " is not positive");
      }
      x(i, j) = value;
    }
  }
  if (jacobi_to_matrix(x) != m) {
    throw NotTotallyPositive("matrix_to_jacobi: matrix is not reproduced by its corner-minor coordinates");
  }
  return x;
}

RMatrix permutation_w0(int n) {
  if (n < 1) throw std::invalid_argument("permutation_w0: n must be positive");
  RMatrix p = RMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) p(i, n - 1 - i) = 1;
  return p;
}

RDiagonal sign_matrix(int n) {
  if (n < 1) throw std::invalid_argument("sign_matrix: n must be positive");
  RVector d(n);
  for (int i = 0; i < n; ++i) d(i) = (i % 2 == 0) ? 1 : -1;
  return RDiagonal(d);
}

// ---------------------------------------------------------------------------
// Total positivity
// ---------------------------------------------------------------------------

namespace {

constexpr int kBruteForceLimit = 6;

std::vector<IndexSet> subsets_of_size(int n, int k) {
  std::vector<IndexSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
    if (std::popcount(mask) == k) out.push_back(IndexSet::from_mask(mask));
  return out;
}

/// Generic witness: Jacobi coordinates set to distinct primes.
RMatrix generic_witness(int n) {
  static constexpr std::array<int, 15> kPrimes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  Coords x(n, Rational(1));
  std::size_t next = 0;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) x(i, j) = kPrimes.at(next++);
  return jacobi_to_matrix(x);
}

struct MinorPattern {
  std::vector<std::pair<IndexSet, IndexSet>> nonvanishing;
};

const MinorPattern& minor_pattern(int n) {
  static std::mutex mutex;
  static std::map<int, MinorPattern> cache;
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace(n);
  if (inserted) {
    const RMatrix witness = generic_witness(n);
    for (int k = 1; k <= n; ++k) {
      const auto sets = subsets_of_size(n, k);
      for (const auto& rows : sets)
        for (const auto& cols : sets)
          if (minor(witness, rows, cols) != 0) it->second.nonvanishing.emplace_back(rows, cols);
    }
  }
  return it->second;
}

}  // namespace

std::string MinorWitness::describe() const {
  return "minor rows " + rows.to_string() + " cols " + cols.to_string() + " = " + to_canonical_string(value);
}

std::optional<MinorWitness> find_nonpositive_minor(const RMatrix& m) {
  if (!is_upper_triangular(m)) throw std::invalid_argument("is_totally_positive: matrix is not upper triangular");
  const int n = static_cast<int>(m.rows());
  if (n <= kBruteForceLimit) {
    for (const auto& [rows, cols] : minor_pattern(n).nonvanishing) {
      Rational v = minor(m, rows, cols);
      if (v <= 0) return MinorWitness{rows, cols, std::move(v)};
    }
    return std::nullopt;
  }
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const IndexSet set = IndexSet::from_mask(mask);
    const IndexSet last = IndexSet::interval(n + 1 - set.size(), n);
    const IndexSet first = IndexSet::interval(1, set.size());
    if (Rational v = minor(m, set, last); v <= 0) return MinorWitness{set, last, std::move(v)};
    if (Rational v = minor(m, first, set); v <= 0) return MinorWitness{first, set, std::move(v)};
  }
  return std::nullopt;
}

void require_totally_positive(const RMatrix& m, const char* context) {
  if (auto witness = find_nonpositive_minor(m)) {
    throw NotTotallyPositive(std::string(context) + ": not totally positive (" + witness->describe() + ")");
  }
}

}  // namespace tpdilog
