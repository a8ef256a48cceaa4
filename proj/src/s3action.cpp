#include "tpdilog/s3action.hpp"

#include "tpdilog/involutions.hpp"

#include <algorithm>

namespace tpdilog {

std::vector<Rational> q_values(const Coords& x) {
  require_positive(x);
  const int n = x.n();
  std::vector<Rational> q;
  for (int i = 1; 2 * i < n; ++i) {
    Rational lhs(1);
    Rational rhs(1);
    for (int k = i + 1; k <= n; ++k) lhs *= x(i, k) / x(n + 1 - k, n + 1 - i);
    for (int k = 1; k <= i - 1; ++k) rhs *= x(k, i) / x(n + 1 - i, n + 1 - k);
    q.push_back(lhs / rhs);
  }
  return q;
}

std::vector<Rational> q_values(const RMatrix& m) { return q_values(matrix_to_jacobi(m)); }

Rational q_value_from_minors(const RMatrix& m, int i) {
  const int n = static_cast<int>(m.rows());
  if (i < 1 || i >= n) throw std::invalid_argument("q_value_from_minors: index out of range");
  const auto d = [&](int b) { return flag_minor_right(m, IndexSet::interval(1, b)); };
  return d(i) * d(n + 1 - i) / (d(i - 1) * d(n - i));
}

bool in_tilde(const Coords& x) {
  const auto q = q_values(x);
  return std::all_of(q.begin(), q.end(), [](const Rational& v) { return v == 1; });
}

Coords project_to_tilde(const Coords& x) {
  Coords y = x;
  const int n = x.n();
  // Q_i is linear in x_{i,i+1}; later steps only touch x_{k,k+1} with k > i,
  // which do not enter Q_i.
  for (int i = 1; 2 * i < n; ++i) y(i, i + 1) /= q_values(y)[static_cast<std::size_t>(i - 1)];
  return y;
}

bool d_criterion(const Coords& x) {
  const RDiagonal d = d_matrix(x);
  const int n = x.n();
  const Rational target = n % 2 == 1 ? Rational(1) : Rational(-1);
  for (int i = 1; i <= n; ++i)
    if (d.diagonal()(i - 1) * d.diagonal()(n - i) != target) return false;
  return true;
}

bool dp_squared_is_scalar(const Coords& x) {
  const RMatrix dp = d_matrix(x) * permutation_w0(x.n());
  const RMatrix sq = dp * dp;
  return sq == RMatrix(RMatrix::Identity(x.n(), x.n()) * sq(0, 0));
}

bool verify_mrho(const RMatrix& m) {
  return s3_value(m, S3Word::s1s2s1) == s3_value(m, S3Word::s2s1s2);
}

std::string_view word_name(S3Word w) {
  switch (w) {
    case S3Word::id: return "id";
    case S3Word::s1: return "s1";
    case S3Word::s2: return "s2";
    case S3Word::s2s1: return "s2s1";
    case S3Word::s1s2: return "s1s2";
    case S3Word::s1s2s1: return "s1s2s1";
    case S3Word::s2s1s2: return "s2s1s2";
  }
  return "?";
}

S3Word parse_word(std::string_view name) {
  for (S3Word w : kAllWords)
    if (word_name(w) == name) return w;
  throw std::invalid_argument("unknown S3 word \"" + std::string(name) + "\"");
}

int word_sign(S3Word w) { return word_letters(w).size() % 2 == 0 ? 1 : -1; }

std::vector<int> word_letters(S3Word w) {
  switch (w) {
    case S3Word::id: return {};
    case S3Word::s1: return {1};
    case S3Word::s2: return {2};
    case S3Word::s2s1: return {1, 2};
    case S3Word::s1s2: return {2, 1};
    case S3Word::s1s2s1: return {1, 2, 1};
    case S3Word::s2s1s2: return {2, 1, 2};
  }
  return {};
}

namespace {

using Perm = std::array<int, 3>;

Perm as_permutation(S3Word w) {
  Perm p = {0, 1, 2};
  for (int letter : word_letters(w)) {
    const int k = letter - 1;
    for (int& v : p)
      if (v == k) v = k + 1;
      else if (v == k + 1) v = k;
  }
  return p;
}

}  // namespace

S3Word compose(S3Word a, S3Word b) {
  const Perm pa = as_permutation(a);
  const Perm pb = as_permutation(b);
  Perm ab;
  for (int k = 0; k < 3; ++k) ab[static_cast<std::size_t>(k)] = pa[static_cast<std::size_t>(pb[static_cast<std::size_t>(k)])];
  for (S3Word w : kAllWords)
    if (as_permutation(w) == ab) return w;
  throw std::logic_error("compose: permutation without a word");
}

Coords s3_apply(const Coords& x, S3Word w) {
  Coords y = x;
  for (int letter : word_letters(w)) y = letter == 1 ? jacobi_prime(y) : jacobi_dprime(y);
  return y;
}

RMatrix s3_value(const RMatrix& m, S3Word w) {
  RMatrix y = m;
  for (int letter : word_letters(w)) {
    GaussTriple g = decompose_gauss(y);
    y = letter == 1 ? std::move(g.m_prime) : std::move(g.m_dprime);
  }
  return y;
}

Rational y_ratio(const Coords& x, int i, int j) {
  const int n = x.n();
  if (i < 1 || j <= i || j > n - 1) throw std::out_of_range("y_ratio: need 1 <= i < j <= n-1");
  return x(i, j) / x(i + 1, j + 1);
}

Rational y_ratio_bar(const Coords& x, int i, int j) { return y_ratio(bar(x), i, j); }

}  // namespace tpdilog
