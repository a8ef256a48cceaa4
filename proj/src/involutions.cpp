#include "tpdilog/involutions.hpp"

#include <string>

namespace tpdilog {

LduFactors ldu_decompose(const RMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("ldu_decompose: matrix is not square");
  const Eigen::Index n = a.rows();
  RMatrix lower = RMatrix::Identity(n, n);
  RMatrix work = a;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (work(k, k) == 0) {
      throw NotTotallyPositive("leading principal minor of order " + std::to_string(k + 1) +
                               " vanishes; no LDU decomposition");
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      const Rational factor = work(i, k) / work(k, k);
      lower(i, k) = factor;
      if (factor != 0) work.row(i) -= factor * work.row(k);
    }
  }
  RVector d = work.diagonal();
  for (Eigen::Index i = 0; i < n; ++i) work.row(i) /= d(i);
  return {std::move(lower), std::move(d), std::move(work)};
}

GaussTriple decompose_gauss(const RMatrix& m) {
  require_unitriangular(m, "decompose_gauss");
  const RMatrix p = permutation_w0(static_cast<int>(m.rows()));
  LduFactors f = ldu_decompose(m * p);
  return {p * f.lower * p, RDiagonal(f.diagonal), std::move(f.upper)};
}

RDiagonal d_matrix(const Coords& x) {
  require_positive(x);
  const int n = x.n();
  RVector d(n);
  for (int i = 1; i <= n; ++i) {
    Rational num(1);
    Rational den(1);
    for (int k = i + 1; k <= n; ++k) num *= x(i, k);
    for (int k = 1; k <= i - 1; ++k) den *= x(k, i);
    d(i - 1) = (i % 2 == 1 ? num : Rational(-num)) / den;
  }
  return RDiagonal(d);
}

namespace {

RDiagonal absolute(const RDiagonal& d) {
  RVector v = d.diagonal();
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = abs(v(i));
  return RDiagonal(v);
}

RDiagonal reversed(const RDiagonal& d) { return RDiagonal(RVector(d.diagonal().reverse())); }

}  // namespace

RMatrix check_g(const RMatrix& g) {
  require_totally_positive(g, "check_g");
  const RDiagonal lambda(RVector(g.diagonal()));
  const RMatrix m = g * lambda.inverse();
  const GaussTriple gt = decompose_gauss(m);
  // P D̃ P is D̃ with its diagonal reversed.
  return gt.m_prime * lambda * reversed(absolute(gt.d));
}

RMatrix hat_g(const RMatrix& g) {
  require_totally_positive(g, "hat_g");
  const RDiagonal lambda(RVector(g.diagonal()));
  const RMatrix m = lambda.inverse() * g;
  const GaussTriple gt = decompose_gauss(m);
  return RDiagonal(RVector(lambda.diagonal().cwiseProduct(absolute(gt.d).diagonal()))) * gt.m_dprime;
}

RMatrix bfz_twist(const RMatrix& z) {
  require_unitriangular(z, "bfz_twist");
  const RMatrix p = permutation_w0(static_cast<int>(z.rows()));
  return ldu_decompose(p * z.transpose()).upper;
}

}  // namespace tpdilog
