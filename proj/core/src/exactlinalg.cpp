#include "knotres/exactlinalg.hpp"

#include <algorithm>

#include "knotres/error.hpp"

namespace knotres {
namespace linalg {

namespace {

// Gauss-Jordan on [M | I]; returns false when singular.
bool invert_inplace(RationalMatrix m, RationalMatrix& out) {
  const std::size_t n = m.rows();
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m.at(piv, col) == 0) ++piv;
    if (piv == n) return false;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m.at(piv, j), m.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    }
    Rational p = m.at(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      m.at(col, j) /= p;
      inv.at(col, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m.at(i, col) == 0) continue;
      Rational f = m.at(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        m.at(i, j) -= f * m.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  out = std::move(inv);
  return true;
}

bool all_ones_in_kernel(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i) {
    Rational row = 0, col = 0;
    for (std::size_t j = 0; j < n; ++j) {
      row += m.at(i, j);
      col += m.at(j, i);
    }
    if (row != 0 || col != 0) return false;
  }
  return true;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) {
  RationalMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = r;
    while (piv < rows && a.at(piv, col) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(piv, j), a.at(r, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a.at(i, col) == 0) continue;
      Rational f = a.at(i, col) / a.at(r, col);
      for (std::size_t j = col; j < cols; ++j) a.at(i, j) -= f * a.at(r, j);
    }
    ++r;
  }
  return r;
}

Rational det(const RationalMatrix& m) {
  if (!m.square()) fail("NonSquare", "det");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination on the numerator/denominator-cleared
  // matrix would need a common denominator; with exact rationals the plain
  // Bareiss recurrence still applies verbatim.
  RationalMatrix a = m;
  Rational prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a.at(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) =
            (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (!m.square()) fail("NonSquare", "inverse");
  RationalMatrix out;
  if (!invert_inplace(m, out)) fail("Singular", "matrix not invertible");
  return out;
}

bool penrose_conditions_hold(const RationalMatrix& m,
                             const RationalMatrix& p) {
  RationalMatrix mp = m * p, pm = p * m;
  return mp * m == m && pm * p == p && mp.transpose() == mp &&
         pm.transpose() == pm;
}

RationalMatrix pseudoinverse(const RationalMatrix& m) {
  if (!m.square()) fail("NonSquare", "pseudoinverse");
  const std::size_t n = m.rows();
  if (n == 0) return m;
  RationalMatrix p;
  bool done = false;
  if (all_ones_in_kernel(m)) {
    // Balanced Laplacian: the all-ones vector spans kernel and cokernel
    // whenever rank is n-1, so (M + J/n) is invertible and
    // M+ = (M + J/n)^{-1} - J/n. Fall through to the general path when the
    // rank deficiency is larger than one.
    RationalMatrix jn = RationalMatrix::ones(n, Rational(1, n));
    RationalMatrix shifted;
    if (invert_inplace(m + jn, shifted)) {
      p = shifted - jn;
      done = true;
    }
  }
  if (!done) {
    // Rank factorization from row reduction: C = rref pivot rows, B = the
    // corresponding columns of M.
    RationalMatrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < n; ++col) {
      std::size_t piv = r;
      while (piv < n && a.at(piv, col) == 0) ++piv;
      if (piv == n) continue;
      if (piv != r)
        for (std::size_t j = 0; j < n; ++j)
          std::swap(a.at(piv, j), a.at(r, j));
      Rational pv = a.at(r, col);
      for (std::size_t j = 0; j < n; ++j) a.at(r, j) /= pv;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == r || a.at(i, col) == 0) continue;
        Rational f = a.at(i, col);
        for (std::size_t j = 0; j < n; ++j) a.at(i, j) -= f * a.at(r, j);
      }
      pivots.push_back(col);
      ++r;
    }
    if (r == 0) return RationalMatrix(n, n);  // zero matrix
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    std::vector<std::size_t> rrows(r);
    for (std::size_t i = 0; i < r; ++i) rrows[i] = i;
    RationalMatrix C = a.select(rrows, all);  // r x n
    RationalMatrix B = m.select(all, pivots);  // n x r
    RationalMatrix Ct = C.transpose(), Bt = B.transpose();
    p = Ct * inverse(C * Ct) * inverse(Bt * B) * Bt;
  }
  if (!penrose_conditions_hold(m, p))
    fail("PenroseViolation", "internal pseudoinverse inconsistency");
  return p;
}

Polynomial char_poly(const RationalMatrix& m) {
  if (!m.square()) fail("NonSquare", "char_poly");
  const std::size_t n = m.rows();
  // Faddeev-LeVerrier: det(x*I - M) = x^n + c_{n-1} x^{n-1} + ... + c_0,
  // then flip to the det(M - x*I) convention by scaling with (-1)^n.
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RationalMatrix mk(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = M * M_{k-1} + c_{n-k+1} * I
    RationalMatrix t = m * mk;
    for (std::size_t i = 0; i < n; ++i) t.at(i, i) += c[n - k + 1];
    mk = std::move(t);
    Rational tr = (m * mk).trace();
    c[n - k] = -tr / Rational(k);
  }
  if (n % 2 == 1)
    for (auto& x : c) x = -x;
  return Polynomial(std::move(c));
}

RationalMatrix schur_complement(const RationalMatrix& m,
                                const std::vector<std::size_t>& boundary) {
  if (!m.square()) fail("NonSquare", "schur_complement");
  const std::size_t n = m.rows();
  std::vector<bool> isb(n, false);
  for (auto b : boundary) {
    if (b >= n) fail("IndexOutOfRange", "boundary index");
    isb[b] = true;
  }
  std::vector<std::size_t> interior;
  for (std::size_t i = 0; i < n; ++i)
    if (!isb[i]) interior.push_back(i);
  RationalMatrix ext = m.select(boundary, boundary);
  if (interior.empty()) return ext;
  RationalMatrix eb = m.select(boundary, interior);
  RationalMatrix ie = m.select(interior, boundary);
  RationalMatrix ii = m.select(interior, interior);
  RationalMatrix ii_inv;
  if (!invert_inplace(ii, ii_inv))
    fail("SingularInterior", "interior block not invertible");
  return ext - eb * ii_inv * ie;
}

}  // namespace linalg
}  // namespace knotres
