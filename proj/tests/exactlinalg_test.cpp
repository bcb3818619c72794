#include <doctest.h>

#include <random>

#include "knotres/error.hpp"
#include "knotres/exactlinalg.hpp"

using namespace knotres;
using linalg::char_poly;
using linalg::det;
using linalg::inverse;
using linalg::pseudoinverse;
using linalg::rank;
using linalg::schur_complement;

namespace {

// Independent determinant oracle: cofactor expansion along the first row.
Rational det_cofactor(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  Rational sum = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m.at(0, j) == 0) continue;
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
    for (std::size_t k = 0; k < n; ++k)
      if (k != j) cols.push_back(k);
    Rational minor = det_cofactor(m.select(rows, cols));
    sum += (j % 2 == 0 ? 1 : -1) * m.at(0, j) * minor;
  }
  return sum;
}

RationalMatrix random_int_matrix(std::mt19937& rng, std::size_t n, int lo,
                                 int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = dist(rng);
  return m;
}

RationalMatrix cycle_laplacian(std::size_t n, int w) {
  RationalMatrix L(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    L.at(i, i) += w;
    L.at(i, (i + 1) % n) -= w;
  }
  return L;
}

}  // namespace

TEST_CASE("rational serialization round-trips") {
  CHECK(to_string(Rational(8, 3)) == "8/3");
  CHECK(to_string(Rational(-4, 2)) == "-2");
  CHECK(to_string(Rational(0)) == "0");
  CHECK(parse_rational("8/3") == Rational(8, 3));
  CHECK(parse_rational("-7/14") == Rational(-1, 2));
  CHECK(parse_rational("42") == 42);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
}

TEST_CASE("rank") {
  CHECK(rank(RationalMatrix(3, 3)) == 0);
  CHECK(rank(RationalMatrix::identity(4)) == 4);
  RationalMatrix m{{1, 2}, {2, 4}};
  CHECK(rank(m) == 1);
}

TEST_CASE("det basics and error") {
  CHECK(det(RationalMatrix{{2}}) == 2);
  CHECK(det(RationalMatrix{{1, -1}, {0, 1}}) == 1);
  CHECK(det(RationalMatrix::identity(5)) == 1);
  RationalMatrix rect(2, 3);
  CHECK_THROWS_AS(det(rect), Error);
}

TEST_CASE("det matches cofactor expansion up to 5x5") {
  std::mt19937 rng(12345);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int rep = 0; rep < 25; ++rep) {
      RationalMatrix m = random_int_matrix(rng, n, -4, 4);
      CHECK(det(m) == det_cofactor(m));
    }
}

TEST_CASE("inverse") {
  CHECK(inverse(RationalMatrix::identity(3)) == RationalMatrix::identity(3));
  RationalMatrix d{{2, 0}, {0, 4}};
  RationalMatrix expect{{Rational(1, 2), 0}, {0, Rational(1, 4)}};
  CHECK(inverse(d) == expect);
  CHECK_THROWS_AS(inverse(RationalMatrix(2, 2)), Error);
  std::mt19937 rng(99);
  for (int rep = 0; rep < 20; ++rep) {
    RationalMatrix m = random_int_matrix(rng, 4, -5, 5);
    if (det(m) == 0) continue;
    CHECK(m * inverse(m) == RationalMatrix::identity(4));
  }
}

TEST_CASE("pseudoinverse satisfies the Penrose conditions") {
  std::mt19937 rng(4242);
  for (int rep = 0; rep < 30; ++rep) {
    std::size_t n = 2 + static_cast<std::size_t>(rep % 4);
    RationalMatrix m = random_int_matrix(rng, n, -3, 3);
    // inject rank deficiency half the time
    if (rep % 2 == 0)
      for (std::size_t j = 0; j < n; ++j) m.at(n - 1, j) = m.at(0, j);
    RationalMatrix p = pseudoinverse(m);
    CHECK(linalg::penrose_conditions_hold(m, p));
  }
}

TEST_CASE("pseudoinverse special cases") {
  RationalMatrix z(3, 3);
  CHECK(pseudoinverse(z) == z);
  std::mt19937 rng(7);
  RationalMatrix m = random_int_matrix(rng, 3, -3, 3);
  m.at(0, 0) += 10;  // make it very likely invertible
  if (det(m) != 0) CHECK(pseudoinverse(m) == inverse(m));
  // transpose and negation identities
  RationalMatrix s = random_int_matrix(rng, 4, -2, 2);
  CHECK(pseudoinverse(s.transpose()) == pseudoinverse(s).transpose());
  CHECK(pseudoinverse(-s) == -pseudoinverse(s));
}

TEST_CASE("balanced fast path agrees with an adjugate-based oracle") {
  // for a balanced rank n-1 Laplacian, (L + J/n) is invertible and
  // L+ = (L + J/n)^{-1} - J/n; invert via cofactors as a second opinion
  for (std::size_t n : {3u, 4u, 5u}) {
    RationalMatrix L = cycle_laplacian(n, 1);
    RationalMatrix shifted = L + RationalMatrix::ones(n, Rational(1, n));
    Rational d = det_cofactor(shifted);
    REQUIRE(d != 0);
    RationalMatrix adj(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::size_t> rows, cols;
        for (std::size_t k = 0; k < n; ++k) {
          if (k != j) rows.push_back(k);
          if (k != i) cols.push_back(k);
        }
        Rational minor = det_cofactor(shifted.select(rows, cols));
        adj.at(i, j) = ((i + j) % 2 == 0 ? 1 : -1) * minor / d;
      }
    RationalMatrix oracle = adj - RationalMatrix::ones(n, Rational(1, n));
    CHECK(pseudoinverse(L) == oracle);
  }
}

TEST_CASE("char_poly convention det(M - xI)") {
  // zero 2x2 -> x^2
  Polynomial p = char_poly(RationalMatrix(2, 2));
  CHECK(p.coeffs() == std::vector<Rational>{0, 0, 1});
  // zero 3x3 -> -x^3 (odd dimension flips sign)
  Polynomial q = char_poly(RationalMatrix(3, 3));
  CHECK(q.coeffs() == std::vector<Rational>{0, 0, 0, -1});
  // companion check: char poly evaluated at eigenvalue of diag matrix is 0
  RationalMatrix d{{2, 0}, {0, 5}};
  Polynomial c = char_poly(d);
  CHECK(c.eval(2) == 0);
  CHECK(c.eval(5) == 0);
  CHECK(c.eval(0) == det(d));
}

TEST_CASE("char_poly is invariant under permutation conjugation") {
  std::mt19937 rng(31);
  RationalMatrix m = random_int_matrix(rng, 5, -3, 3);
  std::vector<std::size_t> perm{4, 2, 0, 3, 1};
  RationalMatrix pm = m.select(perm, perm);
  CHECK(char_poly(pm) == char_poly(m));
}

TEST_CASE("char_poly agrees with det(M - xI) at sample points") {
  std::mt19937 rng(77);
  for (int rep = 0; rep < 10; ++rep) {
    RationalMatrix m = random_int_matrix(rng, 4, -3, 3);
    Polynomial c = char_poly(m);
    for (int x = -2; x <= 2; ++x) {
      RationalMatrix shifted = m;
      for (std::size_t i = 0; i < 4; ++i) shifted.at(i, i) -= x;
      CHECK(c.eval(x) == det(shifted));
    }
  }
}

TEST_CASE("schur complement") {
  // block diagonal: complement equals the boundary block
  RationalMatrix m{{1, 2, 0}, {3, 4, 0}, {0, 0, 7}};
  RationalMatrix sc = schur_complement(m, {0, 1});
  CHECK(sc == RationalMatrix{{1, 2}, {3, 4}});
  // series law: path a-b-c with unit conductances, eliminate the middle
  RationalMatrix path{{1, -1, 0}, {-1, 2, -1}, {0, -1, 1}};
  RationalMatrix red = schur_complement(path, {0, 2});
  RationalMatrix expect{{Rational(1, 2), Rational(-1, 2)},
                        {Rational(-1, 2), Rational(1, 2)}};
  CHECK(red == expect);
  // singular interior
  RationalMatrix sing{{1, 0, 0}, {0, 0, 0}, {0, 0, 1}};
  CHECK_THROWS_AS(schur_complement(sing, {0}), Error);
  CHECK_THROWS_AS(schur_complement(sing, {7}), Error);
}

TEST_CASE("polynomial pretty printing") {
  Polynomial p(std::vector<Rational>{1, -1, 1});
  CHECK(p.str("t") == "t^2 - t + 1");
  CHECK(Polynomial().str() == "0");
  Polynomial q(std::vector<Rational>{0, Rational(-3, 2)});
  CHECK(q.str() == "-3/2*x");
}
