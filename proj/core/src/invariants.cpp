#include "knotres/invariants.hpp"

#include "knotres/error.hpp"
#include "knotres/exactlinalg.hpp"

namespace knotres {

namespace {

nlohmann::json coeff_list(const Polynomial& p) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_string(c));
  return a;
}

nlohmann::json matrix_json(const RationalMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

nlohmann::json InvariantReport::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["omega"] = omega;
  j["fp"] = to_string(fp);
  j["rank"] = rank_inv;
  j["char_poly"] = coeff_list(char_poly);
  j["alexander"] = coeff_list(alexander);
  j["resistance"] = matrix_json(resistance);
  j["checks"] = {{"oracle", check_oracle},
                 {"trace_identity", check_trace_identity},
                 {"penrose", check_penrose},
                 {"balanced", balanced}};
  return j;
}

Rational fp(const RationalMatrix& L) {
  return (L.transpose() * linalg::pseudoinverse(L)).trace();
}

std::size_t rank_invariant(const RationalMatrix& L) {
  Rational t = (L * linalg::pseudoinverse(L)).trace();
  if (denominator(t) != 1 || t < 0)
    fail("PenroseViolation", "trace(L L+) is not a nonnegative integer");
  auto r = static_cast<std::size_t>(numerator(t).convert_to<unsigned long>());
  if (r != linalg::rank(L))
    fail("PenroseViolation", "trace(L L+) != rank(L)");
  return r;
}

RationalMatrix resistance_matrix(const RationalMatrix& L) {
  RationalMatrix p = linalg::pseudoinverse(L);
  const std::size_t n = p.rows();
  RationalMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      r.at(i, j) = p.at(i, i) + p.at(j, j) - 2 * p.at(i, j);
  return r;
}

Rational fp_via_resistance(const TaitGraph& g) {
  if (g.edges.empty()) return 0;
  int omega = g.edges.front().weight;
  for (const auto& e : g.edges)
    if (e.weight != omega)
      fail("NonUniformWeights", "edge weights are not a common constant");
  RationalMatrix r = resistance_matrix(laplacian(g));
  Rational sum = 0;
  for (const auto& e : g.edges)
    sum += r.at(static_cast<std::size_t>(e.tail),
                static_cast<std::size_t>(e.head));
  return Rational(omega) / 2 * sum;
}

std::pair<Rational, Rational> trace_identity_check(const RationalMatrix& L) {
  RationalMatrix p = linalg::pseudoinverse(L);
  const std::size_t n = p.rows();
  RationalMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      r.at(i, j) = p.at(i, i) + p.at(j, j) - 2 * p.at(i, j);
  Rational lhs = (L.transpose() * r).trace();
  Rational rhs = -2 * (L.transpose() * p).trace();
  return {lhs, rhs};
}

Polynomial alexander(const RationalMatrix& L, std::size_t del, bool raw) {
  if (!L.square()) fail("NonSquare", "alexander");
  const std::size_t n = L.rows();
  if (del >= n) fail("IndexOutOfRange", "deleted vertex index");
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i)
    if (i != del) keep.push_back(i);
  RationalMatrix S = L.select(keep, keep);
  RationalMatrix St = S.transpose();
  const std::size_t m = keep.size();
  // det(S - t*S^T) has degree <= m, so m+1 exact evaluations determine it;
  // recover the coefficients by Lagrange interpolation over the rationals.
  const std::size_t deg = m;
  std::vector<Rational> xs, ys;
  for (std::size_t k = 0; k <= deg; ++k) {
    Rational x(static_cast<long>(k));
    RationalMatrix M = S - St.scaled(x);
    xs.push_back(x);
    ys.push_back(linalg::det(M));
  }
  // Lagrange interpolation on the (deg+1) samples
  std::vector<Rational> coeffs(deg + 1, Rational(0));
  for (std::size_t k = 0; k <= deg; ++k) {
    // basis poly prod_{j != k} (x - xs[j]) / (xs[k] - xs[j])
    std::vector<Rational> basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t j = 0; j <= deg; ++j) {
      if (j == k) continue;
      denom *= xs[k] - xs[j];
      std::vector<Rational> nb(basis.size() + 1, Rational(0));
      for (std::size_t i = 0; i < basis.size(); ++i) {
        nb[i + 1] += basis[i];
        nb[i] -= basis[i] * xs[j];
      }
      basis = std::move(nb);
    }
    Rational scale = ys[k] / denom;
    for (std::size_t i = 0; i < basis.size(); ++i)
      coeffs[i] += basis[i] * scale;
  }
  Polynomial p{std::move(coeffs)};
  if (raw || p.is_zero()) return p;
  p = p.shifted_to_constant();
  if (p.coeff(0) < 0) p = -p;
  return p;
}

InvariantReport report(const TaitGraph& g) {
  InvariantReport r;
  r.n = g.n;
  r.balanced = g.balanced;
  bool uniform = !g.edges.empty();
  for (const auto& e : g.edges)
    if (e.weight != g.edges.front().weight) uniform = false;
  r.omega = uniform ? g.edges.front().weight : 0;

  RationalMatrix L = laplacian(g);
  RationalMatrix p = linalg::pseudoinverse(L);
  r.check_penrose = linalg::penrose_conditions_hold(L, p);
  r.fp = (L.transpose() * p).trace();
  r.rank_inv = rank_invariant(L);
  r.resistance = resistance_matrix(L);
  r.char_poly = linalg::char_poly(L);
  if (g.n >= 1) r.alexander = alexander(L, 0);
  if (uniform && g.balanced)
    r.check_oracle = fp_via_resistance(g) == r.fp;
  auto [lhs, rhs] = trace_identity_check(L);
  r.check_trace_identity = lhs == rhs;
  return r;
}

}  // namespace knotres
