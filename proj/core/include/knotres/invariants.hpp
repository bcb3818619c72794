#pragma once

#include <cstddef>
#include <utility>

#include <json.hpp>

#include "knotres/matrix.hpp"
#include "knotres/polynomial.hpp"
#include "knotres/taitgraph.hpp"

namespace knotres {

// Aggregated invariants of one Tait graph / Laplacian.
struct InvariantReport {
  int n = 0;
  int omega = 0;  // common edge weight; 0 when weights are not uniform
  Rational fp;
  std::size_t rank_inv = 0;
  RationalMatrix resistance;
  Polynomial alexander;  // normalized; in the variable t, constant term first
  Polynomial char_poly;  // det(L - lambda*I), constant term first
  bool check_oracle = false;          // fp == fp_via_resistance
  bool check_trace_identity = false;  // tr(L^T R) == -2 fp
  bool check_penrose = false;
  bool balanced = false;

  nlohmann::json to_json() const;
};

// FP = trace(L^T * pseudoinverse(L)), exact.
Rational fp(const RationalMatrix& L);

// trace(L * L^+); asserted to be a nonnegative integer equal to rank(L).
std::size_t rank_invariant(const RationalMatrix& L);

// R[i][j] = L+[i][i] + L+[j][j] - 2 L+[i][j]; zero diagonal.
RationalMatrix resistance_matrix(const RationalMatrix& L);

// Resistance-sum oracle: (omega/2) * sum over directed edges e of
// R[tail(e)][head(e)], parallel edges with multiplicity. Requires a common
// edge weight omega; throws Error("NonUniformWeights") otherwise.
Rational fp_via_resistance(const TaitGraph& g);

// Returns (tr(L^T R), -2 * fp(L)); the two agree for balanced L.
std::pair<Rational, Rational> trace_identity_check(const RationalMatrix& L);

// Alexander polynomial from the grounded Laplacian: S = L with row and
// column `del` removed, Delta(t) = det(S - t S^T), then normalized by a unit
// +-t^k so the constant term is positive. raw=true skips normalization.
Polynomial alexander(const RationalMatrix& L, std::size_t del,
                     bool raw = false);

InvariantReport report(const TaitGraph& g);

}  // namespace knotres
