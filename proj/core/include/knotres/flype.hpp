#pragma once

#include <array>
#include <vector>

#include <json.hpp>

#include "knotres/diagram.hpp"
#include "knotres/polynomial.hpp"
#include "knotres/rational.hpp"

namespace knotres {

// A flype site: a tangle (connected set of crossings) met by exactly four
// boundary arcs, two of which attach to the adjacent pivot crossing at
// cyclically consecutive slots.
struct TangleRegion {
  std::vector<int> crossings;          // sorted crossing ids, pivot excluded
  std::array<int, 4> boundary_arcs{};  // cyclic order around the tangle
  int pivot = -1;

  nlohmann::json to_json() const;
  static TangleRegion from_json(const nlohmann::json& j);
};

// All flype sites of an accepted diagram, deduplicated by
// (crossing set, pivot). May be empty.
std::vector<TangleRegion> find_flypes(const Diagram& d);

// Rewrites d by the flype at t: the pivot crossing is deleted (its two
// strands fuse with the tangle-side arcs), the tangle is flipped (crossing
// slot order reversed, over/under passages exchanged), and a crossing of the
// same sign is reinserted on the far side of the tangle. Throws
// Error("NotAdmissible") when t is not a flype site of d or the rewrite does
// not produce a well-formed diagram.
Diagram apply_flype(const Diagram& d, const TangleRegion& t);

struct HarnessReport {
  std::size_t orbit_size = 0;
  std::vector<Rational> fp_values;      // distinct, sorted
  std::vector<Polynomial> char_polys;   // distinct
  std::vector<Polynomial> alexander;    // distinct normalized values
  bool budget_exhausted = false;
  // Tangles whose rewrite changed FP (never expected; kept for diagnostics).
  std::vector<TangleRegion> red_flags;

  nlohmann::json to_json() const;
};

// Breadth-first exploration of the flype orbit of d up to `depth` moves,
// deduplicating diagrams by canonical PD code. Collects FP, characteristic
// polynomial, and normalized Alexander polynomial of every distinct diagram.
HarnessReport verify_invariance(const Diagram& d, int depth,
                                std::size_t budget = 10000);

}  // namespace knotres
