#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace knotres {

// One end of an arc: which crossing and which of its four slots.
struct ArcEnd {
  int crossing = -1;
  int slot = -1;
  bool operator==(const ArcEnd&) const = default;
};

// A crossing of an oriented diagram. Slots hold arc labels in counterclockwise
// order starting at the incoming under-strand. sign is +1 for a positive
// crossing (over-strand entering at slot 3) and -1 for a negative one.
struct Crossing {
  int id = 0;
  std::array<int, 4> slots{};
  int sign = 0;
};

struct Face {
  int id = 0;
  // Cyclic sequence of (crossing id, corner index); corner k sits between
  // slots k and k+1 of its crossing.
  std::vector<std::pair<int, int>> boundary;
  bool shaded = false;
  // Smallest arc label on the boundary; stable key for vertex ordering.
  int min_arc = 0;
};

struct SeifertCircle {
  int id = 0;
  std::vector<int> arcs;  // cyclic, in strand order
};

struct ValidationReport {
  bool connected = false;
  bool alternating = false;
  bool reduced = false;
  bool special = false;
  bool uniform_sign = false;
  bool accepted() const {
    return connected && alternating && reduced && special && uniform_sign;
  }
  // Stable name of the first failing requirement, empty when accepted.
  std::string failure() const;
};

// An oriented link diagram given as a PD-style crossing list. Immutable after
// construction; all derived structure (orientations, signs, faces with
// checkerboard shading, strand components) is computed up front.
//
// Construction throws Error with kinds MalformedSyntax, BadArcMultiplicity,
// DisconnectedDiagram, or NonPlanarRotation.
class Diagram {
public:
  // PD text: whitespace/comma separated X(a,b,c,d) tuples, '%' line comments,
  // optional `orient: [s1, ...]` (per-component, +-1) and
  // `order: [k1, ...]` (explicit Tait vertex order, by min incident arc
  // label of each unshaded face) directives.
  static Diagram parse_pd(const std::string& text);

  // {"crossings": [[a,b,c,d], ...], "orientations": [...], "order": [...]}
  static Diagram from_json(const nlohmann::json& j);

  static Diagram from_crossings(std::vector<std::array<int, 4>> slots,
                                std::vector<int> orientations = {},
                                std::vector<int> order = {});

  nlohmann::json to_json() const;
  std::string to_pd() const;

  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int arc_count() const { return arc_count_; }
  int component_count() const { return static_cast<int>(components_.size()); }

  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<Face>& faces() const { return faces_; }
  const std::vector<std::vector<int>>& components() const {
    return components_;
  }
  const std::vector<int>& explicit_order() const { return explicit_order_; }

  // Both ends of an arc (1-based label).
  const std::array<ArcEnd, 2>& arc_ends(int arc) const;
  // The end the arc flows into / out of.
  const ArcEnd& arc_head(int arc) const;
  ArcEnd arc_tail(int arc) const;

  // Face id at a given (crossing, corner).
  int face_at(int crossing, int corner) const;

  ValidationReport validate() const;

  std::vector<SeifertCircle> seifert_circles() const;

  // True iff every Seifert circle bounds a shaded face (the operational form
  // of "Seifert disks are not nested" for checkerboard-shaded diagrams).
  bool is_special() const;

  // Minimal PD code over all orientation-preserving arc relabelings; equal
  // codes <=> isomorphic labeled diagrams.
  std::vector<std::array<int, 4>> canonical_code() const;

private:
  Diagram() = default;
  void analyze();  // fills everything below from slots_/arc_count_

  std::vector<Crossing> crossings_;
  int arc_count_ = 0;
  std::vector<std::array<ArcEnd, 2>> ends_;  // per arc
  std::vector<ArcEnd> head_;                 // per arc: end it flows into
  std::vector<Face> faces_;
  std::vector<int> face_of_corner_;  // 4*crossings entries
  std::vector<std::vector<int>> components_;
  std::vector<int> explicit_order_;
};

}  // namespace knotres
