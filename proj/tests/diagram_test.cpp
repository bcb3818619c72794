#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "knotres/diagram.hpp"
#include "knotres/error.hpp"

using namespace knotres;

namespace {

const char* kTrefoil = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";

std::string data_file(const std::string& name) {
  std::ifstream in(std::string(KNOTRES_DATA_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("parse_pd basics") {
  Diagram d = Diagram::parse_pd(kTrefoil);
  CHECK(d.crossing_count() == 3);
  CHECK(d.arc_count() == 6);
  CHECK(d.component_count() == 1);
  // comments and commas are tolerated
  Diagram d2 = Diagram::parse_pd("% a knot\nX(1,4,2,5), X(3,6,4,1), X(5,2,6,3)");
  CHECK(d2.crossing_count() == 3);
}

TEST_CASE("arc labels are normalized by rank") {
  Diagram d = Diagram::parse_pd("X(10,40,20,50) X(30,60,40,10) X(50,20,60,30)");
  CHECK(d.arc_count() == 6);
  CHECK(d.canonical_code() == Diagram::parse_pd(kTrefoil).canonical_code());
}

TEST_CASE("parse errors") {
  CHECK_THROWS_WITH_AS(Diagram::parse_pd(""), doctest::Contains("empty"), Error);
  CHECK_THROWS_AS(Diagram::parse_pd("X(1,2,3)"), Error);
  CHECK_THROWS_AS(Diagram::parse_pd("Y(1,2,3,4)"), Error);
  // arc appearing once / three times
  CHECK_THROWS_AS(Diagram::parse_pd("X(1,2,3,4) X(1,2,3,5)"), Error);
  // two disjoint trefoil projections
  CHECK_THROWS_WITH_AS(
      Diagram::parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3) "
                        "X(7,10,8,11) X(9,12,10,7) X(11,8,12,9)"),
      doctest::Contains("connected"), Error);
}

TEST_CASE("error kinds are stable names") {
  try {
    Diagram::parse_pd("X(1,2,3)");
    FAIL("expected a parse failure");
  } catch (const Error& e) {
    CHECK(e.kind() == "MalformedSyntax");
  }
  try {
    Diagram::parse_pd("X(1,2,3,4) X(1,2,3,5)");
    FAIL("expected a multiplicity failure");
  } catch (const Error& e) {
    CHECK(e.kind() == "BadArcMultiplicity");
  }
}

TEST_CASE("faces satisfy the Euler formula and cover all corners") {
  Diagram d = Diagram::parse_pd(kTrefoil);
  int corners = 0;
  for (const auto& f : d.faces()) corners += static_cast<int>(f.boundary.size());
  CHECK(corners == 4 * d.crossing_count());
  CHECK(static_cast<int>(d.faces().size()) == d.crossing_count() + 2);
}

TEST_CASE("trefoil structure: signs, shading, faces") {
  Diagram d = Diagram::parse_pd(kTrefoil);
  for (const auto& c : d.crossings()) CHECK(c.sign == -1);
  int shaded = 0, unshaded = 0;
  for (const auto& f : d.faces()) (f.shaded ? shaded : unshaded)++;
  CHECK(unshaded == 3);  // the triangle of Tait vertices
  CHECK(shaded == 2);
  CHECK(d.seifert_circles().size() == 2);
  CHECK(d.is_special());
  auto v = d.validate();
  CHECK(v.accepted());
}

TEST_CASE("validation rejects a nugatory curl") {
  Diagram d = Diagram::parse_pd(data_file("curl.pd"));
  auto v = d.validate();
  CHECK(v.connected);
  CHECK_FALSE(v.reduced);
  CHECK_FALSE(v.accepted());
  CHECK(v.failure() == "NotReduced");
}

TEST_CASE("validation rejects a non-alternating diagram") {
  // trefoil with one crossing switched is no longer alternating
  Diagram d = Diagram::parse_pd("X(4,2,5,1) X(3,6,4,1) X(5,2,6,3)");
  auto v = d.validate();
  CHECK_FALSE(v.alternating);
  CHECK_FALSE(v.accepted());
}

TEST_CASE("figure-eight diagram is alternating but not special") {
  Diagram d = Diagram::parse_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)");
  auto v = d.validate();
  CHECK(v.alternating);
  CHECK_FALSE(v.uniform_sign);
  CHECK_FALSE(v.accepted());
}

TEST_CASE("connected sum has a two-arc cut and is rejected") {
  // trefoil # trefoil: splice arc 1 of one copy with arc 7 of the other
  Diagram d = Diagram::parse_pd(
      "X(1,4,2,5) X(3,6,4,7) X(5,2,6,3) "
      "X(7,10,8,11) X(9,12,10,1) X(11,8,12,9)");
  auto v = d.validate();
  CHECK(v.connected);
  CHECK(v.alternating);
  CHECK_FALSE(v.reduced);
  CHECK_FALSE(v.accepted());
}

TEST_CASE("bundled diagrams are accepted") {
  for (const char* name : {"3a1.pd", "5a2.pd", "7a7.pd", "9a41.pd", "8a2A.pd",
                           "8a2B.pd"}) {
    Diagram d = Diagram::parse_pd(data_file(name));
    CHECK(d.validate().accepted());
  }
  Diagram a = Diagram::parse_pd(data_file("8a2A.pd"));
  CHECK(a.explicit_order() == std::vector<int>{3, 1, 6, 2, 11});
  for (const auto& c : a.crossings()) CHECK(c.sign == 1);
}

TEST_CASE("canonical code detects isomorphic relabelings") {
  Diagram d = Diagram::parse_pd(kTrefoil);
  // same knot, different starting arc
  Diagram e = Diagram::parse_pd("X(3,6,4,1) X(5,2,6,3) X(1,4,2,5)");
  CHECK(d.canonical_code() == e.canonical_code());
  Diagram f = Diagram::parse_pd(data_file("5a2.pd"));
  CHECK_FALSE(d.canonical_code() == f.canonical_code());
}

TEST_CASE("orientation reversal keeps acceptance") {
  Diagram d = Diagram::parse_pd(std::string(kTrefoil) + "\norient: [-1]");
  CHECK(d.validate().accepted());
  CHECK(d.crossing_count() == 3);
  // reversing both strands of a crossing leaves its sign unchanged
  for (const auto& c : d.crossings()) CHECK(c.sign == -1);
}

TEST_CASE("pd/json round trips") {
  Diagram d = Diagram::parse_pd(data_file("8a2A.pd"));
  Diagram d2 = Diagram::parse_pd(d.to_pd());
  CHECK(d2.canonical_code() == d.canonical_code());
  CHECK(d2.explicit_order() == d.explicit_order());
  Diagram d3 = Diagram::from_json(d.to_json());
  CHECK(d3.canonical_code() == d.canonical_code());
}

TEST_CASE("seifert circles of torus diagrams") {
  Diagram d = Diagram::parse_pd(data_file("5a2.pd"));
  CHECK(d.seifert_circles().size() == 2);
  CHECK(d.is_special());
}
