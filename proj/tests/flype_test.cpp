#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "knotres/error.hpp"
#include "knotres/flype.hpp"
#include "knotres/invariants.hpp"
#include "knotres/taitgraph.hpp"

using namespace knotres;

namespace {

Diagram load(const std::string& name) {
  std::ifstream in(std::string(KNOTRES_DATA_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return Diagram::parse_pd(out.str());
}

}  // namespace

TEST_CASE("trefoil flypes all reproduce the trefoil") {
  Diagram d = load("3a1.pd");
  auto sites = find_flypes(d);
  CHECK_FALSE(sites.empty());
  auto code = d.canonical_code();
  for (const auto& t : sites) {
    Diagram moved = apply_flype(d, t);
    CHECK(moved.crossing_count() == 3);
    CHECK(moved.canonical_code() == code);
  }
}

TEST_CASE("8a2A contains the bundled flype site") {
  Diagram d = load("8a2A.pd");
  auto sites = find_flypes(d);
  bool found = false;
  for (const auto& t : sites)
    if (t.crossings == std::vector<int>{0, 5} && t.pivot == 2) found = true;
  CHECK(found);
}

TEST_CASE("flype preserves acceptance, size and FP") {
  for (const char* name : {"3a1.pd", "5a2.pd", "8a2A.pd", "8a2B.pd"}) {
    Diagram d = load(name);
    Rational base = fp(laplacian(tait_graph(d)));
    for (const auto& t : find_flypes(d)) {
      Diagram moved = [&]() {
        try {
          return apply_flype(d, t);
        } catch (const Error&) {
          return d;  // combinatorial 4-cut with no realizable flype
        }
      }();
      CHECK(moved.crossing_count() == d.crossing_count());
      auto v = moved.validate();
      CHECK(v.accepted());
      CHECK(fp(laplacian(tait_graph(moved))) == base);
    }
  }
}

TEST_CASE("flyping back returns an isomorphic diagram") {
  Diagram d = load("8a2A.pd");
  TangleRegion t;
  t.crossings = {0, 5};
  t.pivot = 2;
  Diagram moved = apply_flype(d, t);
  CHECK_FALSE(moved.canonical_code() == d.canonical_code());
  // search the moved diagram for a flype that undoes the move
  bool recovered = false;
  for (const auto& back : find_flypes(moved)) {
    try {
      if (apply_flype(moved, back).canonical_code() == d.canonical_code())
        recovered = true;
    } catch (const Error&) {
    }
  }
  CHECK(recovered);
}

TEST_CASE("apply_flype rejects non-sites") {
  Diagram d = load("3a1.pd");
  TangleRegion bogus;
  bogus.crossings = {0, 1};  // leaves no room for a pivot at 3 crossings
  bogus.pivot = 2;
  CHECK_THROWS_WITH_AS(apply_flype(d, bogus), doctest::Contains("site"), Error);
  TangleRegion oob;
  oob.crossings = {7};
  oob.pivot = 0;
  CHECK_THROWS_AS(apply_flype(d, oob), Error);
}

TEST_CASE("verify_invariance on the trefoil") {
  HarnessReport r = verify_invariance(load("3a1.pd"), 3);
  CHECK(r.orbit_size == 1);
  CHECK(r.fp_values == std::vector<Rational>{1});
  CHECK(r.char_polys.size() == 1);
  CHECK(r.alexander.size() == 1);
  CHECK_FALSE(r.budget_exhausted);
  CHECK(r.red_flags.empty());
}

TEST_CASE("verify_invariance on 8a2A finds both spectra") {
  HarnessReport r = verify_invariance(load("8a2A.pd"), 2);
  CHECK(r.fp_values == std::vector<Rational>{Rational(8, 3)});
  CHECK(r.char_polys.size() >= 2);
  CHECK(r.alexander.size() == 1);
  CHECK(r.red_flags.empty());
  auto j = r.to_json();
  CHECK(j["fp_values"] == nlohmann::json({"8/3"}));
  CHECK(j["budget_exhausted"] == false);
}

TEST_CASE("budget exhaustion is reported, not thrown") {
  HarnessReport r = verify_invariance(load("8a2A.pd"), 2, 2);
  CHECK(r.budget_exhausted);
  CHECK(r.orbit_size <= 2);
  CHECK(r.fp_values == std::vector<Rational>{Rational(8, 3)});
}

TEST_CASE("tangle JSON round trip") {
  TangleRegion t;
  t.crossings = {0, 5};
  t.boundary_arcs = {1, 2, 3, 4};
  t.pivot = 2;
  TangleRegion u = TangleRegion::from_json(t.to_json());
  CHECK(u.crossings == t.crossings);
  CHECK(u.pivot == t.pivot);
  CHECK(u.boundary_arcs == t.boundary_arcs);
}
