#include "knotres/flype.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <set>

#include "knotres/error.hpp"
#include "knotres/exactlinalg.hpp"
#include "knotres/invariants.hpp"
#include "knotres/taitgraph.hpp"

namespace knotres {

namespace {

using ArcSet = std::set<int>;

std::vector<int> boundary_arcs_of(const Diagram& d, const std::set<int>& T) {
  std::vector<int> out;
  for (int a = 1; a <= d.arc_count(); ++a) {
    const auto& es = d.arc_ends(a);
    int inside = static_cast<int>(T.count(es[0].crossing)) +
                 static_cast<int>(T.count(es[1].crossing));
    if (inside == 1) out.push_back(a);
  }
  return out;
}

// Cyclic order of the boundary arcs around the tangle, found by walking the
// region boundary on the inside of T: from a boundary arc's T-side end keep
// departing via slot s+1 until the next boundary arc is met.
std::optional<std::array<int, 4>> boundary_cycle(const Diagram& d,
                                                 const std::set<int>& T,
                                                 const std::vector<int>& barcs) {
  if (barcs.size() != 4) return std::nullopt;
  ArcSet bset(barcs.begin(), barcs.end());
  auto t_side = [&](int arc) -> ArcEnd {
    const auto& es = d.arc_ends(arc);
    return T.count(es[0].crossing) ? es[0] : es[1];
  };
  std::array<int, 4> order{};
  int a = barcs[0];
  ArcEnd cur = t_side(a);
  for (int step = 0; step < 4; ++step) {
    order[static_cast<std::size_t>(step)] = a;
    // walk inside T
    int guard = 0;
    while (true) {
      if (++guard > 8 * d.crossing_count() + 8) return std::nullopt;
      int s2 = (cur.slot + 1) % 4;
      int a2 = d.crossings()[static_cast<std::size_t>(cur.crossing)]
                   .slots[static_cast<std::size_t>(s2)];
      const auto& es = d.arc_ends(a2);
      ArcEnd other = es[0] == ArcEnd{cur.crossing, s2} ? es[1] : es[0];
      if (bset.count(a2)) {
        a = a2;
        cur = t_side(a2);
        break;
      }
      if (!T.count(other.crossing)) return std::nullopt;  // escaped the tangle
      cur = other;
    }
  }
  // the walk must return to the start having visited each boundary arc once
  ArcSet seen(order.begin(), order.end());
  if (seen.size() != 4 || a != order[0]) return std::nullopt;
  return order;
}

struct Site {
  std::set<int> T;
  int pivot = -1;
  int sA = -1, sB = -1;            // pivot slots holding the tangle arcs
  std::array<int, 4> cycle{};
};

std::optional<Site> resolve_site(const Diagram& d, const std::set<int>& T,
                                 int pivot) {
  if (pivot < 0 || pivot >= d.crossing_count() || T.count(pivot))
    return std::nullopt;
  auto barcs = boundary_arcs_of(d, T);
  if (barcs.size() != 4) return std::nullopt;
  ArcSet bset(barcs.begin(), barcs.end());
  const auto& pslots = d.crossings()[static_cast<std::size_t>(pivot)].slots;
  std::vector<int> to_t;
  for (int s = 0; s < 4; ++s)
    if (bset.count(pslots[static_cast<std::size_t>(s)])) to_t.push_back(s);
  if (to_t.size() != 2) return std::nullopt;
  int s1 = to_t[0], s2 = to_t[1];
  int sA, sB;
  if ((s2 - s1 + 4) % 4 == 1) {
    sA = s1;
    sB = s2;
  } else if ((s1 - s2 + 4) % 4 == 1) {
    sA = s2;
    sB = s1;
  } else {
    return std::nullopt;
  }
  auto cyc = boundary_cycle(d, T, barcs);
  if (!cyc) return std::nullopt;
  // the two pivot arcs must be adjacent in the boundary cycle
  int p = pslots[static_cast<std::size_t>(sA)];
  int q = pslots[static_cast<std::size_t>(sB)];
  auto idx = [&](int arc) {
    for (int i = 0; i < 4; ++i)
      if ((*cyc)[static_cast<std::size_t>(i)] == arc) return i;
    return -1;
  };
  int ip = idx(p), iq = idx(q);
  if (ip < 0 || iq < 0) return std::nullopt;
  int diff = (ip - iq + 4) % 4;
  if (diff != 1 && diff != 3) return std::nullopt;
  return Site{T, pivot, sA, sB, *cyc};
}

bool tangle_connected(const Diagram& d, const std::set<int>& T) {
  if (T.empty()) return false;
  std::set<int> seen{*T.begin()};
  std::vector<int> stack{*T.begin()};
  while (!stack.empty()) {
    int ci = stack.back();
    stack.pop_back();
    for (int s = 0; s < 4; ++s) {
      int a = d.crossings()[static_cast<std::size_t>(ci)]
                  .slots[static_cast<std::size_t>(s)];
      const auto& es = d.arc_ends(a);
      ArcEnd o = es[0] == ArcEnd{ci, s} ? es[1] : es[0];
      if (T.count(o.crossing) && !seen.count(o.crossing)) {
        seen.insert(o.crossing);
        stack.push_back(o.crossing);
      }
    }
  }
  return seen.size() == T.size();
}

// A crossing carried through the surgery: slot arcs in cyclic order, per-slot
// incoming flag, and which slot pair is the under passage.
struct RichCrossing {
  std::array<int, 4> slots{};
  std::array<bool, 4> incoming{};
  std::array<int, 2> under{0, 2};
};

std::optional<std::array<int, 4>> anchor(const RichCrossing& c) {
  // rotate so slot 0 is the incoming under slot
  int r = -1;
  for (int u : c.under)
    if (c.incoming[static_cast<std::size_t>(u)]) {
      if (r >= 0) return std::nullopt;
      r = u;
    }
  if (r < 0) return std::nullopt;
  std::array<int, 4> out{};
  for (int t = 0; t < 4; ++t)
    out[static_cast<std::size_t>(t)] =
        c.slots[static_cast<std::size_t>((r + t) % 4)];
  return out;
}

}  // namespace

nlohmann::json TangleRegion::to_json() const {
  nlohmann::json j;
  j["crossings"] = crossings;
  j["boundary_arcs"] = boundary_arcs;
  j["pivot"] = pivot;
  return j;
}

TangleRegion TangleRegion::from_json(const nlohmann::json& j) {
  TangleRegion t;
  t.crossings = j.at("crossings").get<std::vector<int>>();
  if (j.contains("boundary_arcs")) {
    auto v = j.at("boundary_arcs").get<std::vector<int>>();
    if (v.size() == 4) std::copy(v.begin(), v.end(), t.boundary_arcs.begin());
  }
  t.pivot = j.at("pivot").get<int>();
  return t;
}

std::vector<TangleRegion> find_flypes(const Diagram& d) {
  const int n = d.crossing_count();
  std::vector<TangleRegion> out;
  if (n < 3 || n > 24) return out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    int size = std::popcount(mask);
    if (size < 1 || size > n - 2) continue;
    std::set<int> T;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) T.insert(i);
    if (!tangle_connected(d, T)) continue;
    auto barcs = boundary_arcs_of(d, T);
    if (barcs.size() != 4) continue;
    for (int pivot = 0; pivot < n; ++pivot) {
      auto site = resolve_site(d, T, pivot);
      if (!site) continue;
      TangleRegion t;
      t.crossings.assign(T.begin(), T.end());
      t.boundary_arcs = site->cycle;
      t.pivot = pivot;
      out.push_back(std::move(t));
    }
  }
  return out;
}

Diagram apply_flype(const Diagram& d, const TangleRegion& t) {
  std::set<int> T(t.crossings.begin(), t.crossings.end());
  for (int ci : T)
    if (ci < 0 || ci >= d.crossing_count())
      fail("NotAdmissible", "tangle crossing out of range");
  if (!tangle_connected(d, T)) fail("NotAdmissible", "tangle not connected");
  auto site = resolve_site(d, T, t.pivot);
  if (!site) fail("NotAdmissible", "not a flype site of this diagram");

  const auto& pc = d.crossings()[static_cast<std::size_t>(t.pivot)];
  int p = pc.slots[static_cast<std::size_t>(site->sA)];
  int q = pc.slots[static_cast<std::size_t>(site->sB)];
  int u = pc.slots[static_cast<std::size_t>((site->sA + 2) % 4)];
  int v = pc.slots[static_cast<std::size_t>((site->sB + 2) % 4)];
  const auto& cyc = site->cycle;
  auto idx = [&](int arc) {
    for (int i = 0; i < 4; ++i)
      if (cyc[static_cast<std::size_t>(i)] == arc) return i;
    return -1;
  };
  int ip = idx(p), iq = idx(q);
  // neighbors of p and q in the boundary cycle, away from each other
  int s_arc = cyc[static_cast<std::size_t>((ip + (ip - iq) + 8) % 4)];
  int r_arc = cyc[static_cast<std::size_t>((iq + (iq - ip) + 8) % 4)];
  int sg_old = pc.sign;

  // fresh labels for the split outer arcs and the two fused strands
  int maxa = d.arc_count();
  int rt = maxa + 1, ro = maxa + 2;  // r_arc: tangle side / outer side
  int st = maxa + 3, so = maxa + 4;
  int fuse_up = maxa + 5, fuse_vq = maxa + 6;

  std::vector<RichCrossing> rich;
  for (const auto& c : d.crossings()) {
    if (c.id == t.pivot) continue;
    RichCrossing rc;
    rc.slots = c.slots;
    for (int s = 0; s < 4; ++s)
      rc.incoming[static_cast<std::size_t>(s)] =
          d.arc_head(c.slots[static_cast<std::size_t>(s)]) == ArcEnd{c.id, s};
    bool in_t = T.count(c.id) > 0;
    if (in_t) {
      // flip: reverse the cyclic slot order and exchange over/under
      static constexpr int flip[4] = {0, 3, 2, 1};
      RichCrossing f;
      for (int s = 0; s < 4; ++s) {
        f.slots[static_cast<std::size_t>(s)] =
            rc.slots[static_cast<std::size_t>(flip[s])];
        f.incoming[static_cast<std::size_t>(s)] =
            rc.incoming[static_cast<std::size_t>(flip[s])];
      }
      f.under = {1, 3};
      rc = f;
    }
    for (auto& a : rc.slots) {
      if (a == r_arc)
        a = in_t ? rt : ro;
      else if (a == s_arc)
        a = in_t ? st : so;
      else if (a == u || a == p)
        a = fuse_up;
      else if (a == v || a == q)
        a = fuse_vq;
    }
    rich.push_back(rc);
  }

  bool r_out = !T.count(d.arc_head(r_arc).crossing);
  bool s_out = !T.count(d.arc_head(s_arc).crossing);
  RichCrossing np;
  np.slots = {ro, st, rt, so};
  std::map<int, bool> io;
  io[rt] = r_out;   // r flows tangle -> outside: its tangle stub enters the
  io[ro] = !r_out;  // new crossing, the outer stub leaves it
  io[st] = s_out;
  io[so] = !s_out;
  for (int s = 0; s < 4; ++s)
    np.incoming[static_cast<std::size_t>(s)] =
        io.at(np.slots[static_cast<std::size_t>(s)]);

  // pick the under passage of the reinserted crossing so its sign is kept
  for (auto under : {std::array<int, 2>{0, 2}, std::array<int, 2>{1, 3}}) {
    np.under = under;
    std::vector<std::array<int, 4>> pd;
    bool ok = true;
    for (const auto& rc : rich) {
      auto s = anchor(rc);
      if (!s) {
        ok = false;
        break;
      }
      pd.push_back(*s);
    }
    auto s = anchor(np);
    if (!ok || !s) continue;
    pd.push_back(*s);
    try {
      Diagram out = Diagram::from_crossings(pd);
      if (out.crossings().back().sign != sg_old) continue;
      return out;
    } catch (const Error&) {
      continue;
    }
  }
  fail("NotAdmissible", "flype rewrite does not close up");
}

nlohmann::json HarnessReport::to_json() const {
  nlohmann::json j;
  j["orbit_size"] = orbit_size;
  auto& fv = j["fp_values"] = nlohmann::json::array();
  for (const auto& r : fp_values) fv.push_back(to_string(r));
  auto poly_list = [](const std::vector<Polynomial>& ps) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& p : ps) {
      nlohmann::json cs = nlohmann::json::array();
      for (const auto& c : p.coeffs()) cs.push_back(to_string(c));
      out.push_back(std::move(cs));
    }
    return out;
  };
  j["char_polys"] = poly_list(char_polys);
  j["alexander"] = poly_list(alexander);
  j["budget_exhausted"] = budget_exhausted;
  if (!red_flags.empty()) {
    auto& rf = j["red_flags"] = nlohmann::json::array();
    for (const auto& t : red_flags) rf.push_back(t.to_json());
  }
  return j;
}

HarnessReport verify_invariance(const Diagram& d, int depth,
                                std::size_t budget) {
  if (depth < 1) fail("MalformedSyntax", "depth must be >= 1");
  HarnessReport rep;
  std::map<std::vector<std::array<int, 4>>, Diagram> seen;
  std::vector<Rational> fps;
  std::vector<Polynomial> chis, alexs;
  auto record = [&](const Diagram& dia) {
    RationalMatrix L = laplacian(tait_graph(dia));
    Rational f = fp(L);
    Polynomial chi = linalg::char_poly(L);
    Polynomial alex = alexander(L, 0);
    if (std::find(fps.begin(), fps.end(), f) == fps.end()) fps.push_back(f);
    if (std::find(chis.begin(), chis.end(), chi) == chis.end())
      chis.push_back(chi);
    if (std::find(alexs.begin(), alexs.end(), alex) == alexs.end())
      alexs.push_back(alex);
    return f;
  };

  Rational base_fp = record(d);
  std::vector<Diagram> frontier{d};
  seen.emplace(d.canonical_code(), d);
  for (int level = 0; level < depth && !frontier.empty(); ++level) {
    std::vector<Diagram> next;
    for (const auto& cur : frontier) {
      for (const auto& t : find_flypes(cur)) {
        Diagram moved = [&]() -> Diagram {
          try {
            return apply_flype(cur, t);
          } catch (const Error&) {
            return cur;  // unrealizable 4-cut; no new diagram
          }
        }();
        auto code = moved.canonical_code();
        if (seen.count(code)) continue;
        if (seen.size() >= budget) {
          rep.budget_exhausted = true;
          continue;
        }
        Rational f = record(moved);
        if (f != base_fp) rep.red_flags.push_back(t);
        seen.emplace(std::move(code), moved);
        next.push_back(std::move(moved));
      }
    }
    frontier = std::move(next);
  }
  rep.orbit_size = seen.size();
  std::sort(fps.begin(), fps.end());
  rep.fp_values = std::move(fps);
  auto poly_less = [](const Polynomial& a, const Polynomial& b) {
    return a.coeffs() < b.coeffs();
  };
  std::sort(chis.begin(), chis.end(), poly_less);
  std::sort(alexs.begin(), alexs.end(), poly_less);
  rep.char_polys = std::move(chis);
  rep.alexander = std::move(alexs);
  return rep;
}

}  // namespace knotres
