#include "knotres/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "knotres/error.hpp"

namespace knotres {

namespace {

// Tokenized directive lists like "orient: [1, -1]" or "order: [3,1,6,2,11]".
std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::string cur;
  for (char ch : s) {
    if (ch == '-' || ch == '+' || std::isdigit(static_cast<unsigned char>(ch))) {
      cur += ch;
    } else {
      if (!cur.empty()) {
        out.push_back(std::stoi(cur));
        cur.clear();
      }
    }
  }
  if (!cur.empty()) out.push_back(std::stoi(cur));
  return out;
}

}  // namespace

std::string ValidationReport::failure() const {
  if (!connected) return "NotConnected";
  if (!alternating) return "NotAlternating";
  if (!reduced) return "NotReduced";
  if (!special) return "NotSpecial";
  if (!uniform_sign) return "NonUniformSign";
  return "";
}

Diagram Diagram::parse_pd(const std::string& text) {
  // strip % comments
  std::string clean;
  {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      auto pct = line.find('%');
      if (pct != std::string::npos) line.erase(pct);
      clean += line;
      clean += '\n';
    }
  }
  std::vector<std::array<int, 4>> slots;
  std::vector<int> orientations, order;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < clean.size() &&
           (std::isspace(static_cast<unsigned char>(clean[i])) ||
            clean[i] == ','))
      ++i;
  };
  while (true) {
    skip_ws();
    if (i >= clean.size()) break;
    if (clean[i] == 'X' || clean[i] == 'x') {
      ++i;
      skip_ws();
      if (i >= clean.size() || clean[i] != '(')
        fail("MalformedSyntax", "expected '(' after X");
      auto close = clean.find(')', i);
      if (close == std::string::npos)
        fail("MalformedSyntax", "unterminated crossing tuple");
      auto nums = parse_int_list(clean.substr(i + 1, close - i - 1));
      if (nums.size() != 4)
        fail("MalformedSyntax", "crossing tuple needs 4 arc labels");
      slots.push_back({nums[0], nums[1], nums[2], nums[3]});
      i = close + 1;
    } else if (clean.compare(i, 7, "orient:") == 0) {
      auto close = clean.find(']', i);
      if (close == std::string::npos)
        fail("MalformedSyntax", "unterminated orient directive");
      orientations = parse_int_list(clean.substr(i + 7, close - i - 7));
      i = close + 1;
    } else if (clean.compare(i, 6, "order:") == 0) {
      auto close = clean.find(']', i);
      if (close == std::string::npos)
        fail("MalformedSyntax", "unterminated order directive");
      order = parse_int_list(clean.substr(i + 6, close - i - 6));
      i = close + 1;
    } else {
      fail("MalformedSyntax",
           std::string("unexpected token at '") + clean.substr(i, 16) + "'");
    }
  }
  return from_crossings(std::move(slots), std::move(orientations),
                        std::move(order));
}

Diagram Diagram::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("crossings"))
    fail("MalformedSyntax", "diagram JSON needs a 'crossings' array");
  std::vector<std::array<int, 4>> slots;
  for (const auto& c : j.at("crossings")) {
    if (!c.is_array() || c.size() != 4)
      fail("MalformedSyntax", "crossing must be an array of 4 arc labels");
    slots.push_back({c[0].get<int>(), c[1].get<int>(), c[2].get<int>(),
                     c[3].get<int>()});
  }
  std::vector<int> orientations, order;
  if (j.contains("orientations"))
    orientations = j.at("orientations").get<std::vector<int>>();
  if (j.contains("order")) order = j.at("order").get<std::vector<int>>();
  return from_crossings(std::move(slots), std::move(orientations),
                        std::move(order));
}

nlohmann::json Diagram::to_json() const {
  nlohmann::json j;
  auto& cr = j["crossings"] = nlohmann::json::array();
  for (const auto& c : crossings_)
    cr.push_back({c.slots[0], c.slots[1], c.slots[2], c.slots[3]});
  j["orientations"] = std::vector<int>(components_.size(), 1);
  if (!explicit_order_.empty()) j["order"] = explicit_order_;
  return j;
}

std::string Diagram::to_pd() const {
  std::string out;
  for (const auto& c : crossings_) {
    if (!out.empty()) out += ' ';
    out += "X(" + std::to_string(c.slots[0]) + "," +
           std::to_string(c.slots[1]) + "," + std::to_string(c.slots[2]) +
           "," + std::to_string(c.slots[3]) + ")";
  }
  if (!explicit_order_.empty()) {
    out += "\norder: [";
    for (std::size_t i = 0; i < explicit_order_.size(); ++i) {
      if (i) out += ", ";
      out += std::to_string(explicit_order_[i]);
    }
    out += "]";
  }
  return out;
}

Diagram Diagram::from_crossings(std::vector<std::array<int, 4>> slots,
                                std::vector<int> orientations,
                                std::vector<int> order) {
  if (slots.empty()) fail("MalformedSyntax", "empty crossing list");
  // normalize arc labels to 1..2n by rank
  {
    std::map<int, int> relabel;
    for (const auto& c : slots)
      for (int a : c) relabel.emplace(a, 0);
    int next = 1;
    for (auto& [lab, to] : relabel) to = next++;
    for (auto& c : slots)
      for (auto& a : c) a = relabel.at(a);
    for (auto& k : order) {
      auto it = relabel.find(k);
      if (it == relabel.end())
        fail("MalformedSyntax", "order directive names unknown arc");
      k = it->second;
    }
  }
  Diagram d;
  d.crossings_.resize(slots.size());
  for (std::size_t i = 0; i < slots.size(); ++i) {
    d.crossings_[i].id = static_cast<int>(i);
    d.crossings_[i].slots = slots[i];
  }
  d.arc_count_ = static_cast<int>(slots.size()) * 2;
  d.explicit_order_ = std::move(order);
  d.analyze();

  // Per-component orientation reversal: reversing a component flips the
  // direction of its arcs; crossings whose under-strand lies on a reversed
  // component are re-anchored by rotating their slot list by two.
  bool any_flip = false;
  for (int s : orientations)
    if (s == -1) any_flip = true;
  if (!orientations.empty() &&
      orientations.size() != d.components_.size())
    fail("MalformedSyntax", "orient directive length != component count");
  if (any_flip) {
    std::set<int> flipped_arcs;
    for (std::size_t k = 0; k < orientations.size(); ++k) {
      if (orientations[k] != -1) continue;
      for (int a : d.components_[k]) flipped_arcs.insert(a);
    }
    std::vector<std::array<int, 4>> rotated;
    for (const auto& c : d.crossings_) {
      if (flipped_arcs.count(c.slots[0])) {
        rotated.push_back({c.slots[2], c.slots[3], c.slots[0], c.slots[1]});
      } else {
        rotated.push_back(c.slots);
      }
    }
    Diagram d2;
    d2.crossings_.resize(rotated.size());
    for (std::size_t i = 0; i < rotated.size(); ++i) {
      d2.crossings_[i].id = static_cast<int>(i);
      d2.crossings_[i].slots = rotated[i];
    }
    d2.arc_count_ = d.arc_count_;
    d2.explicit_order_ = d.explicit_order_;
    d2.analyze();
    return d2;
  }
  return d;
}

const std::array<ArcEnd, 2>& Diagram::arc_ends(int arc) const {
  if (arc < 1 || arc > arc_count_) fail("IndexOutOfRange", "arc label");
  return ends_[static_cast<std::size_t>(arc - 1)];
}

const ArcEnd& Diagram::arc_head(int arc) const {
  if (arc < 1 || arc > arc_count_) fail("IndexOutOfRange", "arc label");
  return head_[static_cast<std::size_t>(arc - 1)];
}

ArcEnd Diagram::arc_tail(int arc) const {
  const auto& e = arc_ends(arc);
  return e[0] == arc_head(arc) ? e[1] : e[0];
}

int Diagram::face_at(int crossing, int corner) const {
  return face_of_corner_[static_cast<std::size_t>(crossing) * 4 +
                         static_cast<std::size_t>(corner)];
}

void Diagram::analyze() {
  const int n = crossing_count();
  // arc ends
  ends_.assign(static_cast<std::size_t>(arc_count_), {});
  {
    std::vector<int> seen(static_cast<std::size_t>(arc_count_), 0);
    for (const auto& c : crossings_)
      for (int s = 0; s < 4; ++s) {
        int a = c.slots[static_cast<std::size_t>(s)];
        if (a < 1 || a > arc_count_)
          fail("BadArcMultiplicity",
               "arc " + std::to_string(a) + " outside 1.." +
                   std::to_string(arc_count_));
        auto& cnt = seen[static_cast<std::size_t>(a - 1)];
        if (cnt >= 2)
          fail("BadArcMultiplicity",
               "arc " + std::to_string(a) + " appears more than twice");
        ends_[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(cnt)] =
            {c.id, s};
        ++cnt;
      }
    for (int a = 1; a <= arc_count_; ++a)
      if (seen[static_cast<std::size_t>(a - 1)] != 2)
        fail("BadArcMultiplicity",
             "arc " + std::to_string(a) + " appears once");
  }
  auto other_end = [&](int arc, ArcEnd e) {
    const auto& es = ends_[static_cast<std::size_t>(arc - 1)];
    return es[0] == e ? es[1] : es[0];
  };

  // connectivity of the underlying 4-valent graph
  {
    std::vector<bool> vis(static_cast<std::size_t>(n), false);
    std::vector<int> stack{0};
    vis[0] = true;
    int count = 1;
    while (!stack.empty()) {
      int ci = stack.back();
      stack.pop_back();
      for (int s = 0; s < 4; ++s) {
        int a = crossings_[static_cast<std::size_t>(ci)]
                    .slots[static_cast<std::size_t>(s)];
        ArcEnd o = other_end(a, {ci, s});
        if (!vis[static_cast<std::size_t>(o.crossing)]) {
          vis[static_cast<std::size_t>(o.crossing)] = true;
          ++count;
          stack.push_back(o.crossing);
        }
      }
    }
    if (count != n) fail("DisconnectedDiagram", "projection is not connected");
  }

  // orientation propagation: slot0 incoming under, slot2 outgoing; at the
  // over passage exactly one of slots 1/3 is incoming.
  head_.assign(static_cast<std::size_t>(arc_count_), ArcEnd{});
  {
    std::vector<bool> has(static_cast<std::size_t>(arc_count_), false);
    auto set_head = [&](int arc, ArcEnd e) {
      auto idx = static_cast<std::size_t>(arc - 1);
      if (has[idx]) {
        if (!(head_[idx] == e))
          fail("MalformedSyntax",
               "inconsistent strand orientations at arc " +
                   std::to_string(arc));
        return false;
      }
      has[idx] = true;
      head_[idx] = e;
      return true;
    };
    for (const auto& c : crossings_) {
      set_head(c.slots[0], {c.id, 0});
      set_head(c.slots[2], other_end(c.slots[2], {c.id, 2}));
    }
    bool progress = true;
    while (true) {
      progress = false;
      for (const auto& c : crossings_) {
        int a1 = c.slots[1], a3 = c.slots[3];
        auto idx1 = static_cast<std::size_t>(a1 - 1);
        auto idx3 = static_cast<std::size_t>(a3 - 1);
        auto known = [&](int arc, int slot) -> int {
          auto idx = static_cast<std::size_t>(arc - 1);
          if (!has[idx]) return -1;
          return head_[idx] == ArcEnd{c.id, slot} ? 1 : 0;
        };
        int s1 = known(a1, 1), s3 = known(a3, 3);
        if (s1 < 0 && s3 < 0) continue;
        if (s1 < 0) {
          progress |= set_head(a1, s3 == 0 ? ArcEnd{c.id, 1}
                                           : other_end(a1, {c.id, 1}));
        } else if (s3 < 0) {
          progress |= set_head(a3, s1 == 0 ? ArcEnd{c.id, 3}
                                           : other_end(a3, {c.id, 3}));
        } else if (s1 == s3) {
          fail("MalformedSyntax",
               "both over slots flow the same way at crossing " +
                   std::to_string(c.id));
        }
      }
      if (!progress) {
        int unset = -1;
        for (int a = 1; a <= arc_count_; ++a)
          if (!has[static_cast<std::size_t>(a - 1)]) {
            unset = a;
            break;
          }
        if (unset < 0) break;
        // over-over arc with no anchor on its strand; pick deterministically
        set_head(unset, ends_[static_cast<std::size_t>(unset - 1)][0]);
      }
    }
  }

  // crossing signs
  for (auto& c : crossings_) {
    bool in3 = arc_head(c.slots[3]) == ArcEnd{c.id, 3};
    bool in1 = arc_head(c.slots[1]) == ArcEnd{c.id, 1};
    if (in3 == in1)
      fail("MalformedSyntax",
           "over strand of crossing " + std::to_string(c.id) +
               " has no consistent direction");
    c.sign = in3 ? +1 : -1;
  }

  // faces: orbits of darts; a dart arrives at (ci, s) and departs via slot
  // s+1, crossing corner (ci, s) on the way.
  faces_.clear();
  face_of_corner_.assign(static_cast<std::size_t>(4 * n), -1);
  {
    std::vector<bool> visited(static_cast<std::size_t>(4 * n), false);
    auto corner_idx = [&](int ci, int s) {
      return static_cast<std::size_t>(ci) * 4 + static_cast<std::size_t>(s);
    };
    for (int ci0 = 0; ci0 < n; ++ci0)
      for (int s0 = 0; s0 < 4; ++s0) {
        if (visited[corner_idx(ci0, s0)]) continue;
        Face f;
        f.id = static_cast<int>(faces_.size());
        int ci = ci0, s = s0;
        int min_arc = arc_count_ + 1;
        while (!visited[corner_idx(ci, s)]) {
          visited[corner_idx(ci, s)] = true;
          face_of_corner_[corner_idx(ci, s)] = f.id;
          f.boundary.emplace_back(ci, s);
          int s2 = (s + 1) % 4;
          int a = crossings_[static_cast<std::size_t>(ci)]
                      .slots[static_cast<std::size_t>(s2)];
          min_arc = std::min(min_arc, a);
          ArcEnd o = other_end(a, {ci, s2});
          ci = o.crossing;
          s = o.slot;
        }
        f.min_arc = min_arc;
        faces_.push_back(std::move(f));
      }
  }
  if (n - arc_count_ + static_cast<int>(faces_.size()) != 2)
    fail("NonPlanarRotation",
         "face tracing violates the Euler formula (V-E+F = " +
             std::to_string(n - arc_count_ + static_cast<int>(faces_.size())) +
             ")");

  // checkerboard shading. For uniform-sign-consistent diagrams the Seifert
  // class is read off locally: a positive crossing shades corners {0,2}, a
  // negative one {1,3}. If the local votes clash across a face, fall back to
  // plain bipartition and pick the class with coherently oriented boundaries.
  {
    std::vector<int> color(faces_.size(), -1);  // 1 shaded, 0 unshaded
    bool consistent = true;
    for (int ci = 0; ci < n; ++ci)
      for (int s = 0; s < 4; ++s) {
        bool shaded = crossings_[static_cast<std::size_t>(ci)].sign > 0
                          ? (s % 2 == 0)
                          : (s % 2 == 1);
        int fi = face_at(ci, s);
        auto idx = static_cast<std::size_t>(fi);
        if (color[idx] < 0)
          color[idx] = shaded ? 1 : 0;
        else if ((color[idx] == 1) != shaded)
          consistent = false;
      }
    if (!consistent) {
      // bipartition of the face adjacency graph (faces sharing an arc)
      std::vector<int> part(faces_.size(), -1);
      std::vector<std::size_t> stack;
      part[0] = 0;
      stack.push_back(0);
      std::vector<std::vector<std::size_t>> adj(faces_.size());
      for (int a = 1; a <= arc_count_; ++a) {
        const auto& es = ends_[static_cast<std::size_t>(a - 1)];
        // the two darts of arc a arrive at its two ends
        auto f1 = static_cast<std::size_t>(face_at(es[0].crossing, es[0].slot));
        auto f2 = static_cast<std::size_t>(face_at(es[1].crossing, es[1].slot));
        adj[f1].push_back(f2);
        adj[f2].push_back(f1);
      }
      while (!stack.empty()) {
        auto f = stack.back();
        stack.pop_back();
        for (auto g : adj[f]) {
          if (part[g] < 0) {
            part[g] = 1 - part[f];
            stack.push_back(g);
          } else if (part[g] == part[f]) {
            fail("NotBipartite", "face adjacency graph is not 2-colorable");
          }
        }
      }
      // coherence: all boundary arcs of a face traversed the same way
      auto face_coherent = [&](const Face& f) {
        int dir = -1;
        for (auto [ci, s] : f.boundary) {
          int s2 = (s + 1) % 4;
          int a = crossings_[static_cast<std::size_t>(ci)]
                      .slots[static_cast<std::size_t>(s2)];
          // departing at (ci,s2): arc flows with traversal iff its head is
          // the other end
          bool with = !(arc_head(a) == ArcEnd{ci, s2});
          if (dir < 0)
            dir = with ? 1 : 0;
          else if ((dir == 1) != with)
            return false;
        }
        return true;
      };
      bool class_ok[2] = {true, true};
      for (std::size_t fi = 0; fi < faces_.size(); ++fi)
        if (!face_coherent(faces_[fi]))
          class_ok[static_cast<std::size_t>(part[fi])] = false;
      int shaded_class;
      if (class_ok[0] != class_ok[1]) {
        shaded_class = class_ok[0] ? 0 : 1;
      } else {
        shaded_class = part[0];  // deterministic tie-break
      }
      for (std::size_t fi = 0; fi < faces_.size(); ++fi)
        color[fi] = part[fi] == shaded_class ? 1 : 0;
    }
    for (std::size_t fi = 0; fi < faces_.size(); ++fi)
      faces_[fi].shaded = color[fi] == 1;
  }

  // strand components, each listed in flow order starting at its minimal arc
  {
    components_.clear();
    std::vector<bool> seen(static_cast<std::size_t>(arc_count_), false);
    for (int a0 = 1; a0 <= arc_count_; ++a0) {
      if (seen[static_cast<std::size_t>(a0 - 1)]) continue;
      std::vector<int> comp;
      int a = a0;
      while (!seen[static_cast<std::size_t>(a - 1)]) {
        seen[static_cast<std::size_t>(a - 1)] = true;
        comp.push_back(a);
        ArcEnd h = arc_head(a);
        a = crossings_[static_cast<std::size_t>(h.crossing)]
                .slots[static_cast<std::size_t>((h.slot + 2) % 4)];
      }
      components_.push_back(std::move(comp));
    }
  }
}

ValidationReport Diagram::validate() const {
  ValidationReport r;
  r.connected = true;  // construction rejects disconnected projections

  // alternating: along each strand the passage types alternate
  r.alternating = true;
  for (const auto& comp : components_) {
    const std::size_t m = comp.size();
    for (std::size_t i = 0; i < m; ++i) {
      auto type = [&](int arc) {
        int s = arc_head(arc).slot;
        return s == 0 || s == 2;  // under passage
      };
      if (type(comp[i]) == type(comp[(i + 1) % m])) {
        r.alternating = false;
        break;
      }
    }
    if (!r.alternating) break;
  }

  // reduced: no nugatory crossing (a face meeting a crossing at two opposite
  // corners) and no 2-arc cut separating the projection
  r.reduced = true;
  for (const auto& f : faces_) {
    std::set<std::pair<int, int>> corners(f.boundary.begin(),
                                          f.boundary.end());
    for (auto [ci, s] : f.boundary)
      if (corners.count({ci, (s + 2) % 4})) {
        r.reduced = false;
        break;
      }
    if (!r.reduced) break;
  }
  if (r.reduced && crossing_count() > 1) {
    const int n = crossing_count();
    auto disconnects = [&](int a1, int a2) {
      std::vector<bool> vis(static_cast<std::size_t>(n), false);
      std::vector<int> stack{0};
      vis[0] = true;
      int count = 1;
      while (!stack.empty()) {
        int ci = stack.back();
        stack.pop_back();
        for (int s = 0; s < 4; ++s) {
          int a = crossings_[static_cast<std::size_t>(ci)]
                      .slots[static_cast<std::size_t>(s)];
          if (a == a1 || a == a2) continue;
          const auto& es = ends_[static_cast<std::size_t>(a - 1)];
          ArcEnd o = es[0] == ArcEnd{ci, s} ? es[1] : es[0];
          if (!vis[static_cast<std::size_t>(o.crossing)]) {
            vis[static_cast<std::size_t>(o.crossing)] = true;
            ++count;
            stack.push_back(o.crossing);
          }
        }
      }
      return count != n;
    };
    for (int a1 = 1; a1 <= arc_count_ && r.reduced; ++a1)
      for (int a2 = a1 + 1; a2 <= arc_count_ && r.reduced; ++a2)
        if (disconnects(a1, a2)) r.reduced = false;
  }

  r.uniform_sign = true;
  for (const auto& c : crossings_)
    if (c.sign != crossings_[0].sign) r.uniform_sign = false;

  r.special = is_special();
  return r;
}

std::vector<SeifertCircle> Diagram::seifert_circles() const {
  // oriented smoothing: positive crossing joins 0->1 and 3->2, negative
  // joins 0->3 and 1->2 (in-slot -> out-slot)
  std::vector<int> next(static_cast<std::size_t>(arc_count_) + 1, 0);
  for (int a = 1; a <= arc_count_; ++a) {
    ArcEnd h = arc_head(a);
    const auto& c = crossings_[static_cast<std::size_t>(h.crossing)];
    int out;
    if (c.sign > 0)
      out = h.slot == 0 ? 1 : 2;  // in slots are 0 and 3
    else
      out = h.slot == 0 ? 3 : 2;  // in slots are 0 and 1
    next[static_cast<std::size_t>(a)] = c.slots[static_cast<std::size_t>(out)];
  }
  std::vector<SeifertCircle> out;
  std::vector<bool> seen(static_cast<std::size_t>(arc_count_) + 1, false);
  for (int a0 = 1; a0 <= arc_count_; ++a0) {
    if (seen[static_cast<std::size_t>(a0)]) continue;
    SeifertCircle circ;
    circ.id = static_cast<int>(out.size());
    int a = a0;
    while (!seen[static_cast<std::size_t>(a)]) {
      seen[static_cast<std::size_t>(a)] = true;
      circ.arcs.push_back(a);
      a = next[static_cast<std::size_t>(a)];
    }
    out.push_back(std::move(circ));
  }
  return out;
}

bool Diagram::is_special() const {
  auto circles = seifert_circles();
  std::multiset<std::vector<int>> shaded_boundaries;
  std::size_t shaded_count = 0;
  for (const auto& f : faces_) {
    if (!f.shaded) continue;
    ++shaded_count;
    std::vector<int> arcs;
    for (auto [ci, s] : f.boundary)
      arcs.push_back(crossings_[static_cast<std::size_t>(ci)]
                         .slots[static_cast<std::size_t>((s + 1) % 4)]);
    std::sort(arcs.begin(), arcs.end());
    shaded_boundaries.insert(std::move(arcs));
  }
  if (circles.size() != shaded_count) return false;
  for (auto& c : circles) {
    std::vector<int> arcs = c.arcs;
    std::sort(arcs.begin(), arcs.end());
    auto it = shaded_boundaries.find(arcs);
    if (it == shaded_boundaries.end()) return false;
    shaded_boundaries.erase(it);
  }
  return true;
}

std::vector<std::array<int, 4>> Diagram::canonical_code() const {
  std::vector<std::array<int, 4>> best;
  std::vector<std::size_t> perm(components_.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end());
  std::vector<int> label(static_cast<std::size_t>(arc_count_) + 1, 0);
  do {
    // choose a starting arc in each component (product over components)
    std::vector<std::size_t> starts(perm.size(), 0);
    while (true) {
      int next = 1;
      for (std::size_t k = 0; k < perm.size(); ++k) {
        const auto& comp = components_[perm[k]];
        for (std::size_t i = 0; i < comp.size(); ++i)
          label[static_cast<std::size_t>(
              comp[(starts[k] + i) % comp.size()])] = next++;
      }
      std::vector<std::array<int, 4>> cand;
      cand.reserve(crossings_.size());
      for (const auto& c : crossings_)
        cand.push_back({label[static_cast<std::size_t>(c.slots[0])],
                        label[static_cast<std::size_t>(c.slots[1])],
                        label[static_cast<std::size_t>(c.slots[2])],
                        label[static_cast<std::size_t>(c.slots[3])]});
      std::sort(cand.begin(), cand.end());
      if (best.empty() || cand < best) best = std::move(cand);
      // next start combination
      std::size_t k = 0;
      while (k < starts.size()) {
        if (++starts[k] < components_[perm[k]].size()) break;
        starts[k] = 0;
        ++k;
      }
      if (k == starts.size()) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace knotres
