#include "knotres/taitgraph.hpp"

#include <algorithm>
#include <map>

#include "knotres/error.hpp"

namespace knotres {

nlohmann::json TaitGraph::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  auto& es = j["edges"] = nlohmann::json::array();
  for (const auto& e : edges) es.push_back({e.tail, e.head, e.weight});
  // informational only: "order" in the edge-list schema means vertex indices,
  // so the face keys go under a separate name
  if (!vertex_keys.empty()) j["vertex_keys"] = vertex_keys;
  j["balanced"] = balanced;
  return j;
}

TaitGraph tait_graph(const Diagram& d) {
  auto v = d.validate();
  if (!v.accepted())
    fail("NotAccepted", "diagram rejected: " + v.failure());

  // canonical vertex order: unshaded faces by minimal incident arc label
  std::vector<const Face*> unshaded;
  for (const auto& f : d.faces())
    if (!f.shaded) unshaded.push_back(&f);
  std::sort(unshaded.begin(), unshaded.end(),
            [](const Face* a, const Face* b) { return a->min_arc < b->min_arc; });
  if (!d.explicit_order().empty()) {
    const auto& order = d.explicit_order();
    if (order.size() != unshaded.size())
      fail("MalformedSyntax", "order directive length != unshaded face count");
    std::map<int, const Face*> by_key;
    for (const Face* f : unshaded) by_key[f->min_arc] = f;
    std::vector<const Face*> reordered;
    for (int k : order) {
      auto it = by_key.find(k);
      if (it == by_key.end())
        fail("MalformedSyntax",
             "order directive key " + std::to_string(k) +
                 " is not the minimal arc of any unshaded face");
      reordered.push_back(it->second);
      by_key.erase(it);
    }
    unshaded = std::move(reordered);
  }

  TaitGraph g;
  g.n = static_cast<int>(unshaded.size());
  std::vector<int> vertex_of_face(d.faces().size(), -1);
  for (int i = 0; i < g.n; ++i) {
    g.vertex_labels.push_back(unshaded[static_cast<std::size_t>(i)]->id);
    g.vertex_keys.push_back(unshaded[static_cast<std::size_t>(i)]->min_arc);
    vertex_of_face[static_cast<std::size_t>(
        unshaded[static_cast<std::size_t>(i)]->id)] = i;
  }

  // One edge per crossing between its two unshaded corners. A positive
  // crossing has unshaded corners 1 and 3 (tail at 3), a negative one
  // corners 0 and 2 (tail at 0); weight is the negated crossing sign.
  for (const auto& c : d.crossings()) {
    int tail_corner = c.sign > 0 ? 3 : 0;
    int tf = d.face_at(c.id, tail_corner);
    int hf = d.face_at(c.id, (tail_corner + 2) % 4);
    int t = vertex_of_face[static_cast<std::size_t>(tf)];
    int h = vertex_of_face[static_cast<std::size_t>(hf)];
    if (t < 0 || h < 0)
      fail("NotAccepted", "crossing corner lies in a shaded face");
    if (t == h)
      fail("NotAccepted", "self-loop edge (nugatory crossing)");
    g.edges.push_back({t, h, -c.sign, c.id});
  }
  g.balanced = true;
  {
    std::vector<int> net(static_cast<std::size_t>(g.n), 0);
    for (const auto& e : g.edges) {
      net[static_cast<std::size_t>(e.tail)] += e.weight;
      net[static_cast<std::size_t>(e.head)] -= e.weight;
    }
    for (int x : net)
      if (x != 0) g.balanced = false;
  }
  return g;
}

RationalMatrix laplacian(const TaitGraph& g) {
  auto n = static_cast<std::size_t>(g.n);
  RationalMatrix L(n, n);
  for (const auto& e : g.edges) {
    L.at(static_cast<std::size_t>(e.tail), static_cast<std::size_t>(e.tail)) +=
        e.weight;
    L.at(static_cast<std::size_t>(e.tail), static_cast<std::size_t>(e.head)) -=
        e.weight;
  }
  return L;
}

TaitGraph from_edge_list(const nlohmann::json& spec, bool strict) {
  if (!spec.is_object() || !spec.contains("n") || !spec.contains("edges"))
    fail("MalformedSyntax", "edge list JSON needs 'n' and 'edges'");
  TaitGraph g;
  g.n = spec.at("n").get<int>();
  if (g.n < 0) fail("MalformedSyntax", "negative vertex count");
  for (const auto& e : spec.at("edges")) {
    if (!e.is_array() || e.size() != 3)
      fail("MalformedSyntax", "edge must be [tail, head, weight]");
    TaitEdge te{e[0].get<int>(), e[1].get<int>(), e[2].get<int>(), -1};
    if (te.tail < 0 || te.tail >= g.n || te.head < 0 || te.head >= g.n)
      fail("IndexOutOfRange", "edge endpoint outside 0..n-1");
    g.edges.push_back(te);
  }
  if (spec.contains("order")) {
    auto order = spec.at("order").get<std::vector<int>>();
    if (static_cast<int>(order.size()) != g.n)
      fail("MalformedSyntax", "order must list every vertex once");
    std::vector<int> pos(static_cast<std::size_t>(g.n), -1);
    for (int i = 0; i < g.n; ++i) {
      int v = order[static_cast<std::size_t>(i)];
      if (v < 0 || v >= g.n) fail("IndexOutOfRange", "order entry");
      if (pos[static_cast<std::size_t>(v)] != -1)
        fail("MalformedSyntax", "order repeats a vertex");
      pos[static_cast<std::size_t>(v)] = i;
    }
    for (auto& e : g.edges) {
      e.tail = pos[static_cast<std::size_t>(e.tail)];
      e.head = pos[static_cast<std::size_t>(e.head)];
    }
    g.vertex_labels = order;
  } else {
    g.vertex_labels.assign(static_cast<std::size_t>(g.n), -1);
  }
  g.balanced = true;
  std::vector<long long> net(static_cast<std::size_t>(g.n), 0);
  for (const auto& e : g.edges) {
    net[static_cast<std::size_t>(e.tail)] += e.weight;
    net[static_cast<std::size_t>(e.head)] -= e.weight;
  }
  for (auto x : net)
    if (x != 0) g.balanced = false;
  if (strict && !g.balanced)
    fail("UnbalancedGraph", "weighted in/out degrees differ");
  return g;
}

}  // namespace knotres
