#pragma once

#include <vector>

#include <json.hpp>

#include "knotres/diagram.hpp"
#include "knotres/matrix.hpp"

namespace knotres {

struct TaitEdge {
  int tail = 0;
  int head = 0;
  int weight = 0;        // +-1 for diagram-derived graphs
  int crossing = -1;     // source crossing id, -1 for edge-list inputs
};

// Directed weighted graph on the unshaded regions of a diagram, one edge per
// crossing, or an arbitrary digraph ingested from an edge list.
struct TaitGraph {
  int n = 0;
  std::vector<TaitEdge> edges;
  // vertex -> face id in the source diagram (-1 for edge-list inputs)
  std::vector<int> vertex_labels;
  // vertex -> minimal incident arc label (the stable ordering key)
  std::vector<int> vertex_keys;
  bool balanced = false;

  nlohmann::json to_json() const;
};

// Builds the Tait graph of an accepted diagram: vertices are the unshaded
// faces in canonical order (sorted by minimal incident arc label, or the
// diagram's explicit order directive), one directed edge per crossing.
// A positive crossing contributes weight -1, a negative one +1.
// Throws Error("NotAccepted") when validate() rejects the diagram.
TaitGraph tait_graph(const Diagram& d);

// n x n Laplacian: L[i][i] = weighted out-degree of i, L[i][j] (i != j) =
// -(sum of weights of edges i -> j). Balanced graphs give zero row and
// column sums.
RationalMatrix laplacian(const TaitGraph& g);

// Ingests {"n": ..., "edges": [[tail, head, weight], ...], "order": [...]}.
// Balancedness is recorded in the result; with strict=true an unbalanced
// graph throws Error("UnbalancedGraph"). Bad vertex indices throw
// Error("IndexOutOfRange").
TaitGraph from_edge_list(const nlohmann::json& spec, bool strict = false);

}  // namespace knotres
