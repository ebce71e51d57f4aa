#pragma once

#include "turmlab/graph.hpp"

namespace turmlab {

// A graph together with the protected vertex set M and the clique order r:
// the constraint of interest is that no K_r of the graph intersects M.
struct Instance {
  Graph graph;
  VertexSet M;
  int r = 3;

  int n() const { return graph.vertex_count(); }
  int m() const { return M.count(); }

  bool operator==(const Instance&) const = default;
};

}  // namespace turmlab
