#pragma once
// Edge coloring value types. Color arrays are always aligned to the
// canonical edge order of their instance.

#include <vector>

#include "ivcol/graph_core.hpp"

namespace ivcol {

// Total edge coloring of K_n^k with declared color count t.
// Properness, per-vertex interval palettes, and surjectivity onto {1..t}
// are checked by the verifier, never assumed.
struct EdgeColoring {
  PartiteSpec spec;
  int t = 0;
  std::vector<int> colors;
  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

// Edge coloring of the complete graph K_m, aligned to lexicographic pair
// order (1,2),(1,3),...,(m-1,m).
struct CompleteColoring {
  int m = 0;
  int t = 0;
  std::vector<int> colors;
  friend bool operator==(const CompleteColoring&,
                         const CompleteColoring&) = default;
};

long long complete_edge_count(int m);

// Position of edge (u,v), u < v, in the canonical K_m order.
int complete_edge_index(int m, int u, int v);

}  // namespace ivcol
