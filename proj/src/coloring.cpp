#include "ivcol/coloring.hpp"

namespace ivcol {

long long complete_edge_count(int m) {
  if (m < 1) fail(Errc::BadArgument, "complete graph needs m >= 1");
  return static_cast<long long>(m) * (m - 1) / 2;
}

int complete_edge_index(int m, int u, int v) {
  if (u < 1 || v <= u || v > m)
    fail(Errc::BadArgument, "edge (u,v) needs 1 <= u < v <= m");
  // edges with first endpoint < u, then offset within row u
  const long long before =
      static_cast<long long>(u - 1) * m - static_cast<long long>(u) * (u - 1) / 2;
  return static_cast<int>(before + (v - u - 1));
}

}  // namespace ivcol
