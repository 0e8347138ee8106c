// graph_core.cpp: combinatorics of K_n^k and its closed-form bounds.

#include "ivcol/graph_core.hpp"

#include <algorithm>

namespace ivcol {

namespace {

void validate_spec(PartiteSpec spec) {
  if (spec.k < 1 || spec.n < 1)
    fail(Errc::BadArgument, "K_n^k needs k >= 1 and n >= 1");
}

void require_edges(PartiteSpec spec) {
  validate_spec(spec);
  if (spec.k < 2)
    fail(Errc::BadArgument, "operation undefined for the edgeless K_n^1");
}

}  // namespace

IntervalSet IntervalSet::from_start_size(int start, int size) {
  if (size < 1) fail(Errc::BadArgument, "interval size must be >= 1");
  return {start, start + size - 1};
}

long long vertex_count(PartiteSpec spec) {
  validate_spec(spec);
  return static_cast<long long>(spec.k) * spec.n;
}

long long edge_count(PartiteSpec spec) {
  validate_spec(spec);
  const long long n = spec.n, k = spec.k;
  return n * n * k * (k - 1) / 2;
}

std::vector<EdgeId> enumerate_edges(PartiteSpec spec) {
  validate_spec(spec);
  std::vector<EdgeId> edges;
  edges.reserve(static_cast<std::size_t>(edge_count(spec)));
  for (int i = 1; i <= spec.k; ++i)
    for (int j = i + 1; j <= spec.k; ++j)
      for (int p = 1; p <= spec.n; ++p)
        for (int q = 1; q <= spec.n; ++q)
          edges.push_back({{i, p}, {j, q}});
  return edges;
}

int max_degree(PartiteSpec spec) {
  validate_spec(spec);
  return (spec.k - 1) * spec.n;
}

int chromatic_index(PartiteSpec spec) {
  require_edges(spec);
  const int delta = max_degree(spec);
  return (static_cast<long long>(spec.n) * spec.k) % 2 == 0 ? delta : delta + 1;
}

bool is_interval_colorable(PartiteSpec spec) {
  // Regular graph: colorable iff the chromatic index equals the degree.
  return chromatic_index(spec) == max_degree(spec);
}

int w_value(PartiteSpec spec) {
  require_edges(spec);
  if (!is_interval_colorable(spec))
    fail(Errc::NotIntervalColorable,
         "K_n^k with n*k odd admits no interval coloring");
  return max_degree(spec);
}

std::optional<int> theorem3_W_bound(PartiteSpec spec) {
  require_edges(spec);
  if (spec.k % 2 != 0) return std::nullopt;
  return (3 * spec.k / 2 - 1) * spec.n - 1;
}

std::optional<int> theorem4_W_bound(PartiteSpec spec) {
  require_edges(spec);
  const auto dec = split_odd_part(spec.k);
  if (dec.exponent < 1) return std::nullopt;  // odd k: no K_k base exists
  return (2 * spec.k - dec.odd_part - dec.exponent) * spec.n - 1;
}

BoundReport best_W_lower(PartiteSpec spec) {
  require_edges(spec);
  if (!is_interval_colorable(spec))
    fail(Errc::NotIntervalColorable,
         "K_n^k with n*k odd admits no interval coloring");
  BoundReport report;
  report.delta = max_degree(spec);
  report.chi_prime = chromatic_index(spec);
  report.colorable = true;
  report.w_value = report.delta;
  const auto b3 = theorem3_W_bound(spec);
  const auto b4 = theorem4_W_bound(spec);
  // Ties go to the direct construction route.
  if (b4 && (!b3 || *b4 > *b3)) {
    report.W_lower = b4;
    report.W_lower_source = WBoundSource::Theorem4;
  } else if (b3) {
    report.W_lower = b3;
    report.W_lower_source = WBoundSource::Theorem3;
  }
  return report;
}

OddPartDecomposition split_odd_part(int value) {
  if (value < 1) fail(Errc::BadArgument, "decomposition needs value >= 1");
  OddPartDecomposition dec{value, 0};
  while (dec.odd_part % 2 == 0) {
    dec.odd_part /= 2;
    ++dec.exponent;
  }
  return dec;
}

int flat_vertex(PartiteSpec spec, VertexId v) {
  validate_spec(spec);
  if (v.part < 1 || v.part > spec.k || v.index < 1 || v.index > spec.n)
    fail(Errc::BadArgument, "vertex outside K_n^k");
  return (v.part - 1) * spec.n + v.index;
}

VertexId vertex_from_flat(PartiteSpec spec, int flat) {
  validate_spec(spec);
  if (flat < 1 || flat > vertex_count(spec))
    fail(Errc::BadArgument, "flat vertex id out of range");
  return {(flat - 1) / spec.n + 1, (flat - 1) % spec.n + 1};
}

std::string vertex_label(PartiteSpec spec, int flat) {
  const VertexId v = vertex_from_flat(spec, flat);
  return "x_" + std::to_string(v.index) + "^(" + std::to_string(v.part) + ")";
}

SimpleGraph kpartite_graph(PartiteSpec spec) {
  SimpleGraph g;
  g.vertex_count = static_cast<int>(vertex_count(spec));
  g.edges.reserve(static_cast<std::size_t>(edge_count(spec)));
  for (const EdgeId& e : enumerate_edges(spec))
    g.edges.emplace_back(flat_vertex(spec, e.u), flat_vertex(spec, e.v));
  return g;
}

SimpleGraph complete_graph(int m) {
  if (m < 1) fail(Errc::BadArgument, "complete graph needs m >= 1");
  SimpleGraph g;
  g.vertex_count = m;
  g.edges.reserve(static_cast<std::size_t>(m) * (m - 1) / 2);
  for (int u = 1; u <= m; ++u)
    for (int v = u + 1; v <= m; ++v) g.edges.emplace_back(u, v);
  return g;
}

std::vector<int> vertex_degrees(const SimpleGraph& g) {
  std::vector<int> deg(static_cast<std::size_t>(g.vertex_count) + 1, 0);
  for (const auto& [u, v] : g.edges) {
    if (u < 1 || u > g.vertex_count || v < 1 || v > g.vertex_count || u == v)
      fail(Errc::BadArgument, "edge endpoint out of range");
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
  }
  return deg;
}

int graph_max_degree(const SimpleGraph& g) {
  const auto deg = vertex_degrees(g);
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

bool is_regular(const SimpleGraph& g) {
  const auto deg = vertex_degrees(g);
  for (int v = 2; v <= g.vertex_count; ++v)
    if (deg[static_cast<std::size_t>(v)] != deg[1]) return false;
  return true;
}

}  // namespace ivcol
