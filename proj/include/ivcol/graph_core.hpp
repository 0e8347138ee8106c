#pragma once
// Complete k-partite graphs K_n^k: vertex/edge enumeration, degrees,
// chromatic index, interval-colorability predicates, and the closed-form
// lower bounds on W (the largest feasible color count).
//
// Index convention: parts, vertex indices within a part, colors, and flat
// vertex ids are all 1-based. Off-by-one translation happens only inside
// array accesses.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ivcol/error.hpp"

namespace ivcol {

// The pair (k, n) defining K_n^k: k parts with n vertices each.
struct PartiteSpec {
  int k = 0;
  int n = 0;
  friend bool operator==(const PartiteSpec&, const PartiteSpec&) = default;
};

// Vertex x_index^(part).
struct VertexId {
  int part = 0;
  int index = 0;
  friend bool operator==(const VertexId&, const VertexId&) = default;
};

// Cross-part edge, stored with u.part < v.part.
struct EdgeId {
  VertexId u;
  VertexId v;
  friend bool operator==(const EdgeId&, const EdgeId&) = default;
};

// Integer interval {lo, ..., hi}.
struct IntervalSet {
  int lo = 0;
  int hi = 0;

  // Interval with the given first element and size.
  static IntervalSet from_start_size(int start, int size);
  int size() const { return hi - lo + 1; }
  bool contains(int c) const { return lo <= c && c <= hi; }
  // Same size, first element moved by p.
  IntervalSet shifted(int p) const { return {lo + p, hi + p}; }
  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;
};

enum class WBoundSource { Theorem3, Theorem4, LiftedFactorization, None };

// Closed-form quantities for one K_n^k instance.
struct BoundReport {
  int delta = 0;
  int chi_prime = 0;
  bool colorable = false;
  std::optional<int> w_value;
  std::optional<int> W_lower;
  WBoundSource W_lower_source = WBoundSource::None;
};

// value = odd_part * 2^exponent with odd_part odd.
struct OddPartDecomposition {
  int odd_part = 0;
  int exponent = 0;
  friend bool operator==(const OddPartDecomposition&,
                         const OddPartDecomposition&) = default;
};

// Minimal general graph carrier used by the verifier and the solver.
// Vertices are 1..vertex_count; edges are unordered pairs without loops.
struct SimpleGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
};

long long vertex_count(PartiteSpec spec);
long long edge_count(PartiteSpec spec);

// Edges of K_n^k in canonical order: lexicographic by
// (u.part, v.part, u.index, v.index). This order is the serialization
// contract for all color arrays.
std::vector<EdgeId> enumerate_edges(PartiteSpec spec);

// (k-1)*n; every vertex attains it (the graph is regular).
int max_degree(PartiteSpec spec);

// (k-1)*n when n*k is even, (k-1)*n + 1 when odd. Requires k >= 2.
int chromatic_index(PartiteSpec spec);

// True iff n*k is even. Requires k >= 2.
bool is_interval_colorable(PartiteSpec spec);

// Least feasible color count: (k-1)*n. Throws NotIntervalColorable when
// n*k is odd.
int w_value(PartiteSpec spec);

// (3/2*k - 1)*n - 1 when k is even, otherwise no bound.
std::optional<int> theorem3_W_bound(PartiteSpec spec);

// (2k - p - q)*n - 1 for k = p*2^q with p odd and q >= 1 (even k only:
// odd K_k has no interval coloring to lift).
std::optional<int> theorem4_W_bound(PartiteSpec spec);

// All applicable W lower bounds and their maximum with provenance.
BoundReport best_W_lower(PartiteSpec spec);

// Odd part and 2-adic valuation, by repeated halving. Requires value >= 1.
OddPartDecomposition split_odd_part(int value);

// Flat vertex numbering: x_j^(i) -> (i-1)*n + j.
int flat_vertex(PartiteSpec spec, VertexId v);
VertexId vertex_from_flat(PartiteSpec spec, int flat);
std::string vertex_label(PartiteSpec spec, int flat);  // "x_j^(i)"

// K_n^k as a SimpleGraph; edge order matches enumerate_edges.
SimpleGraph kpartite_graph(PartiteSpec spec);

// Complete graph K_m with edges in lexicographic pair order.
SimpleGraph complete_graph(int m);

std::vector<int> vertex_degrees(const SimpleGraph& g);
int graph_max_degree(const SimpleGraph& g);
bool is_regular(const SimpleGraph& g);

}  // namespace ivcol
