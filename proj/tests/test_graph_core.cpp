// Tests for K_n^k enumeration, degrees, chromatic index, colorability,
// and the closed-form W lower bounds.

#include <doctest.h>

#include "ivcol/graph_core.hpp"
#include "ivcol/solver.hpp"
#include "test_util.hpp"

using namespace ivcol;

TEST_CASE("edge enumeration: sizes and canonical order") {
  SUBCASE("K_1^2 is a single edge") {
    const auto edges = enumerate_edges({2, 1});
    REQUIRE(edges.size() == 1);
    CHECK(edges[0] == EdgeId{{1, 1}, {2, 1}});
  }
  SUBCASE("K_3 has its three part pairs in order") {
    const auto edges = enumerate_edges({3, 1});
    REQUIRE(edges.size() == 3);
    CHECK(edges[0].u.part == 1);
    CHECK(edges[0].v.part == 2);
    CHECK(edges[1].v.part == 3);
    CHECK(edges[2].u.part == 2);
  }
  SUBCASE("K_2^4 has n^2 * C(k,2) edges") {
    CHECK(enumerate_edges({4, 2}).size() == 24);
    CHECK(edge_count({4, 2}) == 24);
  }
  SUBCASE("order is lexicographic by (u.part, v.part, u.index, v.index)") {
    const auto edges = enumerate_edges({3, 2});
    for (std::size_t e = 1; e < edges.size(); ++e) {
      const auto key = [](const EdgeId& id) {
        return std::array<int, 4>{id.u.part, id.v.part, id.u.index, id.v.index};
      };
      CHECK(key(edges[e - 1]) < key(edges[e]));
    }
  }
  SUBCASE("k=1 is edgeless but accepted by enumeration") {
    CHECK(enumerate_edges({1, 5}).empty());
    CHECK(max_degree({1, 5}) == 0);
  }
}

TEST_CASE("max degree and regularity across the sweep grid") {
  CHECK(max_degree({4, 1}) == 3);
  CHECK(max_degree({6, 3}) == 15);
  for (int k = 2; k <= 16; ++k) {
    for (int n = 1; n <= 8; ++n) {
      const PartiteSpec spec{k, n};
      const auto g = kpartite_graph(spec);
      const auto deg = vertex_degrees(g);
      for (int v = 1; v <= g.vertex_count; ++v)
        REQUIRE(deg[static_cast<std::size_t>(v)] == max_degree(spec));
      REQUIRE(is_regular(g));
    }
  }
}

TEST_CASE("chromatic index formula") {
  CHECK(chromatic_index({3, 3}) == 7);
  CHECK(chromatic_index({4, 1}) == 3);
  CHECK(chromatic_index({3, 1}) == 3);
  CHECK_THROWS_AS((void)chromatic_index({1, 4}), Error);

  SUBCASE("difference from the degree is the parity of n*k") {
    for (int k = 2; k <= 16; ++k) {
      for (int n = 1; n <= 8; ++n) {
        const int gap = chromatic_index({k, n}) - max_degree({k, n});
        REQUIRE(gap == ((n * k) % 2 == 0 ? 0 : 1));
      }
    }
  }
  SUBCASE("agrees with a brute-force proper-coloring oracle") {
    CHECK(testutil::brute_chromatic_index(kpartite_graph({3, 1})) == 3);
    CHECK(testutil::brute_chromatic_index(kpartite_graph({2, 2})) == 2);
    CHECK(testutil::brute_chromatic_index(kpartite_graph({4, 1})) == 3);
    CHECK(testutil::brute_chromatic_index(kpartite_graph({5, 1})) == 5);
  }
}

TEST_CASE("interval colorability predicate") {
  CHECK(is_interval_colorable({4, 3}));
  CHECK_FALSE(is_interval_colorable({3, 3}));
  CHECK_FALSE(is_interval_colorable({3, 1}));
  CHECK_THROWS_AS((void)is_interval_colorable({1, 2}), Error);

  SUBCASE("agrees with the exhaustive solver on instances up to 12 edges") {
    for (int k = 2; k <= 5; ++k) {
      for (int n = 1; n <= 3; ++n) {
        const PartiteSpec spec{k, n};
        if (edge_count(spec) > 12) continue;
        const auto g = kpartite_graph(spec);
        bool any_witness = false;
        for (int t = max_degree(spec);
             t <= static_cast<int>(g.edges.size()) && !any_witness; ++t)
          any_witness =
              find_interval_coloring(g, t).status == SolveStatus::Witness;
        REQUIRE(any_witness == is_interval_colorable(spec));
      }
    }
  }
}

TEST_CASE("w value") {
  CHECK(w_value({4, 2}) == 6);
  CHECK(w_value({2, 1}) == 1);
  CHECK(w_value({2, 2}) == 2);
  CHECK_THROWS_AS((void)w_value({3, 3}), Error);
  try {
    (void)w_value({3, 1});
    FAIL("expected NotIntervalColorable");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotIntervalColorable);
  }
}

TEST_CASE("odd part decomposition by repeated halving") {
  CHECK(split_odd_part(12) == OddPartDecomposition{3, 2});
  CHECK(split_odd_part(8) == OddPartDecomposition{1, 3});
  CHECK(split_odd_part(1) == OddPartDecomposition{1, 0});
  CHECK(split_odd_part(6) == OddPartDecomposition{3, 1});
  CHECK_THROWS_AS((void)split_odd_part(0), Error);
}

TEST_CASE("W lower bounds") {
  SUBCASE("k=4, n=2: both routes give 9") {
    const auto report = best_W_lower({4, 2});
    CHECK(*theorem3_W_bound({4, 2}) == 9);
    CHECK(*theorem4_W_bound({4, 2}) == 9);
    CHECK(report.W_lower == 9);
    CHECK(report.delta == 6);
    CHECK(report.w_value == 6);
  }
  SUBCASE("k=8, n=1: the lifted route reaches 11, one above the direct 10") {
    const auto report = best_W_lower({8, 1});
    CHECK(*theorem3_W_bound({8, 1}) == 10);
    CHECK(*theorem4_W_bound({8, 1}) == 11);
    CHECK(report.W_lower == 11);
    CHECK(report.W_lower_source == WBoundSource::Theorem4);
  }
  SUBCASE("k=12, n=2: the lifted route wins") {
    const auto report = best_W_lower({12, 2});
    CHECK(*theorem3_W_bound({12, 2}) == 33);
    CHECK(*theorem4_W_bound({12, 2}) == 37);
    CHECK(report.W_lower == 37);
    CHECK(report.W_lower_source == WBoundSource::Theorem4);
  }
  SUBCASE("odd k with even n: colorable but no bound applies") {
    const auto report = best_W_lower({3, 2});
    CHECK(report.colorable);
    CHECK(report.w_value == 4);
    CHECK_FALSE(report.W_lower.has_value());
    CHECK(report.W_lower_source == WBoundSource::None);
  }
  SUBCASE("odd n*k is rejected") {
    CHECK_THROWS_AS((void)best_W_lower({3, 3}), Error);
  }
  SUBCASE("bound dominates w wherever both exist") {
    for (int k = 2; k <= 16; k += 2)
      for (int n = 1; n <= 8; ++n) {
        const auto report = best_W_lower({k, n});
        REQUIRE(report.W_lower.has_value());
        REQUIRE(*report.W_lower >= *report.w_value);
      }
  }
}

TEST_CASE("interval sets") {
  const auto window = IntervalSet::from_start_size(4, 3);
  CHECK(window == IntervalSet{4, 6});
  CHECK(window.size() == 3);
  CHECK(window.contains(6));
  CHECK_FALSE(window.contains(7));
  CHECK(window.shifted(2) == IntervalSet{6, 8});
}

TEST_CASE("flat vertex numbering round-trips") {
  const PartiteSpec spec{4, 3};
  for (int flat = 1; flat <= vertex_count(spec); ++flat)
    CHECK(flat_vertex(spec, vertex_from_flat(spec, flat)) == flat);
  CHECK(vertex_label(spec, 5) == "x_2^(2)");
}
