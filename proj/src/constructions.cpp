// constructions.cpp: interval coloring constructions and transforms.

#include "ivcol/constructions.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

#include "ivcol/verifier.hpp"

namespace ivcol {

namespace {

void require_even_k(PartiteSpec spec) {
  if (spec.k < 1 || spec.n < 1)
    fail(Errc::BadArgument, "K_n^k needs k >= 1 and n >= 1");
  if (spec.k < 2 || spec.k % 2 != 0)
    fail(Errc::OddK, "construction requires an even part count k >= 2");
}

// Color multiplier for the part pair (i, j), i < j, in the eight-band
// coloring; the final edge color is multiplier*n + p + q - 1. Exactly one
// band must claim each pair; the caller audits that.
struct BandTable {
  std::vector<int> multiplier;  // indexed by pair rank
  int k;
  int& at(int i, int j) { return multiplier[(i - 1) * k + (j - 1)]; }
};

BandTable eight_band_multipliers(int k) {
  const int half = k / 2;
  const int quarter = k / 4;            // floor
  const int quarter2 = (k - 2) / 4;     // floor
  BandTable table{std::vector<int>(static_cast<std::size_t>(k) * k, -1), k};

  for (int i = 1; i < k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      int matched = 0;
      int value = -1;
      auto claim = [&](bool hit, int m) {
        if (hit) {
          ++matched;
          value = m;
        }
      };
      claim(i <= quarter && j >= 2 && j <= half && i + j <= half + 1,
            i + j - 3);
      claim(i >= 2 && i <= half - 1 && j >= quarter + 2 && j <= half &&
                i + j >= half + 2,
            i + j + half - 4);
      claim(i >= 3 && i <= half && j >= half + 1 && j <= k - 2 &&
                j - i <= half - 2,
            half + j - i - 1);
      claim(i <= half && j >= half + 1 && j - i >= half, j - i - 1);
      claim(i >= 2 && i <= 1 + quarter2 && j >= half + 1 &&
                j <= half + quarter2 && j - i == half - 1,
            2 * i - 3);
      claim(i >= quarter2 + 2 && i <= half && j >= half + 1 + quarter2 &&
                j <= k - 1 && j - i == half - 1,
            i + j - 3);
      claim(i >= half + 1 && i <= half + quarter - 1 && j >= half + 2 &&
                j <= k - 2 && i + j <= 3 * half - 1,
            i + j - k - 1);
      claim(i >= half + 1 && j >= half + quarter + 1 && i + j >= 3 * half,
            i + j - half - 2);
      if (matched != 1)
        throw std::logic_error("band audit failed for part pair (" +
                               std::to_string(i) + "," + std::to_string(j) +
                               "): " + std::to_string(matched) + " bands");
      table.at(i, j) = value;
    }
  }
  return table;
}

}  // namespace

EdgeColoring theorem3_coloring(PartiteSpec spec) {
  require_even_k(spec);
  auto table = eight_band_multipliers(spec.k);
  EdgeColoring out{spec, (3 * spec.k / 2 - 1) * spec.n - 1, {}};
  out.colors.reserve(static_cast<std::size_t>(edge_count(spec)));
  for (const EdgeId& e : enumerate_edges(spec))
    out.colors.push_back(table.at(e.u.part, e.v.part) * spec.n + e.u.index +
                         e.v.index - 1);
  return out;
}

EdgeColoring lift_coloring(const CompleteColoring& base, int n) {
  if (n < 1) fail(Errc::BadArgument, "lift needs n >= 1");
  if (base.m < 2) fail(Errc::InvalidBase, "lift base needs at least one edge");
  if (!verify(base).pass())
    fail(Errc::InvalidBase, "lift base is not a verified interval coloring");
  const PartiteSpec spec{base.m, n};
  EdgeColoring out{spec, (base.t + 1) * n - 1, {}};
  out.colors.reserve(static_cast<std::size_t>(edge_count(spec)));
  for (const EdgeId& e : enumerate_edges(spec)) {
    const int base_color = base.colors[static_cast<std::size_t>(
        complete_edge_index(base.m, e.u.part, e.v.part))];
    out.colors.push_back((base_color - 1) * n + e.u.index + e.v.index - 1);
  }
  return out;
}

CompleteColoring round_robin_factorization(int m) {
  if (m < 2 || m % 2 != 0)
    fail(Errc::OddM, "1-factorization needs an even vertex count m >= 2");
  const int rounds = m - 1;
  std::vector<int> color(static_cast<std::size_t>(complete_edge_count(m)), 0);
  auto place = [&](int a, int b, int round) {
    const int u = std::min(a, b), v = std::max(a, b);
    auto& slot = color[static_cast<std::size_t>(complete_edge_index(m, u, v))];
    assert(slot == 0);
    slot = round;
  };
  for (int r = 1; r <= rounds; ++r) {
    place(r, m, r);  // the fixed vertex plays the rotating one
    for (int i = 1; i <= m / 2 - 1; ++i) {
      const int a = (r - 1 + i) % rounds + 1;
      const int b = ((r - 1 - i) % rounds + rounds) % rounds + 1;
      place(a, b, r);
    }
  }
  return {m, rounds, std::move(color)};
}

EdgeColoring blowup_min_coloring(PartiteSpec spec) {
  require_even_k(spec);
  const CompleteColoring factors = round_robin_factorization(spec.k);
  EdgeColoring out{spec, max_degree(spec), {}};
  out.colors.reserve(static_cast<std::size_t>(edge_count(spec)));
  for (const EdgeId& e : enumerate_edges(spec)) {
    const int factor = factors.colors[static_cast<std::size_t>(
        complete_edge_index(spec.k, e.u.part, e.v.part))];
    const int offset = (e.u.index + e.v.index - 2) % spec.n;
    out.colors.push_back((factor - 1) * spec.n + offset + 1);
  }
  return out;
}

CompleteSearchResult complete_graph_coloring(int k, std::optional<int> target_t,
                                             const SearchBudget& budget) {
  if (k < 2 || k % 2 != 0)
    fail(Errc::OddK, "complete-graph coloring needs an even k >= 2");
  const auto dec = split_odd_part(k);
  const int target =
      target_t.value_or(2 * k - 1 - dec.odd_part - dec.exponent);
  CompleteColoring baseline = round_robin_factorization(k);
  if (target < k - 1)
    fail(Errc::BadT, "target color count below the max degree");
  if (target == k - 1)
    return {std::move(baseline), target, true, SolveStatus::Witness, 0};

  SearchOptions options;
  options.exploit_edge_transitivity = true;  // complete graphs are edge-transitive
  const auto outcome =
      find_interval_coloring(complete_graph(k), target, budget, options);
  if (outcome.status == SolveStatus::Witness) {
    CompleteColoring found{k, target, *outcome.witness};
    return {std::move(found), target, true, SolveStatus::Witness,
            outcome.nodes_explored};
  }
  return {std::move(baseline), target, false, outcome.status,
          outcome.nodes_explored};
}

std::pair<std::vector<int>, int> compress_coloring(const SimpleGraph& g,
                                                   std::span<const int> colors,
                                                   int t) {
  if (!verify(g, colors, t).pass())
    fail(Errc::NotVerified, "compress input is not a verified interval coloring");
  if (!is_regular(g))
    fail(Errc::NotRegular, "compress applies to regular graphs only");
  const int delta = graph_max_degree(g);
  if (t <= delta)
    fail(Errc::AlreadyMinimal, "coloring already uses the minimum color count");
  std::vector<int> out(colors.begin(), colors.end());
  // Recolor color-1 edges to delta+1 (fresh at both endpoints: their
  // palettes are exactly {1..delta}), then shift everything down by one.
  for (int& c : out) c = (c == 1) ? delta : c - 1;
  return {std::move(out), t - 1};
}

EdgeColoring compress(const EdgeColoring& c) {
  auto [colors, t] = compress_coloring(kpartite_graph(c.spec), c.colors, c.t);
  return {c.spec, t, std::move(colors)};
}

CompleteColoring compress(const CompleteColoring& c) {
  auto [colors, t] = compress_coloring(complete_graph(c.m), c.colors, c.t);
  return {c.m, t, std::move(colors)};
}

std::map<int, EdgeColoring> spectrum_sweep(PartiteSpec spec,
                                           const SearchBudget& budget) {
  require_even_k(spec);
  EdgeColoring top = theorem3_coloring(spec);
  const auto lifted_bound = theorem4_W_bound(spec);
  if (lifted_bound && *lifted_bound > top.t) {
    // The lifted route reaches strictly higher, but only with a searched
    // base; fall back to the direct coloring when the search comes back
    // empty-handed.
    const auto result = complete_graph_coloring(spec.k, std::nullopt, budget);
    if (result.target_met) {
      EdgeColoring lifted = lift_coloring(result.best, spec.n);
      assert(lifted.t == *lifted_bound);
      top = std::move(lifted);
    }
  }
  std::map<int, EdgeColoring> sweep;
  const int floor_t = max_degree(spec);
  EdgeColoring current = std::move(top);
  while (true) {
    const int t = current.t;
    sweep.emplace(t, current);
    if (t == floor_t) break;
    current = compress(current);
  }
  return sweep;
}

}  // namespace ivcol
