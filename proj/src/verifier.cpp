// verifier.cpp: interval t-coloring verification with per-violation
// diagnostics.

#include "ivcol/verifier.hpp"

#include <algorithm>
#include <sstream>

namespace ivcol {

namespace {

std::string join_colors(const std::vector<int>& colors) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (i) out << ',';
    out << colors[i];
  }
  out << '}';
  return out.str();
}

// Incident color lists per vertex, duplicates preserved.
std::vector<std::vector<int>> incident_colors(const SimpleGraph& g,
                                              std::span<const int> colors) {
  if (colors.size() != g.edges.size())
    fail(Errc::LengthMismatch, "color array length does not match edge count");
  std::vector<std::vector<int>> inc(static_cast<std::size_t>(g.vertex_count) + 1);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto& [u, v] = g.edges[e];
    if (u < 1 || u > g.vertex_count || v < 1 || v > g.vertex_count || u == v)
      fail(Errc::BadArgument, "edge endpoint out of range");
    inc[static_cast<std::size_t>(u)].push_back(colors[e]);
    inc[static_cast<std::size_t>(v)].push_back(colors[e]);
  }
  return inc;
}

}  // namespace

bool is_interval_set(std::span<const int> sorted_colors) {
  if (sorted_colors.empty()) fail(Errc::EmptySet, "empty color set");
  return sorted_colors.back() - sorted_colors.front() + 1 ==
         static_cast<int>(sorted_colors.size());
}

std::vector<Palette> palettes(const SimpleGraph& g,
                              std::span<const int> colors) {
  auto inc = incident_colors(g, colors);
  std::vector<Palette> result;
  result.reserve(static_cast<std::size_t>(g.vertex_count));
  for (int v = 1; v <= g.vertex_count; ++v) {
    auto& cs = inc[static_cast<std::size_t>(v)];
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    result.push_back({v, std::move(cs)});
  }
  return result;
}

std::vector<VertexPalette> palettes(const EdgeColoring& c) {
  auto flat = palettes(kpartite_graph(c.spec), c.colors);
  std::vector<VertexPalette> result;
  result.reserve(flat.size());
  for (auto& p : flat)
    result.push_back({vertex_from_flat(c.spec, p.vertex), std::move(p.colors)});
  return result;
}

VerificationReport verify(const SimpleGraph& g, std::span<const int> colors,
                          int t) {
  if (t < 1) fail(Errc::BadT, "declared color count must be >= 1");
  auto inc = incident_colors(g, colors);

  VerificationReport report;
  report.t = t;
  bool any_duplicate = false, any_gap = false, any_out_of_range = false,
       any_unused = false;

  std::vector<long long> use_count(static_cast<std::size_t>(t) + 1, 0);
  for (std::size_t e = 0; e < colors.size(); ++e) {
    const int c = colors[e];
    if (c < 1 || c > t) {
      any_out_of_range = true;
      std::ostringstream msg;
      msg << "edge #" << e + 1 << " has color " << c << " outside [1.." << t
          << "]";
      report.violations.push_back(
          {ViolationKind::ColorOutOfRange, 0, c, msg.str()});
    } else {
      ++use_count[static_cast<std::size_t>(c)];
    }
  }

  for (int v = 1; v <= g.vertex_count; ++v) {
    auto& cs = inc[static_cast<std::size_t>(v)];
    if (cs.empty()) continue;
    std::sort(cs.begin(), cs.end());
    // duplicates first, then the contiguity check on the collapsed set
    for (std::size_t i = 0; i + 1 < cs.size();) {
      std::size_t j = i;
      while (j + 1 < cs.size() && cs[j + 1] == cs[i]) ++j;
      if (j > i) {
        any_duplicate = true;
        std::ostringstream msg;
        msg << "color " << cs[i] << " appears " << j - i + 1
            << " times at vertex " << v;
        report.violations.push_back(
            {ViolationKind::DuplicateAtVertex, v, cs[i], msg.str()});
      }
      i = j + 1;
    }
    std::vector<int> set = cs;
    set.erase(std::unique(set.begin(), set.end()), set.end());
    if (!is_interval_set(set)) {
      any_gap = true;
      int first_missing = 0;
      for (int c = set.front(); c <= set.back(); ++c) {
        if (!std::binary_search(set.begin(), set.end(), c)) {
          first_missing = c;
          break;
        }
      }
      std::ostringstream msg;
      msg << "palette " << join_colors(set) << " at vertex " << v
          << " is not contiguous (missing " << first_missing << ")";
      report.violations.push_back(
          {ViolationKind::GapAtVertex, v, first_missing, msg.str()});
    }
  }

  for (int c = 1; c <= t; ++c) {
    if (use_count[static_cast<std::size_t>(c)] == 0) {
      any_unused = true;
      std::ostringstream msg;
      msg << "color " << c << " is not used by any edge";
      report.violations.push_back({ViolationKind::UnusedColor, 0, c, msg.str()});
    }
  }

  report.proper = !any_duplicate && !any_out_of_range;
  report.interval_at_every_vertex = !any_gap;
  report.all_colors_used = !any_unused;
  std::sort(report.violations.begin(), report.violations.end(),
            [](const Violation& a, const Violation& b) {
              if (a.vertex != b.vertex) return a.vertex < b.vertex;
              if (a.color != b.color) return a.color < b.color;
              return static_cast<int>(a.kind) < static_cast<int>(b.kind);
            });
  return report;
}

VerificationReport verify(const EdgeColoring& c) {
  return verify(kpartite_graph(c.spec), c.colors, c.t);
}

VerificationReport verify(const CompleteColoring& c) {
  return verify(complete_graph(c.m), c.colors, c.t);
}

std::vector<PaletteMismatch> palette_formula_check(const EdgeColoring& c) {
  const auto [k, n] = c.spec;
  if (k < 2 || k % 2 != 0)
    fail(Errc::OddK, "palette formulas apply to even part counts only");
  const int width = max_degree(c.spec);
  std::vector<PaletteMismatch> mismatches;
  for (const auto& pal : palettes(c)) {
    const int i = pal.vertex.part, j = pal.vertex.index;
    int start = 0;
    if (i <= 2)
      start = j;
    else if (i <= k / 2)
      start = j + n * (i - 2);
    else if (i <= k - 2)
      start = j + n * (i - k / 2);
    else
      start = j + n * (k / 2 - 1);
    const auto expected = IntervalSet::from_start_size(start, width);
    const bool match =
        static_cast<int>(pal.colors.size()) == width &&
        pal.colors.front() == expected.lo && pal.colors.back() == expected.hi &&
        is_interval_set(pal.colors);
    if (!match) mismatches.push_back({pal.vertex, expected, pal.colors});
  }
  return mismatches;
}

}  // namespace ivcol
