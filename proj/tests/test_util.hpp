#pragma once
// Shared test helpers: independent oracles and process plumbing. The
// oracles here deliberately avoid the library's verification/search code
// paths so they can cross-check them.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ivcol/graph_core.hpp"

namespace testutil {

// Independent interval-coloring check: quadratic scan over incident edge
// pairs for properness, then palette contiguity and color usage straight
// from the definitions.
inline bool brute_interval_check(const ivcol::SimpleGraph& g,
                                 const std::vector<int>& colors, int t) {
  if (colors.size() != g.edges.size()) return false;
  for (std::size_t a = 0; a < g.edges.size(); ++a) {
    if (colors[a] < 1 || colors[a] > t) return false;
    for (std::size_t b = a + 1; b < g.edges.size(); ++b) {
      const bool share = g.edges[a].first == g.edges[b].first ||
                         g.edges[a].first == g.edges[b].second ||
                         g.edges[a].second == g.edges[b].first ||
                         g.edges[a].second == g.edges[b].second;
      if (share && colors[a] == colors[b]) return false;
    }
  }
  for (int v = 1; v <= g.vertex_count; ++v) {
    std::set<int> palette;
    int degree = 0;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      if (g.edges[e].first == v || g.edges[e].second == v) {
        palette.insert(colors[e]);
        ++degree;
      }
    }
    if (degree == 0) continue;
    if (static_cast<int>(palette.size()) != degree) return false;
    if (*palette.rbegin() - *palette.begin() + 1 != degree) return false;
  }
  for (int c = 1; c <= t; ++c)
    if (std::find(colors.begin(), colors.end(), c) == colors.end())
      return false;
  return true;
}

// Minimum color count of a proper edge coloring, by plain backtracking.
// Only for instances of a dozen edges or so.
inline bool brute_proper_colorable(const ivcol::SimpleGraph& g, int limit) {
  std::vector<int> colors(g.edges.size(), 0);
  std::vector<std::vector<std::size_t>> adjacent(g.edges.size());
  for (std::size_t a = 0; a < g.edges.size(); ++a)
    for (std::size_t b = 0; b < g.edges.size(); ++b)
      if (a != b && (g.edges[a].first == g.edges[b].first ||
                     g.edges[a].first == g.edges[b].second ||
                     g.edges[a].second == g.edges[b].first ||
                     g.edges[a].second == g.edges[b].second))
        adjacent[a].push_back(b);
  auto assignable = [&](std::size_t e, int c) {
    for (std::size_t other : adjacent[e])
      if (colors[other] == c) return false;
    return true;
  };
  std::function<bool(std::size_t)> place = [&](std::size_t e) -> bool {
    if (e == g.edges.size()) return true;
    for (int c = 1; c <= limit; ++c) {
      if (!assignable(e, c)) continue;
      colors[e] = c;
      if (place(e + 1)) return true;
      colors[e] = 0;
    }
    return false;
  };
  return place(0);
}

inline int brute_chromatic_index(const ivcol::SimpleGraph& g) {
  for (int limit = 1;; ++limit)
    if (brute_proper_colorable(g, limit)) return limit;
}

struct CliResult {
  int exit_code = -1;
  std::string output;
};

// Runs the built CLI binary; stderr is folded into the captured output.
inline CliResult run_cli(const std::string& args) {
  const std::string command = std::string(IVCOL_CLI_PATH) + " " + args + " 2>&1";
  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buffer;
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace testutil
