#pragma once
// Exhaustive backtracking search for interval t-colorings of small simple
// graphs: witness finding, proofs of non-existence, and exact w/W values.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ivcol/graph_core.hpp"

namespace ivcol {

struct SearchBudget {
  std::uint64_t max_nodes = 100'000'000;
  double max_seconds = 60.0;
};

enum class SolveStatus { Witness, ProvenInfeasible, BudgetExhausted };
enum class Feasibility { Feasible, Infeasible, Unknown };

struct SearchOptions {
  // Restrict the first branching edge to color 1. Sound only when the
  // instance is edge-transitive: surjectivity puts color 1 on some edge,
  // and an automorphism moves that edge onto the first one. Off by
  // default; callers assert the property when they enable it.
  bool exploit_edge_transitivity = false;
  // > 1 splits the first edge's color choices across worker threads.
  // Sequential mode (1) is the reference for witness reproducibility;
  // parallel runs must agree on status but may return another witness.
  int threads = 1;
};

struct SolveOutcome {
  SolveStatus status{};
  // Present iff status == Witness; aligned to the graph's edge order and
  // verifier-passing.
  std::optional<std::vector<int>> witness;
  std::uint64_t nodes_explored = 0;
};

// Depth-first search over edge color assignments, most-saturated edge
// first (ties by canonical edge order), candidate colors ascending.
// Pruning: properness, per-vertex palette windows, and unused-color
// coverage. Throws BadT when t < max degree or t < 1.
SolveOutcome find_interval_coloring(const SimpleGraph& g, int t,
                                    const SearchBudget& budget = {},
                                    const SearchOptions& options = {});

// Per-t outcome for t in [max degree .. t_max]. For regular instances the
// feasible region must be contiguous; a sandwiched Infeasible entry would
// mean the engine is unsound and raises logic_error.
std::map<int, Feasibility> feasible_spectrum(const SimpleGraph& g, int t_max,
                                             const SearchBudget& budget = {},
                                             const SearchOptions& options = {});

// Smallest feasible t, searching upward from the max degree. nullopt when
// the budget ran out first; throws NotColorable when every t up to |E| is
// proven infeasible.
std::optional<int> exact_w(const SimpleGraph& g,
                           const SearchBudget& budget = {},
                           const SearchOptions& options = {});

// Largest feasible t. Surjectivity caps the search at t = |E|; the scan
// stops at the first proven-infeasible t after a feasible one. nullopt
// when the budget ran out before that bracket was established.
std::optional<int> exact_W(const SimpleGraph& g,
                           const SearchBudget& budget = {},
                           const SearchOptions& options = {});

}  // namespace ivcol
