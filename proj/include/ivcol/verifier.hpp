#pragma once
// Ground-truth checker for the interval t-coloring definition: proper,
// every color in {1..t} used, and each vertex's incident colors form a
// set of consecutive integers of size equal to its degree.
//
// The checker works on arbitrary simple graphs; K_n^k is a special case.
// Reports are maximal, not fail-fast: duplicates at a vertex are reported
// and the contiguity check still runs on the color set.

#include <span>
#include <string>
#include <vector>

#include "ivcol/coloring.hpp"
#include "ivcol/graph_core.hpp"

namespace ivcol {

enum class ViolationKind {
  DuplicateAtVertex,
  GapAtVertex,
  UnusedColor,
  ColorOutOfRange,
};

// vertex is 0 for color-scoped violations (UnusedColor, ColorOutOfRange).
struct Violation {
  ViolationKind kind{};
  int vertex = 0;
  int color = 0;
  std::string detail;
  friend bool operator==(const Violation&, const Violation&) = default;
};

// A color outside [1..t] counts against `proper`: such an assignment is
// not a proper coloring *with colors 1..t*. This keeps the equivalence
// pass <=> all three flags <=> no violations.
struct VerificationReport {
  bool proper = false;
  bool interval_at_every_vertex = false;
  bool all_colors_used = false;
  int t = 0;
  std::vector<Violation> violations;
  bool pass() const {
    return proper && interval_at_every_vertex && all_colors_used;
  }
};

// Sorted color set on the edges incident to one vertex.
struct Palette {
  int vertex = 0;
  std::vector<int> colors;
};

struct VertexPalette {
  VertexId vertex;
  std::vector<int> colors;
};

// True iff the sorted, duplicate-free set is contiguous. Throws EmptySet.
bool is_interval_set(std::span<const int> sorted_colors);

// One palette per vertex 1..vertex_count. Throws LengthMismatch.
std::vector<Palette> palettes(const SimpleGraph& g, std::span<const int> colors);
std::vector<VertexPalette> palettes(const EdgeColoring& c);

VerificationReport verify(const SimpleGraph& g, std::span<const int> colors,
                          int t);
VerificationReport verify(const EdgeColoring& c);
VerificationReport verify(const CompleteColoring& c);

struct PaletteMismatch {
  VertexId vertex;
  IntervalSet expected;
  std::vector<int> actual;
};

// Checks each vertex palette of an eight-band coloring (theorem3 route)
// against its closed-form interval:
//   parts 1..2            -> Int(j, (k-1)n)
//   parts 3..k/2          -> Int(j + n(i-2), (k-1)n)
//   parts k/2+1..k-2      -> Int(j + n(i-k/2), (k-1)n)
//   parts k-1, k          -> Int(j + n(k/2-1), (k-1)n)
// Returns every mismatch; empty means the formulas hold literally.
std::vector<PaletteMismatch> palette_formula_check(const EdgeColoring& c);

}  // namespace ivcol
