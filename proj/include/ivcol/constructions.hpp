#pragma once
// Interval coloring constructions for K_n^k: the direct eight-band
// coloring, lifting a complete-graph coloring, the 1-factorization
// blow-up reaching the minimum color count, a search portfolio for
// complete-graph bases, the compress transform, and full spectrum sweeps.

#include <map>
#include <optional>
#include <span>
#include <utility>

#include "ivcol/coloring.hpp"
#include "ivcol/solver.hpp"

namespace ivcol {

// Direct coloring of K_n^k for even k with t = (3/2*k - 1)*n - 1 colors.
// Every part pair falls into exactly one of eight index bands, each with
// its own affine color formula; an always-on audit asserts the bands
// partition the part pairs before any edge is colored. Empty bands (all
// but one for k = 2) are skipped. Throws OddK for odd k.
EdgeColoring theorem3_coloring(PartiteSpec spec);

// Transports a verified interval t-coloring of K_k onto K_n^k by
// replacing vertices with n-blocks:
//   color((x_r^(i), x_s^(j))) = (base(u_i, u_j) - 1)*n + r + s - 1,
// giving (t+1)*n - 1 colors. Each vertex palette lands on
// Int(j + n*(l_i - 1), (k-1)*n) where l_i is the smallest base color at
// u_i. Throws InvalidBase when the base fails verification.
EdgeColoring lift_coloring(const CompleteColoring& base, int n);

// Proper (m-1)-coloring of K_m by the circle method: vertex m is fixed,
// vertices 1..m-1 rotate; round r is color class r. Every vertex meets
// every round, so all palettes are {1..m-1} and the coloring is interval.
CompleteColoring round_robin_factorization(int m);

// Minimum-color witness for even k: each 1-factor of K_k blows up to a
// K_{n,n} colored by the diagonal scheme inside its own n-color block,
//   color((x_p^(a), x_q^(b))) = (l-1)*n + ((p+q-2) mod n) + 1,
// so every vertex sees every block in full: exactly (k-1)*n colors.
EdgeColoring blowup_min_coloring(PartiteSpec spec);

struct CompleteSearchResult {
  CompleteColoring best;       // best verified coloring found
  int target_t = 0;            // color count the search aimed for
  bool target_met = false;
  SolveStatus search_status{};  // Witness when the target was reached
  std::uint64_t nodes_explored = 0;
};

// Portfolio for complete-graph colorings: the round-robin baseline at
// t = k - 1, plus a backtracking search for target_t colors (default
// 2k - 1 - p - q for k = p*2^q). When the search fails or exhausts its
// budget the baseline is returned with the status flagged; the target is
// never claimed without a verified witness.
CompleteSearchResult complete_graph_coloring(int k,
                                             std::optional<int> target_t = {},
                                             const SearchBudget& budget = {});

// Interval (t-1)-coloring from an interval t-coloring of a regular graph
// with t > max degree: every color-1 edge moves to color delta+1 (both of
// its endpoints hold exactly {1..delta}, so delta+1 is fresh there), then
// all colors shift down by one.
EdgeColoring compress(const EdgeColoring& c);
CompleteColoring compress(const CompleteColoring& c);
std::pair<std::vector<int>, int> compress_coloring(const SimpleGraph& g,
                                                   std::span<const int> colors,
                                                   int t);

// One verified coloring for every t from (k-1)*n up to the best
// constructive bound: the eight-band coloring, replaced by a lifted
// search witness when that route reaches strictly higher, then compressed
// step by step down to the minimum. Requires even k.
std::map<int, EdgeColoring> spectrum_sweep(PartiteSpec spec,
                                           const SearchBudget& budget = {});

}  // namespace ivcol
