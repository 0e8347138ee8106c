// solver.cpp: exhaustive interval-coloring search.
//
// Soundness of the pruning rules, so ProvenInfeasible really means the
// whole space was covered:
//   * properness: colors already present at an endpoint are never offered;
//   * palette windows: once a vertex holds colors in [mn, mx], every later
//     color must lie in [mx-d+1, mn+d-1] clipped to [1, t], or its final
//     palette cannot be d consecutive colors. Windows only shrink as the
//     assignment grows, so filtering against the current window never cuts
//     a completable branch. A finished vertex then carries d distinct
//     colors spanning at most d positions, i.e. an exact interval;
//   * coverage: every still-unused color must be admissible on at least
//     one unassigned edge, and unassigned edges must outnumber unused
//     colors. Both quantities are monotone along a branch.

#include "ivcol/solver.hpp"

#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "ivcol/verifier.hpp"

namespace ivcol {

namespace {

constexpr int kMaxWords = 4;  // color masks cover up to 256 colors
constexpr std::uint64_t kSyncBatch = 1024;

struct Mask {
  std::uint64_t w[kMaxWords] = {0, 0, 0, 0};
};

inline void set_bit(Mask& m, int color) {
  m.w[(color - 1) >> 6] |= std::uint64_t{1} << ((color - 1) & 63);
}

inline void clear_bit(Mask& m, int color) {
  m.w[(color - 1) >> 6] &= ~(std::uint64_t{1} << ((color - 1) & 63));
}

// bits for colors lo..hi
Mask range_mask(int lo, int hi) {
  Mask m;
  for (int word = (lo - 1) >> 6; word <= (hi - 1) >> 6; ++word) {
    const int first = word << 6, last = first + 63;
    const int a = std::max(lo - 1, first), b = std::min(hi - 1, last);
    std::uint64_t bits = ~std::uint64_t{0} >> (63 - (b - first));
    bits &= ~std::uint64_t{0} << (a - first);
    m.w[word] = bits;
  }
  return m;
}

struct SharedState {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> cancel{false};
  std::atomic<bool> budget_hit{false};
  std::uint64_t max_nodes = 0;
  std::chrono::steady_clock::time_point deadline;
};

class Engine {
 public:
  Engine(const SimpleGraph& g, int t, SharedState& shared)
      : t_(t),
        words_((t + 63) / 64),
        vertex_count_(g.vertex_count),
        edge_total_(static_cast<int>(g.edges.size())),
        shared_(shared) {
    ends_.reserve(g.edges.size());
    degree_.assign(vertex_count_ + 1, 0);
    for (const auto& [u, v] : g.edges) {
      ends_.push_back({u, v});
      ++degree_[u];
      ++degree_[v];
    }
    used_.assign(vertex_count_ + 1, Mask{});
    candidate_.assign(vertex_count_ + 1, Mask{});
    min_color_.assign(vertex_count_ + 1, 0);
    max_color_.assign(vertex_count_ + 1, 0);
    assigned_degree_.assign(vertex_count_ + 1, 0);
    edge_color_.assign(g.edges.size(), 0);
    use_count_.assign(t + 1, 0);
    unassigned_ = edge_total_;
    unused_colors_ = t;
    unused_mask_ = range_mask(1, t);
  }

  void restrict_root(int color) { root_filter_ = color; }

  bool search() {
    const bool found = edge_total_ == 0 ? unused_colors_ == 0 : dfs();
    shared_.nodes.fetch_add(since_sync_, std::memory_order_relaxed);
    since_sync_ = 0;
    return found;
  }

  const std::vector<int>& colors() const { return edge_color_; }

 private:
  int popcount_union(const Mask& a, const Mask& b) const {
    int total = 0;
    for (int i = 0; i < words_; ++i)
      total += std::popcount(a.w[i] | b.w[i]);
    return total;
  }

  void build_candidates() {
    for (int v = 1; v <= vertex_count_; ++v) {
      if (assigned_degree_[v] == degree_[v]) continue;
      int lo = 1, hi = t_;
      if (assigned_degree_[v] > 0) {
        lo = std::max(1, max_color_[v] - degree_[v] + 1);
        hi = std::min(t_, min_color_[v] + degree_[v] - 1);
      }
      Mask m = range_mask(lo, hi);
      for (int i = 0; i < words_; ++i) m.w[i] &= ~used_[v].w[i];
      candidate_[v] = m;
    }
  }

  bool stop_requested() {
    if (shared_.cancel.load(std::memory_order_relaxed)) return true;
    ++since_sync_;
    if (shared_.nodes.load(std::memory_order_relaxed) + since_sync_ >
        shared_.max_nodes) {
      give_up();
      return true;
    }
    if (since_sync_ >= kSyncBatch) {
      shared_.nodes.fetch_add(since_sync_, std::memory_order_relaxed);
      since_sync_ = 0;
      if (std::chrono::steady_clock::now() >= shared_.deadline) {
        give_up();
        return true;
      }
    }
    return false;
  }

  void give_up() {
    shared_.budget_hit.store(true, std::memory_order_relaxed);
    shared_.cancel.store(true, std::memory_order_relaxed);
  }

  void assign(int e, int c, int saved_minmax[4]) {
    edge_color_[e] = c;
    --unassigned_;
    for (int side = 0; side < 2; ++side) {
      const int v = ends_[e][side];
      set_bit(used_[v], c);
      saved_minmax[2 * side] = min_color_[v];
      saved_minmax[2 * side + 1] = max_color_[v];
      if (assigned_degree_[v] == 0) {
        min_color_[v] = max_color_[v] = c;
      } else {
        min_color_[v] = std::min(min_color_[v], c);
        max_color_[v] = std::max(max_color_[v], c);
      }
      ++assigned_degree_[v];
    }
    if (use_count_[c]++ == 0) {
      --unused_colors_;
      clear_bit(unused_mask_, c);
    }
  }

  void undo(int e, int c, const int saved_minmax[4]) {
    edge_color_[e] = 0;
    ++unassigned_;
    for (int side = 0; side < 2; ++side) {
      const int v = ends_[e][side];
      clear_bit(used_[v], c);
      min_color_[v] = saved_minmax[2 * side];
      max_color_[v] = saved_minmax[2 * side + 1];
      --assigned_degree_[v];
    }
    if (--use_count_[c] == 0) {
      ++unused_colors_;
      set_bit(unused_mask_, c);
    }
  }

  bool dfs() {
    if (stop_requested()) return false;
    if (unassigned_ == 0) return unused_colors_ == 0;
    if (unassigned_ < unused_colors_) return false;

    build_candidates();

    Mask coverable;
    Mask best_admissible;
    int best_edge = -1, best_saturation = -1;
    for (int e = 0; e < edge_total_; ++e) {
      if (edge_color_[e] != 0) continue;
      const int u = ends_[e][0], v = ends_[e][1];
      Mask admissible;
      bool empty = true;
      for (int i = 0; i < words_; ++i) {
        admissible.w[i] = candidate_[u].w[i] & candidate_[v].w[i];
        coverable.w[i] |= admissible.w[i];
        if (admissible.w[i]) empty = false;
      }
      if (empty) return false;
      const int saturation = popcount_union(used_[u], used_[v]);
      if (saturation > best_saturation) {
        best_saturation = saturation;
        best_edge = e;
        best_admissible = admissible;
      }
    }
    for (int i = 0; i < words_; ++i)
      if (unused_mask_.w[i] & ~coverable.w[i]) return false;

    if (root_filter_ != 0 && unassigned_ == edge_total_) {
      Mask only;
      set_bit(only, root_filter_);
      for (int i = 0; i < words_; ++i) best_admissible.w[i] &= only.w[i];
    }

    for (int word = 0; word < words_; ++word) {
      std::uint64_t bits = best_admissible.w[word];
      while (bits) {
        const int c = (word << 6) + std::countr_zero(bits) + 1;
        bits &= bits - 1;
        int saved[4];
        assign(best_edge, c, saved);
        // on success the assignment stays: edge_color_ is the witness
        if (dfs()) return true;
        undo(best_edge, c, saved);
        if (shared_.cancel.load(std::memory_order_relaxed)) return false;
      }
    }
    return false;
  }

  int t_;
  int words_;
  int vertex_count_;
  int edge_total_;
  SharedState& shared_;
  std::vector<std::array<int, 2>> ends_;
  std::vector<int> degree_;
  std::vector<Mask> used_;
  std::vector<Mask> candidate_;
  std::vector<int> min_color_, max_color_, assigned_degree_;
  std::vector<int> edge_color_;
  std::vector<long long> use_count_;
  Mask unused_mask_;
  int unassigned_ = 0;
  int unused_colors_ = 0;
  int root_filter_ = 0;
  std::uint64_t since_sync_ = 0;
};

void validate_search_inputs(const SimpleGraph& g, int t,
                            const SearchBudget& budget,
                            const SearchOptions& options) {
  vertex_degrees(g);  // validates endpoints
  if (budget.max_nodes == 0 || budget.max_seconds <= 0)
    fail(Errc::BadArgument, "search budget must be positive");
  if (options.threads < 1)
    fail(Errc::BadArgument, "thread count must be >= 1");
  if (t < 1 || t < graph_max_degree(g))
    fail(Errc::BadT, "color count below the max degree");
  if (t > 64 * kMaxWords)
    fail(Errc::Unsupported, "color count beyond the engine cap (256)");
}

SolveOutcome finish(const SimpleGraph& g, int t, SharedState& shared,
                    std::optional<std::vector<int>> witness) {
  SolveOutcome outcome;
  outcome.nodes_explored = shared.nodes.load();
  if (witness) {
    if (!verify(g, *witness, t).pass())
      throw std::logic_error("solver returned a non-verifying witness");
    outcome.status = SolveStatus::Witness;
    outcome.witness = std::move(witness);
  } else if (shared.budget_hit.load()) {
    outcome.status = SolveStatus::BudgetExhausted;
  } else {
    outcome.status = SolveStatus::ProvenInfeasible;
  }
  return outcome;
}

}  // namespace

SolveOutcome find_interval_coloring(const SimpleGraph& g, int t,
                                    const SearchBudget& budget,
                                    const SearchOptions& options) {
  validate_search_inputs(g, t, budget, options);
  SharedState shared;
  shared.max_nodes = budget.max_nodes;
  shared.deadline = std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(budget.max_seconds));

  if (options.threads == 1 || g.edges.size() <= 1) {
    Engine engine(g, t, shared);
    if (options.exploit_edge_transitivity && !g.edges.empty())
      engine.restrict_root(1);
    std::optional<std::vector<int>> witness;
    if (engine.search()) witness = engine.colors();
    return finish(g, t, shared, std::move(witness));
  }

  // Parallel mode: one branch per color of the first edge in canonical
  // order (the root pick when nothing is assigned yet).
  std::vector<int> root_colors;
  if (options.exploit_edge_transitivity) {
    root_colors.push_back(1);
  } else {
    for (int c = 1; c <= t; ++c) root_colors.push_back(c);
  }
  std::atomic<std::size_t> next_branch{0};
  std::mutex winner_mutex;
  std::optional<std::vector<int>> winner;

  auto worker = [&] {
    while (!shared.cancel.load(std::memory_order_relaxed)) {
      const std::size_t idx =
          next_branch.fetch_add(1, std::memory_order_relaxed);
      if (idx >= root_colors.size()) break;
      Engine engine(g, t, shared);
      engine.restrict_root(root_colors[idx]);
      if (engine.search()) {
        std::lock_guard<std::mutex> lock(winner_mutex);
        if (!winner) winner = engine.colors();
        shared.cancel.store(true, std::memory_order_relaxed);
      }
    }
  };

  const int thread_count = static_cast<int>(std::min<std::size_t>(
      static_cast<std::size_t>(options.threads), root_colors.size()));
  std::vector<std::thread> pool;
  pool.reserve(thread_count);
  for (int i = 0; i < thread_count; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  std::optional<std::vector<int>> witness;
  {
    std::lock_guard<std::mutex> lock(winner_mutex);
    witness = std::move(winner);
  }
  if (witness) shared.budget_hit.store(false);  // a witness settles the query
  return finish(g, t, shared, std::move(witness));
}

std::map<int, Feasibility> feasible_spectrum(const SimpleGraph& g, int t_max,
                                             const SearchBudget& budget,
                                             const SearchOptions& options) {
  std::map<int, Feasibility> spectrum;
  const int t_min = std::max(1, graph_max_degree(g));
  for (int t = t_min; t <= t_max; ++t) {
    switch (find_interval_coloring(g, t, budget, options).status) {
      case SolveStatus::Witness:
        spectrum[t] = Feasibility::Feasible;
        break;
      case SolveStatus::ProvenInfeasible:
        spectrum[t] = Feasibility::Infeasible;
        break;
      case SolveStatus::BudgetExhausted:
        spectrum[t] = Feasibility::Unknown;
        break;
    }
  }
  if (is_regular(g)) {
    // Feasible entries of a regular instance form one integer interval.
    bool seen_feasible = false, gap_after_feasible = false;
    for (const auto& [t, status] : spectrum) {
      if (status == Feasibility::Feasible) {
        if (gap_after_feasible)
          throw std::logic_error("feasible spectrum of a regular graph is not contiguous");
        seen_feasible = true;
      } else if (status == Feasibility::Infeasible && seen_feasible) {
        gap_after_feasible = true;
      }
    }
  }
  return spectrum;
}

namespace {

// Shared scan for exact_w / exact_W: walk t upward from the max degree.
std::optional<int> scan_for_extreme(const SimpleGraph& g,
                                    const SearchBudget& budget,
                                    const SearchOptions& options,
                                    bool want_largest) {
  const int t_min = std::max(1, graph_max_degree(g));
  const int t_cap = static_cast<int>(g.edges.size());  // surjectivity cutoff
  std::optional<int> best;
  for (int t = t_min; t <= t_cap; ++t) {
    const auto outcome = find_interval_coloring(g, t, budget, options);
    if (outcome.status == SolveStatus::BudgetExhausted) return std::nullopt;
    if (outcome.status == SolveStatus::Witness) {
      if (!want_largest) return t;
      best = t;
    } else if (best) {
      return best;  // first infeasible t brackets the top of the range
    }
  }
  if (best) return best;
  fail(Errc::NotColorable, "no interval coloring exists for any color count");
}

}  // namespace

std::optional<int> exact_w(const SimpleGraph& g, const SearchBudget& budget,
                           const SearchOptions& options) {
  return scan_for_extreme(g, budget, options, /*want_largest=*/false);
}

std::optional<int> exact_W(const SimpleGraph& g, const SearchBudget& budget,
                           const SearchOptions& options) {
  return scan_for_extreme(g, budget, options, /*want_largest=*/true);
}

}  // namespace ivcol
