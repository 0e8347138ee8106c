// acceptance_main.cpp: end-to-end acceptance suite. Runs every criterion
// at its stated tolerance and time limit and prints one PASS/FAIL line per
// criterion; the exit code is the number of failures.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "ivcol/constructions.hpp"
#include "ivcol/document.hpp"
#include "ivcol/solver.hpp"
#include "ivcol/verifier.hpp"
#include "test_util.hpp"

using namespace ivcol;
namespace fs = std::filesystem;

namespace {

fs::path g_tmp;

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string spit(const std::string& name, const std::string& text) {
  const fs::path path = g_tmp / name;
  std::ofstream out(path, std::ios::binary);
  out << text;
  return path.string();
}

// ---------------------------------------------------------------- C1
// Eight-band construction grid: even k in {2..12}, n in {1..6}, through
// the CLI, verified, with t exactly (3/2*k - 1)*n - 1.
bool criterion1(std::ostream& log) {
  for (int k = 2; k <= 12; k += 2) {
    for (int n = 1; n <= 6; ++n) {
      const std::string file =
          (g_tmp / ("c1_k" + std::to_string(k) + "_n" + std::to_string(n) +
                    ".json"))
              .string();
      const auto built = testutil::run_cli(
          "construct --k " + std::to_string(k) + " --n " + std::to_string(n) +
          " --method theorem3 --out " + file);
      if (built.exit_code != 0) {
        log << "construct failed for k=" << k << " n=" << n << "\n";
        return false;
      }
      if (testutil::run_cli("verify " + file).exit_code != 0) {
        log << "verification failed for k=" << k << " n=" << n << "\n";
        return false;
      }
      const auto doc = parse_document(slurp(file));
      const int expected = (3 * k / 2 - 1) * n - 1;
      if (doc.t != expected) {
        log << "k=" << k << " n=" << n << ": t=" << doc.t << ", expected "
            << expected << "\n";
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------- C2
// Palette-formula audit on the same grid: zero mismatches.
bool criterion2(std::ostream& log) {
  for (int k = 2; k <= 12; k += 2) {
    for (int n = 1; n <= 6; ++n) {
      const auto mismatches = palette_formula_check(theorem3_coloring({k, n}));
      if (!mismatches.empty()) {
        log << "k=" << k << " n=" << n << ": " << mismatches.size()
            << " palette mismatches\n";
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------- C3
// Lift reproduction: bases of K_k at t = 2k-1-p-q for k in {2,4,8}, then
// lifts for n in {1..4} verifying at exactly (t+1)*n - 1 colors. A k=8
// budget exhaustion downgrades to a logged Unknown, per the criterion.
bool criterion3(std::ostream& log) {
  for (const int k : {2, 4, 8}) {
    SearchBudget budget;
    budget.max_seconds = 45;
    const auto result = complete_graph_coloring(k, std::nullopt, budget);
    const auto dec = split_odd_part(k);
    const int expected_base_t = 2 * k - 1 - dec.odd_part - dec.exponent;
    if (result.target_t != expected_base_t) {
      log << "k=" << k << ": wrong target " << result.target_t << "\n";
      return false;
    }
    if (!result.target_met) {
      if (k == 8 && result.search_status == SolveStatus::BudgetExhausted) {
        log << "k=8 base search: Unknown (budget exhausted after "
            << result.nodes_explored << " nodes)\n";
        continue;
      }
      log << "k=" << k << ": base search failed\n";
      return false;
    }
    if (!verify(result.best).pass()) {
      log << "k=" << k << ": base does not verify\n";
      return false;
    }
    for (int n = 1; n <= 4; ++n) {
      const auto lifted = lift_coloring(result.best, n);
      const int expected =
          (2 * k - dec.odd_part - dec.exponent) * n - 1;
      if (lifted.t != (result.best.t + 1) * n - 1 || lifted.t != expected) {
        log << "k=" << k << " n=" << n << ": lifted t=" << lifted.t
            << ", expected " << expected << "\n";
        return false;
      }
      if (!verify(lifted).pass()) {
        log << "k=" << k << " n=" << n << ": lift does not verify\n";
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------- C4
// Minimum color count: the blow-up reaches exactly (k-1)*n for even
// k <= 8, n <= 4, and the solver's exact w agrees on four pinned cases.
bool criterion4(std::ostream& log) {
  for (int k = 2; k <= 8; k += 2) {
    for (int n = 1; n <= 4; ++n) {
      const auto c = blowup_min_coloring({k, n});
      if (c.t != (k - 1) * n || !verify(c).pass()) {
        log << "blow-up failed at k=" << k << " n=" << n << "\n";
        return false;
      }
    }
  }
  const std::vector<std::pair<PartiteSpec, int>> pinned = {
      {{2, 2}, 2}, {{3, 2}, 4}, {{4, 1}, 3}, {{4, 2}, 6}};
  for (const auto& [spec, expected] : pinned) {
    const auto w = exact_w(kpartite_graph(spec));
    if (!w || *w != expected) {
      log << "exact w for k=" << spec.k << " n=" << spec.n << " gave "
          << (w ? std::to_string(*w) : "Unknown") << ", expected " << expected
          << "\n";
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- C5
// Non-existence: every color count is proven infeasible on K_3 and K_5.
bool criterion5(std::ostream& log) {
  for (const int m : {3, 5}) {
    const auto g = complete_graph(m);
    for (int t = graph_max_degree(g); t <= static_cast<int>(g.edges.size());
         ++t) {
      const auto outcome = find_interval_coloring(g, t);
      if (outcome.status != SolveStatus::ProvenInfeasible) {
        log << "K_" << m << " at t=" << t << ": not proven infeasible\n";
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------- C6
// Spectrum: construct mode covers t = 6..9 for (k=4, n=2); oracle mode
// reproduces the exact verdict tables for (2,2) and (4,1).
bool criterion6(std::ostream& log) {
  const std::string dir = (g_tmp / "c6_sweep").string();
  if (testutil::run_cli("spectrum --k 4 --n 2 --mode construct --out-dir " +
                        dir)
          .exit_code != 0) {
    log << "construct-mode spectrum failed\n";
    return false;
  }
  for (int t = 6; t <= 9; ++t) {
    const std::string file = dir + "/kpartite_k4_n2_t" + std::to_string(t) +
                             ".json";
    if (testutil::run_cli("verify " + file).exit_code != 0) {
      log << "spectrum entry t=" << t << " missing or invalid\n";
      return false;
    }
    if (parse_document(slurp(file)).t != t) {
      log << "spectrum entry t=" << t << " has the wrong color count\n";
      return false;
    }
  }
  const auto oracle22 = testutil::run_cli("spectrum --k 2 --n 2 --mode oracle");
  if (oracle22.exit_code != 0 ||
      oracle22.output != "2 feasible\n3 feasible\n4 infeasible\n") {
    log << "oracle spectrum (2,2) mismatch:\n" << oracle22.output;
    return false;
  }
  const auto oracle41 = testutil::run_cli("spectrum --k 4 --n 1 --mode oracle");
  if (oracle41.exit_code != 0 ||
      oracle41.output != "3 feasible\n4 feasible\n5 infeasible\n") {
    log << "oracle spectrum (4,1) mismatch:\n" << oracle41.output;
    return false;
  }
  return true;
}

// ---------------------------------------------------------------- C7
// Oracle tightness: exact W values on the two desk instances, at or above
// the corresponding closed-form bounds.
bool criterion7(std::ostream& log) {
  const auto w_k4 = exact_W(complete_graph(4));
  if (!w_k4 || *w_k4 != 4) {
    log << "exact W(K_4) != 4\n";
    return false;
  }
  const int k4_bound = 2 * 4 - 1 - split_odd_part(4).odd_part -
                       split_odd_part(4).exponent;  // lifted-route bound
  if (*w_k4 < k4_bound) {
    log << "W(K_4) below its bound\n";
    return false;
  }
  const auto w_c22 = exact_W(kpartite_graph({2, 2}));
  if (!w_c22 || *w_c22 != 3) {
    log << "exact W(K_{2,2}) != 3\n";
    return false;
  }
  if (*w_c22 < *theorem3_W_bound({2, 2})) {
    log << "W(K_{2,2}) below its bound\n";
    return false;
  }
  return true;
}

// ---------------------------------------------------------------- C8
// Write-gate and round-trip: 1000 single-color mutations of verified
// documents each fail cmd_verify with exit 1, and serialization
// round-trips losslessly on generated documents.
bool criterion8(std::ostream& log) {
  std::vector<ColoringDocument> docs;
  docs.push_back(make_document(theorem3_coloring({4, 2}),
                               Provenance{ProvenanceSource::Theorem3, {}, ""}));
  docs.push_back(make_document(theorem3_coloring({6, 2})));
  docs.push_back(make_document(theorem3_coloring({8, 1})));
  docs.push_back(make_document(blowup_min_coloring({4, 2}),
                               Provenance{ProvenanceSource::Blowup, {}, ""}));
  docs.push_back(make_document(blowup_min_coloring({6, 3})));

  std::vector<ColoringDocument> round_trip = docs;
  round_trip.push_back(make_document(
      round_robin_factorization(6),
      Provenance{ProvenanceSource::Solver, "base.json", "baseline"}));
  round_trip.push_back(make_document(
      compress(theorem3_coloring({4, 2})),
      Provenance{ProvenanceSource::Compress, "kpartite_k4_n2_t9.json", ""}));
  for (const auto& doc : round_trip) {
    if (parse_document(serialize(doc)) != doc) {
      log << "serialization round-trip lost information\n";
      return false;
    }
  }

  std::mt19937 rng(20260808);
  for (int trial = 0; trial < 1000; ++trial) {
    auto doc = docs[trial % docs.size()];
    const std::size_t edge = rng() % doc.colors.size();
    int replacement = 1 + static_cast<int>(rng() % doc.t);
    if (replacement == doc.colors[edge])
      replacement = replacement % doc.t + 1;
    doc.colors[edge] = replacement;
    const auto path = spit("c8_mutation.json", serialize(doc));
    const auto result = testutil::run_cli("verify " + path);
    if (result.exit_code != 1) {
      log << "mutation #" << trial << " (edge " << edge << " -> "
          << replacement << ") exited " << result.exit_code
          << " instead of 1\n";
      return false;
    }
  }
  return true;
}

struct Criterion {
  int id;
  std::string label;
  double limit_seconds;
  std::function<bool(std::ostream&)> body;
};

}  // namespace

int main() {
  g_tmp = fs::current_path() / "acceptance_tmp";
  fs::remove_all(g_tmp);
  fs::create_directories(g_tmp);

  const std::vector<Criterion> criteria = {
      {1, "eight-band colorings across the grid reach (3/2*k-1)*n-1", 5.0,
       criterion1},
      {2, "palette formulas hold at every vertex of the grid", 5.0,
       criterion2},
      {3, "lifted colorings reach (2k-p-q)*n-1 from searched bases", 60.0,
       criterion3},
      {4, "blow-up hits the minimum (k-1)*n and the solver agrees", 60.0,
       criterion4},
      {5, "no interval coloring of K_3 or K_5 at any color count", 10.0,
       criterion5},
      {6, "construct and oracle spectra match the expected tables", 60.0,
       criterion6},
      {7, "exact W equals 4 on K_4 and 3 on K_{2,2}", 30.0, criterion7},
      {8, "1000 mutations all fail verification; round-trip lossless", 30.0,
       criterion8},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    std::ostringstream log;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criterion.body(log);
    } catch (const std::exception& e) {
      log << "exception: " << e.what() << "\n";
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (elapsed > criterion.limit_seconds) {
      log << "time limit exceeded: " << elapsed << " s > "
          << criterion.limit_seconds << " s\n";
      ok = false;
    }
    std::printf("[%s] C%d: %s (%.2f s)\n", ok ? "PASS" : "FAIL", criterion.id,
                criterion.label.c_str(), elapsed);
    const std::string detail = log.str();
    if (!detail.empty()) {
      std::istringstream lines(detail);
      std::string line;
      while (std::getline(lines, line))
        std::printf("        %s\n", line.c_str());
    }
    if (!ok) ++failures;
  }
  return failures;
}
