// main.cpp: ivcol command line.
//
// Exit codes: 0 success/pass, 1 verification failure, 2 infeasible or
// budget exhausted, 3 usage/IO errors.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ivcol/constructions.hpp"
#include "ivcol/document.hpp"
#include "ivcol/solver.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace ivcol;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitUsage = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::ParseError, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text(const std::optional<std::string>& path, const std::string& text) {
  if (!path || path->empty() || *path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(*path, std::ios::binary);
  if (!out) fail(Errc::ParseError, "cannot write '" + *path + "'");
  out << text;
}

struct BudgetFlags {
  std::uint64_t max_nodes = SearchBudget{}.max_nodes;
  double max_seconds = SearchBudget{}.max_seconds;
  int threads = 1;
  SearchBudget budget() const { return {max_nodes, max_seconds}; }
  SearchOptions options() const {
    SearchOptions o;
    o.threads = threads;
    return o;
  }
  void attach(CLI::App* cmd) {
    cmd->add_option("--max-nodes", max_nodes, "search node budget");
    cmd->add_option("--max-seconds", max_seconds, "search time budget");
    cmd->add_option("--threads", threads, "solver worker threads");
  }
};

// Writes a verified document; refuses to write anything that fails
// verification.
int emit_document(const ColoringDocument& doc,
                  const std::optional<std::string>& out_path) {
  const auto report = verify(doc);
  if (!report.pass()) {
    std::cerr << "refusing to write an unverified coloring:\n"
              << report_to_text(report, doc);
    return kExitVerifyFail;
  }
  write_text(out_path, serialize(doc));
  std::cerr << "wrote verified coloring: "
            << (doc.kind == DocKind::Kpartite
                    ? "kpartite k=" + std::to_string(doc.k) +
                          " n=" + std::to_string(doc.n)
                    : "complete m=" + std::to_string(doc.m))
            << " t=" << doc.t << "\n";
  return kExitPass;
}

int run_construct(int k, int n, int m, int t, bool has_t,
                  const std::string& method, const std::string& base_path,
                  const std::optional<std::string>& out_path,
                  const BudgetFlags& flags) {
  if (method == "theorem3") {
    auto coloring = theorem3_coloring({k, n});
    return emit_document(
        make_document(coloring, Provenance{ProvenanceSource::Theorem3, {}, ""}),
        out_path);
  }
  if (method == "blowup") {
    auto coloring = blowup_min_coloring({k, n});
    return emit_document(
        make_document(coloring, Provenance{ProvenanceSource::Blowup, {}, ""}),
        out_path);
  }
  if (method == "lift") {
    if (base_path.empty())
      fail(Errc::BadArgument, "--method lift requires --base");
    const auto base =
        complete_base_from_document(parse_document(read_file(base_path)));
    auto coloring = lift_coloring(base, n);
    return emit_document(
        make_document(coloring,
                      Provenance{ProvenanceSource::Lift, base_path, ""}),
        out_path);
  }
  if (method == "solver") {
    if (!has_t) fail(Errc::BadArgument, "--method solver requires --t");
    const bool complete_mode = m > 0;
    const SimpleGraph graph =
        complete_mode ? complete_graph(m) : kpartite_graph({k, n});
    const auto outcome =
        find_interval_coloring(graph, t, flags.budget(), flags.options());
    if (outcome.status == SolveStatus::ProvenInfeasible) {
      std::cerr << "proven infeasible: no interval " << t << "-coloring\n";
      return kExitInfeasible;
    }
    if (outcome.status == SolveStatus::BudgetExhausted) {
      std::cerr << "budget exhausted after " << outcome.nodes_explored
                << " nodes without a witness\n";
      return kExitInfeasible;
    }
    const Provenance prov{ProvenanceSource::Solver, {}, ""};
    if (complete_mode)
      return emit_document(
          make_document(CompleteColoring{m, t, *outcome.witness}, prov),
          out_path);
    return emit_document(
        make_document(EdgeColoring{{k, n}, t, *outcome.witness}, prov),
        out_path);
  }
  fail(Errc::BadArgument, "unknown method '" + method + "'");
}

int run_verify(const std::string& path, const std::string& format) {
  const auto doc = parse_document(read_file(path));
  const auto report = verify(doc);
  std::cout << (format == "structured" ? report_to_json(report, doc)
                                       : report_to_text(report, doc));
  return report.pass() ? kExitPass : kExitVerifyFail;
}

const char* feasibility_name(Feasibility f) {
  switch (f) {
    case Feasibility::Feasible: return "feasible";
    case Feasibility::Infeasible: return "infeasible";
    case Feasibility::Unknown: return "unknown";
  }
  return "?";
}

int run_spectrum(int k, int n, const std::string& mode,
                 const std::string& out_dir, int t_max, bool has_t_max,
                 const std::string& format, const BudgetFlags& flags) {
  if (mode == "construct") {
    std::map<int, EdgeColoring> sweep;
    try {
      sweep = spectrum_sweep({k, n}, flags.budget());
    } catch (const Error& e) {
      if (e.code() == Errc::OddK) {
        std::cerr << "spectrum range unavailable: " << e.what() << "\n";
        return kExitInfeasible;
      }
      throw;
    }
    fs::create_directories(out_dir);
    const int top_t = sweep.rbegin()->first;
    json entries = json::array();
    std::string previous_file;
    // walk downward so each compressed entry can reference its parent
    for (auto it = sweep.rbegin(); it != sweep.rend(); ++it) {
      const auto& [t, coloring] = *it;
      Provenance prov;
      if (t == top_t) {
        const auto direct = theorem3_W_bound({k, n});
        prov.source = (direct && *direct == t) ? ProvenanceSource::Theorem3
                                               : ProvenanceSource::Lift;
      } else {
        prov.source = ProvenanceSource::Compress;
        prov.parent = previous_file;
      }
      const std::string name = "kpartite_k" + std::to_string(k) + "_n" +
                               std::to_string(n) + "_t" + std::to_string(t) +
                               ".json";
      const std::string path = (fs::path(out_dir) / name).string();
      const int code = emit_document(make_document(coloring, prov), path);
      if (code != kExitPass) return code;
      previous_file = name;
      entries.push_back({{"t", t}, {"file", path}});
    }
    if (format == "structured") {
      json j{{"mode", "construct"}, {"k", k}, {"n", n}, {"entries", entries}};
      std::cout << j.dump(2) << "\n";
    } else {
      for (const auto& e : entries)
        std::cout << "t=" << e["t"].get<int>() << " file="
                  << e["file"].get<std::string>() << "\n";
    }
    return kExitPass;
  }

  if (mode == "oracle") {
    const SimpleGraph graph = kpartite_graph({k, n});
    const int delta = max_degree({k, n});
    const int cap = has_t_max ? t_max : static_cast<int>(graph.edges.size());
    std::map<int, Feasibility> entries;
    bool seen_feasible = false;
    for (int t = std::max(1, delta); t <= cap; ++t) {
      const auto outcome =
          find_interval_coloring(graph, t, flags.budget(), flags.options());
      if (outcome.status == SolveStatus::Witness) {
        entries[t] = Feasibility::Feasible;
        seen_feasible = true;
      } else if (outcome.status == SolveStatus::ProvenInfeasible) {
        entries[t] = Feasibility::Infeasible;
        if (seen_feasible) break;  // bracketed: the range above is settled
      } else {
        entries[t] = Feasibility::Unknown;
        break;
      }
    }
    if (format == "structured") {
      json list = json::array();
      for (const auto& [t, status] : entries)
        list.push_back({{"t", t}, {"status", feasibility_name(status)}});
      json j{{"mode", "oracle"}, {"k", k}, {"n", n}, {"entries", list}};
      std::cout << j.dump(2) << "\n";
    } else {
      for (const auto& [t, status] : entries)
        std::cout << t << " " << feasibility_name(status) << "\n";
    }
    return kExitPass;
  }
  fail(Errc::BadArgument, "unknown spectrum mode '" + mode + "'");
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const int single = std::stoi(text);
      return {single, single};
    }
    const int lo = std::stoi(text.substr(0, colon));
    const int hi = std::stoi(text.substr(colon + 1));
    if (lo > hi) fail(Errc::BadArgument, "empty range '" + text + "'");
    return {lo, hi};
  } catch (const std::logic_error&) {
    fail(Errc::BadArgument, "cannot parse range '" + text + "'");
  }
}

int run_bounds(const std::string& k_range, const std::string& n_range,
               int oracle_max_edges,
               const std::optional<std::string>& out_path,
               const BudgetFlags& flags) {
  const auto [k_lo, k_hi] = parse_range(k_range);
  const auto [n_lo, n_hi] = parse_range(n_range);
  if (k_lo < 2) fail(Errc::BadArgument, "bounds need k >= 2");
  if (n_lo < 1) fail(Errc::BadArgument, "bounds need n >= 1");

  std::ostringstream csv;
  csv << "k,n,delta,chi_prime,colorable,w,thm3_bound,thm4_bound,best_bound,"
         "oracle_W\n";
  for (int k = k_lo; k <= k_hi; ++k) {
    for (int n = n_lo; n <= n_hi; ++n) {
      const PartiteSpec spec{k, n};
      const bool colorable = is_interval_colorable(spec);
      csv << k << ',' << n << ',' << max_degree(spec) << ','
          << chromatic_index(spec) << ',' << (colorable ? "true" : "false")
          << ',';
      if (colorable) csv << w_value(spec);
      csv << ',';
      const auto b3 = theorem3_W_bound(spec);
      const auto b4 = theorem4_W_bound(spec);
      if (colorable && b3) csv << *b3;
      csv << ',';
      if (colorable && b4) csv << *b4;
      csv << ',';
      if (colorable && (b3 || b4))
        csv << std::max(b3.value_or(0), b4.value_or(0));
      csv << ',';
      if (colorable && oracle_max_edges > 0 &&
          edge_count(spec) <= oracle_max_edges) {
        const auto exact =
            exact_W(kpartite_graph(spec), flags.budget(), flags.options());
        if (exact) csv << *exact;
      }
      csv << '\n';
    }
  }
  write_text(out_path, csv.str());
  return kExitPass;
}

int run_export(const std::string& path, const std::string& format,
               const std::optional<std::string>& out_path) {
  const auto doc = parse_document(read_file(path));
  const auto report = verify(doc);
  if (!report.pass()) {
    std::cerr << "document fails verification; not exporting\n"
              << report_to_text(report, doc);
    return kExitVerifyFail;
  }
  write_text(out_path,
             format == "matrix" ? export_matrix(doc) : export_edgelist(doc));
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"interval edge colorings of complete k-partite graphs"};
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand(
      "construct", "build a verified coloring and write it as a document");
  int c_k = 0, c_n = 1, c_m = 0, c_t = 0;
  std::string c_method, c_base;
  std::string c_out;
  BudgetFlags c_flags;
  construct->add_option("--k", c_k, "part count");
  construct->add_option("--n", c_n, "part size (lift: blow-up factor)");
  construct->add_option("--m", c_m, "complete-graph order (solver only)");
  construct->add_option("--method", c_method, "theorem3|blowup|lift|solver")
      ->required();
  auto* t_opt = construct->add_option("--t", c_t, "solver target color count");
  construct->add_option("--base", c_base, "lift base document");
  construct->add_option("--out", c_out, "output file (default stdout)");
  c_flags.attach(construct);

  // verify
  auto* verify_cmd =
      app.add_subcommand("verify", "check a coloring document; exit 0/1");
  std::string v_file, v_format = "text";
  verify_cmd->add_option("file", v_file, "coloring document")->required();
  verify_cmd->add_option("--format", v_format, "text|structured")
      ->check(CLI::IsMember({"text", "structured"}));

  // spectrum
  auto* spectrum = app.add_subcommand(
      "spectrum", "feasible color counts: constructions or oracle verdicts");
  int s_k = 0, s_n = 1, s_tmax = 0;
  std::string s_mode, s_dir = ".", s_format = "text";
  BudgetFlags s_flags;
  spectrum->add_option("--k", s_k, "part count")->required();
  spectrum->add_option("--n", s_n, "part size");
  spectrum->add_option("--mode", s_mode, "construct|oracle")->required();
  spectrum->add_option("--out-dir", s_dir, "directory for construct mode");
  auto* tmax_opt = spectrum->add_option("--t-max", s_tmax, "oracle scan cap");
  spectrum->add_option("--format", s_format, "text|structured")
      ->check(CLI::IsMember({"text", "structured"}));
  s_flags.attach(spectrum);

  // bounds
  auto* bounds = app.add_subcommand(
      "bounds", "CSV table of degrees, colorability, and W lower bounds");
  std::string b_k_range, b_n_range, b_out;
  int b_oracle_max_edges = 0;
  BudgetFlags b_flags;
  bounds->add_option("--k-range", b_k_range, "inclusive range lo:hi")
      ->required();
  bounds->add_option("--n-range", b_n_range, "inclusive range lo:hi")
      ->required();
  bounds->add_option("--oracle-max-edges", b_oracle_max_edges,
                     "solve exact W when the edge count is at most this");
  bounds->add_option("--out", b_out, "output file (default stdout)");
  b_flags.attach(bounds);

  // export
  auto* export_cmd =
      app.add_subcommand("export", "verified document as edge list or grids");
  std::string e_file, e_format = "edgelist", e_out;
  export_cmd->add_option("file", e_file, "coloring document")->required();
  export_cmd->add_option("--format", e_format, "edgelist|matrix")
      ->check(CLI::IsMember({"edgelist", "matrix"}));
  export_cmd->add_option("--out", e_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (construct->parsed())
      return run_construct(c_k, c_n, c_m, c_t, t_opt->count() > 0, c_method,
                           c_base, c_out.empty() ? std::nullopt
                                                 : std::optional(c_out),
                           c_flags);
    if (verify_cmd->parsed()) return run_verify(v_file, v_format);
    if (spectrum->parsed())
      return run_spectrum(s_k, s_n, s_mode, s_dir, s_tmax,
                          tmax_opt->count() > 0, s_format, s_flags);
    if (bounds->parsed())
      return run_bounds(b_k_range, b_n_range, b_oracle_max_edges,
                        b_out.empty() ? std::nullopt : std::optional(b_out),
                        b_flags);
    if (export_cmd->parsed())
      return run_export(e_file, e_format,
                        e_out.empty() ? std::nullopt : std::optional(e_out));
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::NotColorable ? kExitInfeasible : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
