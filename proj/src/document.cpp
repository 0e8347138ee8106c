// document.cpp: JSON interchange format, exports, and report rendering.

#include "ivcol/document.hpp"

#include <sstream>

#include <json.hpp>

namespace ivcol {

using nlohmann::json;

std::string to_string(ProvenanceSource source) {
  switch (source) {
    case ProvenanceSource::Theorem3: return "theorem3";
    case ProvenanceSource::Lift: return "lift";
    case ProvenanceSource::Blowup: return "blowup";
    case ProvenanceSource::Solver: return "solver";
    case ProvenanceSource::Compress: return "compress";
    case ProvenanceSource::External: return "external";
  }
  fail(Errc::BadArgument, "unknown provenance source");
}

ProvenanceSource provenance_source_from_string(const std::string& text) {
  if (text == "theorem3") return ProvenanceSource::Theorem3;
  if (text == "lift") return ProvenanceSource::Lift;
  if (text == "blowup") return ProvenanceSource::Blowup;
  if (text == "solver") return ProvenanceSource::Solver;
  if (text == "compress") return ProvenanceSource::Compress;
  if (text == "external") return ProvenanceSource::External;
  fail(Errc::ParseError, "unknown provenance source '" + text + "'");
}

long long document_edge_count(const ColoringDocument& doc) {
  return doc.kind == DocKind::Kpartite ? edge_count({doc.k, doc.n})
                                       : complete_edge_count(doc.m);
}

std::string serialize(const ColoringDocument& doc) {
  json j;
  j["format_version"] = "1";
  j["kind"] = doc.kind == DocKind::Kpartite ? "kpartite" : "complete";
  if (doc.kind == DocKind::Kpartite) {
    j["k"] = doc.k;
    j["n"] = doc.n;
  } else {
    j["m"] = doc.m;
  }
  j["t"] = doc.t;
  j["colors"] = doc.colors;
  if (doc.provenance) {
    json p;
    p["source"] = to_string(doc.provenance->source);
    if (doc.provenance->parent) p["parent"] = *doc.provenance->parent;
    p["notes"] = doc.provenance->notes;
    j["provenance"] = p;
  }
  return j.dump(2) + "\n";
}

namespace {

int require_int(const json& j, const char* key, int at_least) {
  if (!j.contains(key) || !j[key].is_number_integer())
    fail(Errc::ParseError, std::string("missing or non-integer field '") + key + "'");
  const long long value = j[key].get<long long>();
  if (value < at_least || value > 1'000'000'000)
    fail(Errc::ParseError, std::string("field '") + key + "' out of range");
  return static_cast<int>(value);
}

}  // namespace

ColoringDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(Errc::ParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail(Errc::ParseError, "document is not a JSON object");
  if (!j.contains("format_version") || !j["format_version"].is_string() ||
      j["format_version"].get<std::string>() != "1")
    fail(Errc::ParseError, "unsupported or missing format_version");
  if (!j.contains("kind") || !j["kind"].is_string())
    fail(Errc::ParseError, "missing document kind");

  ColoringDocument doc;
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "kpartite") {
    doc.kind = DocKind::Kpartite;
    doc.k = require_int(j, "k", 1);
    doc.n = require_int(j, "n", 1);
  } else if (kind == "complete") {
    doc.kind = DocKind::Complete;
    doc.m = require_int(j, "m", 1);
  } else {
    fail(Errc::ParseError, "unknown document kind '" + kind + "'");
  }
  doc.t = require_int(j, "t", 1);

  if (!j.contains("colors") || !j["colors"].is_array())
    fail(Errc::ParseError, "missing colors array");
  doc.colors.reserve(j["colors"].size());
  for (const auto& entry : j["colors"]) {
    if (!entry.is_number_integer())
      fail(Errc::ParseError, "colors array holds a non-integer");
    doc.colors.push_back(entry.get<int>());
  }
  if (static_cast<long long>(doc.colors.size()) != document_edge_count(doc))
    fail(Errc::ParseError, "colors array length does not match the edge count");

  if (j.contains("provenance")) {
    const auto& p = j["provenance"];
    if (!p.is_object() || !p.contains("source") || !p["source"].is_string())
      fail(Errc::ParseError, "malformed provenance");
    Provenance prov;
    prov.source = provenance_source_from_string(p["source"].get<std::string>());
    if (p.contains("parent")) {
      if (!p["parent"].is_string())
        fail(Errc::ParseError, "provenance parent must be a string");
      prov.parent = p["parent"].get<std::string>();
    }
    if (p.contains("notes")) {
      if (!p["notes"].is_string())
        fail(Errc::ParseError, "provenance notes must be a string");
      prov.notes = p["notes"].get<std::string>();
    }
    doc.provenance = std::move(prov);
  }
  return doc;
}

ColoringDocument make_document(const EdgeColoring& c,
                               std::optional<Provenance> provenance) {
  ColoringDocument doc;
  doc.kind = DocKind::Kpartite;
  doc.k = c.spec.k;
  doc.n = c.spec.n;
  doc.t = c.t;
  doc.colors = c.colors;
  doc.provenance = std::move(provenance);
  return doc;
}

ColoringDocument make_document(const CompleteColoring& c,
                               std::optional<Provenance> provenance) {
  ColoringDocument doc;
  doc.kind = DocKind::Complete;
  doc.m = c.m;
  doc.t = c.t;
  doc.colors = c.colors;
  doc.provenance = std::move(provenance);
  return doc;
}

EdgeColoring to_edge_coloring(const ColoringDocument& doc) {
  if (doc.kind != DocKind::Kpartite)
    fail(Errc::BadArgument, "document does not describe a k-partite coloring");
  return {{doc.k, doc.n}, doc.t, doc.colors};
}

CompleteColoring to_complete_coloring(const ColoringDocument& doc) {
  if (doc.kind != DocKind::Complete)
    fail(Errc::BadArgument, "document does not describe a complete-graph coloring");
  return {doc.m, doc.t, doc.colors};
}

CompleteColoring complete_base_from_document(const ColoringDocument& doc) {
  if (doc.kind == DocKind::Complete) return to_complete_coloring(doc);
  if (doc.n == 1) return {doc.k, doc.t, doc.colors};
  fail(Errc::BadArgument,
       "lift base must be a complete document or a kpartite document with n=1");
}

VerificationReport verify(const ColoringDocument& doc) {
  if (doc.kind == DocKind::Kpartite) return verify(to_edge_coloring(doc));
  return verify(to_complete_coloring(doc));
}

std::string vertex_label(const ColoringDocument& doc, int flat) {
  if (doc.kind == DocKind::Kpartite)
    return vertex_label(PartiteSpec{doc.k, doc.n}, flat);
  return "u_" + std::to_string(flat);
}

std::string export_edgelist(const ColoringDocument& doc) {
  std::ostringstream out;
  if (doc.kind == DocKind::Kpartite) {
    const auto edges = enumerate_edges({doc.k, doc.n});
    for (std::size_t e = 0; e < edges.size(); ++e)
      out << edges[e].u.part << ' ' << edges[e].u.index << ' '
          << edges[e].v.part << ' ' << edges[e].v.index << ' '
          << doc.colors[e] << '\n';
  } else {
    const auto g = complete_graph(doc.m);
    for (std::size_t e = 0; e < g.edges.size(); ++e)
      out << g.edges[e].first << ' ' << g.edges[e].second << ' '
          << doc.colors[e] << '\n';
  }
  return out.str();
}

std::string export_matrix(const ColoringDocument& doc) {
  std::ostringstream out;
  if (doc.kind == DocKind::Kpartite) {
    std::size_t e = 0;
    for (int i = 1; i <= doc.k; ++i) {
      for (int j = i + 1; j <= doc.k; ++j) {
        out << "pair " << i << ' ' << j << '\n';
        for (int p = 1; p <= doc.n; ++p) {
          for (int q = 1; q <= doc.n; ++q) {
            out << doc.colors[e++];
            out << (q == doc.n ? '\n' : ' ');
          }
        }
      }
    }
  } else {
    for (int u = 1; u <= doc.m; ++u) {
      for (int v = 1; v <= doc.m; ++v) {
        int c = 0;
        if (u != v)
          c = doc.colors[static_cast<std::size_t>(complete_edge_index(
              doc.m, std::min(u, v), std::max(u, v)))];
        out << c << (v == doc.m ? '\n' : ' ');
      }
    }
  }
  return out.str();
}

namespace {

const char* kind_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::DuplicateAtVertex: return "duplicate_at_vertex";
    case ViolationKind::GapAtVertex: return "gap_at_vertex";
    case ViolationKind::UnusedColor: return "unused_color";
    case ViolationKind::ColorOutOfRange: return "color_out_of_range";
  }
  return "?";
}

std::string instance_line(const ColoringDocument& doc) {
  std::ostringstream out;
  if (doc.kind == DocKind::Kpartite)
    out << "kpartite k=" << doc.k << " n=" << doc.n;
  else
    out << "complete m=" << doc.m;
  out << ", t=" << doc.t << ", " << doc.colors.size() << " edges";
  return out.str();
}

}  // namespace

std::string report_to_text(const VerificationReport& report,
                           const ColoringDocument& doc) {
  std::ostringstream out;
  out << "coloring: " << instance_line(doc) << '\n';
  out << "proper:            " << (report.proper ? "yes" : "no") << '\n';
  out << "interval palettes: "
      << (report.interval_at_every_vertex ? "yes" : "no") << '\n';
  out << "all colors used:   " << (report.all_colors_used ? "yes" : "no")
      << '\n';
  for (const auto& v : report.violations) {
    out << " - " << kind_name(v.kind) << ": " << v.detail;
    if (v.vertex != 0) out << " [" << vertex_label(doc, v.vertex) << "]";
    out << '\n';
  }
  out << (report.pass() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

std::string report_to_json(const VerificationReport& report,
                           const ColoringDocument& doc) {
  json j;
  j["pass"] = report.pass();
  j["proper"] = report.proper;
  j["interval_at_every_vertex"] = report.interval_at_every_vertex;
  j["all_colors_used"] = report.all_colors_used;
  j["t"] = report.t;
  j["violations"] = json::array();
  for (const auto& v : report.violations) {
    json entry;
    entry["kind"] = kind_name(v.kind);
    entry["vertex"] = v.vertex;
    if (v.vertex != 0) entry["vertex_label"] = vertex_label(doc, v.vertex);
    entry["color"] = v.color;
    entry["detail"] = v.detail;
    j["violations"].push_back(entry);
  }
  return j.dump(2) + "\n";
}

}  // namespace ivcol
