#pragma once
// Coloring document: the on-disk interchange format shared by every CLI
// command. JSON text with an explicit format version; colors are stored
// flat in canonical edge order, so the instance parameters fully determine
// the meaning of the array.

#include <optional>
#include <string>
#include <vector>

#include "ivcol/coloring.hpp"
#include "ivcol/verifier.hpp"

namespace ivcol {

enum class DocKind { Kpartite, Complete };

enum class ProvenanceSource { Theorem3, Lift, Blowup, Solver, Compress, External };

struct Provenance {
  ProvenanceSource source{};
  std::optional<std::string> parent;  // document this one was derived from
  std::string notes;
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct ColoringDocument {
  DocKind kind{};
  int k = 0, n = 0;  // kpartite
  int m = 0;         // complete
  int t = 0;
  std::vector<int> colors;
  std::optional<Provenance> provenance;
  friend bool operator==(const ColoringDocument&,
                         const ColoringDocument&) = default;
};

std::string to_string(ProvenanceSource source);
ProvenanceSource provenance_source_from_string(const std::string& text);

long long document_edge_count(const ColoringDocument& doc);

// Deterministic JSON text; parse(serialize(doc)) == doc.
std::string serialize(const ColoringDocument& doc);

// Throws ParseError on malformed text, unknown fields of the wrong type,
// or a color array whose length does not match the declared instance.
// Colors outside [1..t] parse fine; range is the verifier's concern.
ColoringDocument parse_document(const std::string& text);

ColoringDocument make_document(const EdgeColoring& c,
                               std::optional<Provenance> provenance = {});
ColoringDocument make_document(const CompleteColoring& c,
                               std::optional<Provenance> provenance = {});

EdgeColoring to_edge_coloring(const ColoringDocument& doc);
CompleteColoring to_complete_coloring(const ColoringDocument& doc);

// Lift bases may be stored either as complete documents or as kpartite
// documents with n = 1 (the canonical edge orders coincide).
CompleteColoring complete_base_from_document(const ColoringDocument& doc);

VerificationReport verify(const ColoringDocument& doc);

// Vertex label for reports: "x_j^(i)" for kpartite, "u_i" for complete.
std::string vertex_label(const ColoringDocument& doc, int flat);

// One line per edge in canonical order, 1-based:
//   kpartite: "i p j q c"   complete: "i j c"
std::string export_edgelist(const ColoringDocument& doc);

// kpartite: per part pair a "pair i j" header and an n x n color grid
// (rows by p, columns by q). complete: a single m x m grid, zero diagonal.
std::string export_matrix(const ColoringDocument& doc);

std::string report_to_text(const VerificationReport& report,
                           const ColoringDocument& doc);
std::string report_to_json(const VerificationReport& report,
                           const ColoringDocument& doc);

}  // namespace ivcol
