#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "wlg/catalog.hpp"

namespace wlg {

using Json = nlohmann::ordered_json;

// Graph document: { "vertices": [{id, label, germ?}], "edges": [{id, from,
// to, matrix:[a,b,c,d]}] }, vertices and edges sorted by id. Serialization
// is canonical: parsing a serialized document and serializing again is the
// identity on bytes.
Json wlg_to_json(const Wlg& g);
Wlg wlg_from_json(const Json& j); // SchemaError

// Presentation document: { "version": 1, "graph": {...}, "accompany":
// { "tori": [...], "curves": [...] } }.
Json presentation_to_json(const FlowPresentation& f);
FlowPresentation presentation_from_json(const Json& j); // SchemaError

Json link_to_json(const IndexedLink& link);
std::string link_to_table(const IndexedLink& link);

Json report_to_json(const ValidationReport& report);
Json certificate_to_json(const NeatnessCertificate& cert);
Json entry_to_json(const ClassificationEntry& entry);

/// Graphviz text: node shapes encode the vertex labels, edge labels carry
/// the matrices, germ rays are colored. Presentation-only output.
std::string to_dot(const Wlg& g);

std::string serialize(const Json& j); // canonical two-space indentation

// File helpers; parse failures carry the byte position. ParseError,
// SchemaError.
Json parse_json_text(const std::string& text, const std::string& origin);
Wlg load_wlg_file(const std::string& path);
FlowPresentation load_presentation_file(const std::string& path);

} // namespace wlg
