#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wlg/matrix.hpp"

namespace wlg {

enum class VertexLabel { R, A, V1, V2, V3, V4, V5 };

bool is_saddle(VertexLabel label);
const char* vertex_label_name(VertexLabel label);
std::optional<VertexLabel> vertex_label_from_name(const std::string& name);

/// One incoming and one outgoing edge around a V1/V2 vertex.
struct GermPair {
    std::string in, out;
    friend bool operator==(const GermPair&, const GermPair&) = default;
};

/// Germ coloring of a V1 vertex (red pair + green pair) or a V2 vertex
/// (red pair + lone green edge).
struct Germ {
    GermPair red;
    std::optional<GermPair> green_pair; // V1
    std::optional<std::string> green_edge; // V2
    friend bool operator==(const Germ&, const Germ&) = default;
};

struct Edge {
    std::string id, from, to;
    GluingMatrix matrix;
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Weighted Lyapunov graph: oriented labeled graph, germ colorings on V1/V2
/// vertices, one gluing matrix per edge. Treated as an immutable value.
struct Wlg {
    std::map<std::string, VertexLabel> vertices;
    std::map<std::string, Germ> germs;
    std::vector<Edge> edges;

    friend bool operator==(const Wlg&, const Wlg&) = default;
};

// Adjacency helpers.
const Edge* find_edge(const Wlg& g, const std::string& edge_id);
std::vector<const Edge*> in_edges(const Wlg& g, const std::string& v);
std::vector<const Edge*> out_edges(const Wlg& g, const std::string& v);
std::vector<const Edge*> incident_edges(const Wlg& g, const std::string& v);
std::size_t degree(const Wlg& g, const std::string& v);
std::string other_endpoint(const Edge& e, const std::string& v);

bool is_connected(const Wlg& g);
bool has_oriented_cycle(const Wlg& g);
bool is_tree(const Wlg& g); // connected and no unoriented cycle

struct Finding {
    std::string code;    // short rule identifier
    std::string subject; // vertex or edge id
    std::string detail;
    friend bool operator==(const Finding&, const Finding&) = default;
    friend auto operator<=>(const Finding&, const Finding&) = default;
};

struct ValidationReport {
    std::vector<Finding> findings;
    bool ok() const { return findings.empty(); }
};

/// Checks every structural invariant and reports all violations in a
/// deterministic order; an empty report means the graph is a valid WLG.
ValidationReport validate(const Wlg& g);

/// True iff no vertex is labeled V1, V2 or V3.
bool is_simple(const Wlg& g);

using VertexMap = std::map<std::string, std::string>;

enum class MatrixCompare { Strict, UpToSign };

/// Label-, orientation-, germ-color- and matrix-preserving isomorphism,
/// or absent. Matrices are compared exactly in Strict mode, up to an
/// overall sign in UpToSign mode.
std::optional<VertexMap> wlg_equivalent(const Wlg& g1, const Wlg& g2,
                                        MatrixCompare mode = MatrixCompare::Strict);

/// All isomorphisms (up to `limit`), in the deterministic search order.
std::vector<VertexMap> wlg_isomorphisms(const Wlg& g1, const Wlg& g2,
                                        MatrixCompare mode = MatrixCompare::Strict,
                                        std::size_t limit = 0);

/// Whether a given vertex map is a WLG equivalence: total, bijective,
/// label-, edge-multiset-, matrix- and germ-preserving.
bool is_wlg_map(const Wlg& g1, const Wlg& g2, const VertexMap& map,
                MatrixCompare mode = MatrixCompare::Strict);

/// A vertex of degree >= 2 all but one of whose incident edges lead to
/// degree-1 vertices, together with the remaining ("inner") edge.
/// Absent when the tree has fewer than 3 vertices.
std::optional<std::pair<std::string, std::string>>
find_isolated_inner_vertex(const Wlg& g); // throws NotATree

} // namespace wlg
