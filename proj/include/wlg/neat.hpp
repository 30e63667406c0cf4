#pragma once

#include "wlg/surgery.hpp"

namespace wlg {

enum class CertKind { NoV5, WithV5 };

/// Witness that a simple WLG meets the canonical matrix-form conditions.
/// NoV5 certificates list two exceptional edges (the same edge twice for the
/// degenerate two-vertex graph) and carry the quarter-turn path product;
/// WithV5 certificates list the single exceptional edge and carry the form
/// parameter t with its sign.
struct NeatnessCertificate {
    CertKind kind = CertKind::NoV5;
    std::vector<std::string> exceptional_edges;
    std::string v0;
    GluingMatrix bar_b;
    GluingMatrix rotation_product; // NoV5 only: path product of the two edges
    std::int64_t t = 0;            // WithV5 only
    int form_sign = +1;            // WithV5 only
    std::pair<std::int64_t, std::int64_t> pq{0, 0}; // NoV5 only: first row of bar_b
};

struct NeatScan {
    std::optional<NeatnessCertificate> certificate;
    std::string diagnostic; // first violated clause when absent
    bool ok() const { return certificate.has_value(); }
};

/// Decides whether a simple WLG is neat and produces the certificate.
/// Throws NotSimple when the graph has V1/V2/V3 vertices; structural
/// defects of the candidate are reported as diagnostics, not exceptions.
NeatScan is_neat_simple(const Wlg& g);

/// True iff every simple factor of the tree WLG is a neat simple WLG.
bool is_neat(const Wlg& g); // NotATree

/// The base vertex of the signature: an A vertex adjacent to an exceptional
/// edge when one exists, otherwise an R vertex; ties break to the smallest id.
std::string select_v0(const Wlg& g, const NeatnessCertificate& cert);

/// sign(v, v0) in {+1,-1}: parity of the trace -2 edges on the path from v
/// to the vertex adjacent to v0, with the form-dependent correction.
int signature(const Wlg& g, const NeatnessCertificate& cert, const std::string& v); // SameVertex

struct RealizabilityReport {
    bool realizable = false;
    std::vector<std::string> diagnostics;
};

/// Whether the neat tree WLG is the graph of some flow on the 3-sphere:
/// every simple factor carries at most one special vertex, and no factor
/// carries both a special vertex and a V5 vertex.
RealizabilityReport realizable_on_s3(const Wlg& g); // NotNeat, NotATree

struct NormalizeResult {
    Wlg graph;
    std::vector<std::string> notes; // per-edge changes and failures
};

/// Best-effort coordinate normalization: longitude changes ((1,k),(0,1)) on
/// the solid-torus side of each saddle-leaf edge, applied when they bring
/// the matrix into one of the canonical families. Edges that fit no family
/// are reported and left untouched.
NormalizeResult normalize(const Wlg& g);

/// Edges of the unique tree path between two vertices, paired with whether
/// the edge's orientation agrees with the walking direction.
std::vector<std::pair<const Edge*, bool>> tree_path(const Wlg& g, const std::string& from,
                                                    const std::string& to);

} // namespace wlg
