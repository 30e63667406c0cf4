#include "wlg/neat.hpp"

#include <algorithm>
#include <functional>

namespace wlg {

std::vector<std::pair<const Edge*, bool>> tree_path(const Wlg& g, const std::string& from,
                                                    const std::string& to) {
    // DFS over the tree; edges reported source-to-target along the walk.
    std::vector<std::pair<const Edge*, bool>> path;
    std::set<std::string> seen;
    std::function<bool(const std::string&)> dfs = [&](const std::string& v) {
        if (v == to) return true;
        seen.insert(v);
        for (const Edge* e : incident_edges(g, v)) {
            std::string w = other_endpoint(*e, v);
            if (seen.count(w)) continue;
            path.emplace_back(e, e->from == v);
            if (dfs(w)) return true;
            path.pop_back();
        }
        return false;
    };
    if (!dfs(from))
        throw Error(ErrorCode::NotATree, "no path between '" + from + "' and '" + to + "'");
    return path;
}

namespace {

bool is_quarter_turn(const GluingMatrix& m) {
    return m == kRotationPlus || m == kRotationMinus;
}

NeatScan fail(std::string why) {
    return NeatScan{std::nullopt, std::move(why)};
}

std::string leaf_of(const Wlg& g, const Edge& e) {
    if (!is_saddle(g.vertices.at(e.from))) return e.from;
    return e.to;
}

// Chooses v0 among the leaves adjacent to the exceptional edges.
std::string pick_v0(const Wlg& g, const std::vector<const Edge*>& exceptional) {
    std::vector<std::string> as, rs;
    for (const Edge* e : exceptional) {
        for (const std::string& v : {e->from, e->to}) {
            auto it = g.vertices.find(v);
            if (it == g.vertices.end()) continue;
            if (it->second == VertexLabel::A) as.push_back(v);
            if (it->second == VertexLabel::R) rs.push_back(v);
        }
    }
    auto smallest = [](std::vector<std::string>& v) {
        std::sort(v.begin(), v.end());
        return v.front();
    };
    if (!as.empty()) return smallest(as);
    return smallest(rs);
}

} // namespace

NeatScan is_neat_simple(const Wlg& g) {
    for (const auto& [v, label] : g.vertices)
        if (label == VertexLabel::V1 || label == VertexLabel::V2 || label == VertexLabel::V3)
            throw Error(ErrorCode::NotSimple,
                        "vertex '" + v + "' is labeled " + vertex_label_name(label));

    ValidationReport report = validate(g);
    if (!report.ok())
        return fail("graph is not a valid WLG: " + report.findings.front().code + " on '" +
                    report.findings.front().subject + "'");
    if (!is_tree(g))
        return fail("graph is not a tree, exceptional path is not unique");

    // Degenerate two-vertex graph: the lone edge plays both exceptional
    // roles and the quarter-turn condition applies to it directly.
    if (g.vertices.size() == 2) {
        const Edge& e = g.edges.front();
        GluingMatrix reordered = e.matrix; // path R -> A agrees with the edge
        if (!is_quarter_turn(reordered))
            return fail("edge '" + e.id + "': two-vertex graph requires a quarter-turn matrix");
        NeatnessCertificate cert;
        cert.kind = CertKind::NoV5;
        cert.exceptional_edges = {e.id, e.id};
        cert.v0 = pick_v0(g, {&e});
        cert.bar_b = reordered;
        cert.rotation_product = reordered;
        cert.pq = {reordered.a, reordered.b};
        return NeatScan{cert, ""};
    }

    std::vector<std::string> v5s;
    for (const auto& [v, label] : g.vertices)
        if (label == VertexLabel::V5) v5s.push_back(v);
    if (v5s.size() >= 2)
        return fail("vertices '" + v5s[0] + "' and '" + v5s[1] +
                    "' are both V5; at most one is allowed");

    std::vector<const Edge*> exceptional;
    for (const Edge& e : g.edges) {
        bool from_saddle = is_saddle(g.vertices.at(e.from));
        bool to_saddle = is_saddle(g.vertices.at(e.to));
        if (from_saddle && to_saddle) {
            if (!(e.matrix == kIdentity || e.matrix == kMinusIdentity))
                return fail("edge '" + e.id + "': matrix between saddle vertices must be +I or -I");
        } else {
            if (!in_unipotent_family(e.matrix)) exceptional.push_back(&e);
        }
    }

    if (v5s.empty()) {
        if (exceptional.size() != 2)
            return fail("expected exactly two exceptional saddle-leaf edges, found " +
                        std::to_string(exceptional.size()));
        std::string v0 = pick_v0(g, exceptional);
        const Edge* e_at_v0 =
            (exceptional[0]->from == v0 || exceptional[0]->to == v0) ? exceptional[0]
                                                                     : exceptional[1];
        const Edge* e_other = e_at_v0 == exceptional[0] ? exceptional[1] : exceptional[0];
        std::string v_other = leaf_of(g, *e_other);

        auto path = tree_path(g, v_other, v0);
        GluingMatrix bar_a = path_matrix(e_other->matrix, path.front().second);
        GluingMatrix bar_b = path_matrix(e_at_v0->matrix, path.back().second);
        GluingMatrix product = multiply(bar_a, bar_b);
        if (!is_quarter_turn(product))
            return fail("exceptional path product is not a quarter-turn rotation");

        NeatnessCertificate cert;
        cert.kind = CertKind::NoV5;
        cert.exceptional_edges = {e_other->id, e_at_v0->id};
        cert.v0 = v0;
        cert.bar_b = bar_b;
        cert.rotation_product = product;
        cert.pq = {bar_b.a, bar_b.b};
        return NeatScan{cert, ""};
    }

    // One V5 vertex: a single exceptional edge in the twisted form family.
    // The leaf end decides the family: an R source takes the repeller form,
    // an A target the attractor form.
    if (exceptional.size() != 1)
        return fail("expected exactly one exceptional saddle-leaf edge, found " +
                    std::to_string(exceptional.size()));
    const Edge* e = exceptional.front();
    bool starts_at_r = g.vertices.at(e->from) == VertexLabel::R;
    auto form = starts_at_r ? match_v5_repeller(e->matrix) : match_v5_attractor(e->matrix);
    if (!form)
        return fail(starts_at_r
                        ? "edge '" + e->id + "': matrix must be +-((1,-2),(1-t,2t-1))"
                        : "edge '" + e->id + "': matrix must be +-((2t-1,2),(t-1,1))");

    NeatnessCertificate cert;
    cert.kind = CertKind::WithV5;
    cert.exceptional_edges = {e->id};
    cert.v0 = leaf_of(g, *e);
    cert.bar_b = e->matrix;
    cert.t = form->first;
    cert.form_sign = form->second;
    cert.pq = {2 * form->first - 1, 2};
    return NeatScan{cert, ""};
}

bool is_neat(const Wlg& g) {
    if (!is_tree(g))
        throw Error(ErrorCode::NotATree, "neatness is decided on trees");
    Decomposition dec = simple_decomposition(g);
    for (const SimpleFactor& f : dec.factors)
        if (!is_neat_simple(f.graph).ok()) return false;
    return true;
}

std::string select_v0(const Wlg& g, const NeatnessCertificate& cert) {
    std::vector<const Edge*> exceptional;
    std::set<std::string> seen;
    for (const std::string& id : cert.exceptional_edges)
        if (seen.insert(id).second) exceptional.push_back(find_edge(g, id));
    return pick_v0(g, exceptional);
}

int signature(const Wlg& g, const NeatnessCertificate& cert, const std::string& v) {
    if (v == cert.v0)
        throw Error(ErrorCode::SameVertex, "signature is defined for vertices other than v0");

    // v0 is a leaf; v0' is its unique neighbor.
    const Edge* e0 = incident_edges(g, cert.v0).front();
    std::string v0p = other_endpoint(*e0, cert.v0);

    std::int64_t k = 0;
    if (v != v0p)
        for (auto& [edge, agrees] : tree_path(g, v, v0p)) {
            (void)agrees;
            if (trace(edge->matrix) == -2) ++k;
        }

    std::int64_t m = k;
    if (cert.kind == CertKind::NoV5) {
        bool v_on_exceptional = false;
        for (const std::string& id : cert.exceptional_edges) {
            const Edge* e = find_edge(g, id);
            std::string leaf = leaf_of(g, *e);
            if (leaf == v && leaf != cert.v0) v_on_exceptional = true;
        }
        // degenerate two-vertex graph: the non-v0 endpoint of the lone edge
        if (cert.exceptional_edges.size() == 2 &&
            cert.exceptional_edges[0] == cert.exceptional_edges[1]) {
            const Edge* e = find_edge(g, cert.exceptional_edges[0]);
            if (other_endpoint(*e, cert.v0) == v) v_on_exceptional = true;
        }
        if (v_on_exceptional && cert.rotation_product == kRotationPlus) m = k + 1;
    } else {
        if (cert.form_sign < 0) m = k + 1;
    }
    return m % 2 == 0 ? +1 : -1;
}

RealizabilityReport realizable_on_s3(const Wlg& g) {
    if (!is_tree(g))
        throw Error(ErrorCode::NotATree, "realizability is decided on trees");
    if (!is_neat(g))
        throw Error(ErrorCode::NotNeat, "realizability test requires a neat WLG");

    RealizabilityReport report;
    report.realizable = true;
    Decomposition dec = simple_decomposition(g);
    for (std::size_t i = 0; i < dec.factors.size(); ++i) {
        const SimpleFactor& f = dec.factors[i];
        if (f.special_vertices.size() > 1) {
            report.realizable = false;
            report.diagnostics.push_back("factor " + std::to_string(i) + " has " +
                                         std::to_string(f.special_vertices.size()) +
                                         " special vertices (at most one allowed)");
        }
        bool has_v5 = false;
        for (const auto& [v, label] : f.graph.vertices) {
            (void)v;
            if (label == VertexLabel::V5) has_v5 = true;
        }
        if (has_v5 && !f.special_vertices.empty()) {
            report.realizable = false;
            report.diagnostics.push_back("factor " + std::to_string(i) +
                                         " has a V5 vertex together with a special vertex");
        }
    }
    return report;
}

NormalizeResult normalize(const Wlg& g) {
    NormalizeResult result{g, {}};
    for (Edge& e : result.graph.edges) {
        auto from_it = result.graph.vertices.find(e.from);
        auto to_it = result.graph.vertices.find(e.to);
        if (from_it == result.graph.vertices.end() || to_it == result.graph.vertices.end())
            continue;
        bool from_saddle = is_saddle(from_it->second);
        bool to_saddle = is_saddle(to_it->second);
        if (from_saddle == to_saddle) continue; // saddle-saddle or leaf-leaf
        if (in_unipotent_family(e.matrix) || classify_form(e.matrix).kind != FormKind::Other)
            continue;

        // Leaf as target: B' = B * ((1,k),(0,1)); leaf as source:
        // B' = ((1,k),(0,1)) * B. Solve for the k that clears the
        // off-diagonal entry of the unipotent form, then accept only if the
        // result lands in a canonical family.
        bool leaf_is_target = to_saddle == false;
        std::optional<GluingMatrix> fixed;
        std::int64_t chosen_k = 0;
        for (std::int64_t k = -64; k <= 64 && !fixed; ++k) {
            GluingMatrix q{1, k, 0, 1};
            GluingMatrix candidate = leaf_is_target ? multiply(e.matrix, q) : multiply(q, e.matrix);
            if (in_unipotent_family(candidate)) {
                fixed = candidate;
                chosen_k = k;
            }
        }
        if (fixed) {
            e.matrix = *fixed;
            result.notes.push_back("edge '" + e.id + "': longitude change k=" +
                                   std::to_string(chosen_k) + " reaches the unipotent family");
        } else {
            result.notes.push_back("edge '" + e.id +
                                   "': no longitude change reaches a canonical family");
        }
    }
    return result;
}

} // namespace wlg
