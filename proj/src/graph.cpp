#include "wlg/graph.hpp"

#include <algorithm>
#include <functional>

namespace wlg {

bool is_saddle(VertexLabel label) {
    return label != VertexLabel::R && label != VertexLabel::A;
}

const char* vertex_label_name(VertexLabel label) {
    switch (label) {
    case VertexLabel::R: return "R";
    case VertexLabel::A: return "A";
    case VertexLabel::V1: return "V1";
    case VertexLabel::V2: return "V2";
    case VertexLabel::V3: return "V3";
    case VertexLabel::V4: return "V4";
    case VertexLabel::V5: return "V5";
    }
    return "?";
}

std::optional<VertexLabel> vertex_label_from_name(const std::string& name) {
    if (name == "R") return VertexLabel::R;
    if (name == "A") return VertexLabel::A;
    if (name == "V1") return VertexLabel::V1;
    if (name == "V2") return VertexLabel::V2;
    if (name == "V3") return VertexLabel::V3;
    if (name == "V4") return VertexLabel::V4;
    if (name == "V5") return VertexLabel::V5;
    return std::nullopt;
}

const Edge* find_edge(const Wlg& g, const std::string& edge_id) {
    for (const Edge& e : g.edges)
        if (e.id == edge_id) return &e;
    return nullptr;
}

std::vector<const Edge*> in_edges(const Wlg& g, const std::string& v) {
    std::vector<const Edge*> out;
    for (const Edge& e : g.edges)
        if (e.to == v) out.push_back(&e);
    return out;
}

std::vector<const Edge*> out_edges(const Wlg& g, const std::string& v) {
    std::vector<const Edge*> out;
    for (const Edge& e : g.edges)
        if (e.from == v) out.push_back(&e);
    return out;
}

std::vector<const Edge*> incident_edges(const Wlg& g, const std::string& v) {
    std::vector<const Edge*> out;
    for (const Edge& e : g.edges)
        if (e.from == v || e.to == v) out.push_back(&e);
    return out;
}

std::size_t degree(const Wlg& g, const std::string& v) {
    return incident_edges(g, v).size();
}

std::string other_endpoint(const Edge& e, const std::string& v) {
    return e.from == v ? e.to : e.from;
}

bool is_connected(const Wlg& g) {
    if (g.vertices.empty()) return false;
    std::set<std::string> seen;
    std::vector<std::string> stack{g.vertices.begin()->first};
    while (!stack.empty()) {
        std::string v = stack.back();
        stack.pop_back();
        if (!seen.insert(v).second) continue;
        for (const Edge* e : incident_edges(g, v))
            stack.push_back(other_endpoint(*e, v));
    }
    return seen.size() == g.vertices.size();
}

bool has_oriented_cycle(const Wlg& g) {
    // colors: 0 unvisited, 1 on stack, 2 done
    std::map<std::string, int> color;
    std::function<bool(const std::string&)> dfs = [&](const std::string& v) {
        color[v] = 1;
        for (const Edge* e : out_edges(g, v)) {
            int c = color[e->to];
            if (c == 1) return true;
            if (c == 0 && dfs(e->to)) return true;
        }
        color[v] = 2;
        return false;
    };
    for (const auto& [v, label] : g.vertices) {
        (void)label;
        if (color[v] == 0 && dfs(v)) return true;
    }
    return false;
}

bool is_tree(const Wlg& g) {
    return is_connected(g) && g.edges.size() + 1 == g.vertices.size();
}

namespace {

struct DegreeRule {
    // allowed (in,out) profiles
    std::vector<std::pair<std::size_t, std::size_t>> profiles;
};

DegreeRule degree_rule(VertexLabel label) {
    switch (label) {
    case VertexLabel::R: return {{{0, 1}}};
    case VertexLabel::A: return {{{1, 0}}};
    case VertexLabel::V1: return {{{2, 2}}};
    case VertexLabel::V2: return {{{1, 2}, {2, 1}}};
    case VertexLabel::V3: return {{{1, 1}}};
    case VertexLabel::V4: return {{{1, 2}, {2, 1}}};
    case VertexLabel::V5: return {{{1, 1}}};
    }
    return {};
}

std::string profile_text(VertexLabel label) {
    switch (label) {
    case VertexLabel::R: return "in 0 / out 1";
    case VertexLabel::A: return "in 1 / out 0";
    case VertexLabel::V1: return "in 2 / out 2";
    case VertexLabel::V2: return "in 1 / out 2 or in 2 / out 1";
    case VertexLabel::V3: return "in 1 / out 1";
    case VertexLabel::V4: return "in 1 / out 2 or in 2 / out 1";
    case VertexLabel::V5: return "in 1 / out 1";
    }
    return "";
}

} // namespace

ValidationReport validate(const Wlg& g) {
    std::vector<Finding> findings;
    auto add = [&](std::string code, std::string subject, std::string detail) {
        findings.push_back(Finding{std::move(code), std::move(subject), std::move(detail)});
    };

    if (g.vertices.empty())
        add("empty", "", "graph has no vertices");

    std::set<std::string> edge_ids;
    for (const Edge& e : g.edges) {
        if (!edge_ids.insert(e.id).second)
            add("duplicate-edge-id", e.id, "edge id appears more than once");
        if (!g.vertices.count(e.from))
            add("dangling-endpoint", e.id, "source vertex '" + e.from + "' does not exist");
        if (!g.vertices.count(e.to))
            add("dangling-endpoint", e.id, "target vertex '" + e.to + "' does not exist");
        if (e.from == e.to)
            add("self-loop", e.id, "edge endpoints coincide");
        if (!is_unimodular(e.matrix))
            add("matrix-determinant", e.id, "gluing matrix determinant must be +1 or -1");
    }

    bool endpoints_ok =
        std::none_of(findings.begin(), findings.end(),
                     [](const Finding& f) { return f.code == "dangling-endpoint"; });

    if (endpoints_ok) {
        if (!g.vertices.empty() && !is_connected(g))
            add("disconnected", "", "graph is not connected");
        if (has_oriented_cycle(g))
            add("oriented-cycle", "", "graph has an oriented cycle");

        for (const auto& [v, label] : g.vertices) {
            std::size_t din = in_edges(g, v).size();
            std::size_t dout = out_edges(g, v).size();
            DegreeRule rule = degree_rule(label);
            bool ok = std::any_of(rule.profiles.begin(), rule.profiles.end(),
                                  [&](auto p) { return p.first == din && p.second == dout; });
            if (!ok)
                add("degree", v,
                    std::string(vertex_label_name(label)) + " vertex requires " +
                        profile_text(label) + ", found in " + std::to_string(din) + " / out " +
                        std::to_string(dout));
        }

        // Germ ownership and well-formedness.
        for (const auto& [v, label] : g.vertices) {
            bool needs_germ = label == VertexLabel::V1 || label == VertexLabel::V2;
            auto it = g.germs.find(v);
            if (needs_germ && it == g.germs.end()) {
                add("germ-missing", v, "V1/V2 vertex must carry a germ");
                continue;
            }
            if (!needs_germ) {
                if (it != g.germs.end())
                    add("germ-forbidden", v, "only V1/V2 vertices carry a germ");
                continue;
            }
            const Germ& germ = it->second;
            auto check_pair = [&](const GermPair& pair, const char* color) {
                const Edge* ein = find_edge(g, pair.in);
                const Edge* eout = find_edge(g, pair.out);
                if (!ein || ein->to != v)
                    add("germ-pair", v,
                        std::string(color) + " 'in' edge '" + pair.in +
                            "' is not an incoming edge of the vertex");
                if (!eout || eout->from != v)
                    add("germ-pair", v,
                        std::string(color) + " 'out' edge '" + pair.out +
                            "' is not an outgoing edge of the vertex");
            };
            check_pair(germ.red, "red");
            if (label == VertexLabel::V1) {
                if (!germ.green_pair) {
                    add("germ-shape", v, "V1 germ requires a green in/out pair");
                } else {
                    check_pair(*germ.green_pair, "green");
                    std::set<std::string> ids{germ.red.in, germ.red.out, germ.green_pair->in,
                                              germ.green_pair->out};
                    if (ids.size() != 4)
                        add("germ-shape", v, "the four germ edges must be distinct");
                    else if (degree(g, v) == 4) {
                        for (const Edge* e : incident_edges(g, v))
                            if (!ids.count(e->id))
                                add("germ-shape", v,
                                    "germ edges must exhaust the incident edges; '" + e->id +
                                        "' is unaccounted for");
                    }
                }
                if (germ.green_edge)
                    add("germ-shape", v, "V1 germ carries a pair, not a lone green edge");
            } else { // V2
                if (!germ.green_edge) {
                    add("germ-shape", v, "V2 germ requires a lone green edge");
                } else {
                    const Edge* eg = find_edge(g, *germ.green_edge);
                    if (!eg || (eg->from != v && eg->to != v))
                        add("germ-shape", v,
                            "green edge '" + *germ.green_edge + "' is not incident to the vertex");
                    else if (*germ.green_edge == germ.red.in || *germ.green_edge == germ.red.out)
                        add("germ-shape", v, "green edge must differ from the red pair");
                }
                if (germ.green_pair)
                    add("germ-shape", v, "V2 germ carries a lone green edge, not a pair");
            }
        }
    }

    std::sort(findings.begin(), findings.end());
    findings.erase(std::unique(findings.begin(), findings.end()), findings.end());
    return ValidationReport{std::move(findings)};
}

bool is_simple(const Wlg& g) {
    for (const auto& [v, label] : g.vertices) {
        (void)v;
        if (label == VertexLabel::V1 || label == VertexLabel::V2 || label == VertexLabel::V3)
            return false;
    }
    return true;
}

namespace {

struct IsoSearch {
    const Wlg& g1;
    const Wlg& g2;
    MatrixCompare mode;
    std::size_t limit;
    std::vector<std::string> order;      // g1 vertices, sorted
    VertexMap forward;                   // partial map g1 -> g2
    std::map<std::string, std::string> backward;
    std::vector<VertexMap> results;

    bool matrices_match(const GluingMatrix& m1, const GluingMatrix& m2) const {
        return mode == MatrixCompare::Strict ? m1 == m2 : equal_up_to_sign(m1, m2);
    }

    // Between mapped vertex sets the edges must agree as multisets: for
    // every mapped endpoint pair, pair off each g1 edge with a distinct
    // matching g2 edge (parallel edges matter).
    bool edges_consistent() const {
        auto image = [&](const std::string& v) -> const std::string* {
            auto it = forward.find(v);
            return it == forward.end() ? nullptr : &it->second;
        };
        std::vector<bool> used(g2.edges.size(), false);
        std::size_t mapped_edges1 = 0, mapped_edges2 = 0;
        for (const Edge& e : g1.edges) {
            const std::string* f = image(e.from);
            const std::string* t = image(e.to);
            if (!f || !t) continue;
            ++mapped_edges1;
            bool found = false;
            for (std::size_t j = 0; j < g2.edges.size(); ++j) {
                const Edge& e2 = g2.edges[j];
                if (used[j] || e2.from != *f || e2.to != *t) continue;
                if (!matrices_match(e.matrix, e2.matrix)) continue;
                used[j] = true;
                found = true;
                break;
            }
            if (!found) return false;
        }
        for (const Edge& e2 : g2.edges)
            if (backward.count(e2.from) && backward.count(e2.to)) ++mapped_edges2;
        return mapped_edges1 == mapped_edges2;
    }

    bool germs_consistent() const {
        // Germ edge references translate through endpoint images: an edge of
        // g1 maps to the unique g2 edge with the image endpoints (parallel
        // edges with equal weights are interchangeable, so endpoint match
        // plus the matrix check above suffices).
        for (const auto& [v, germ] : g1.germs) {
            auto itv = forward.find(v);
            if (itv == forward.end()) continue;
            auto itg = g2.germs.find(itv->second);
            if (itg == g2.germs.end()) return false;
            const Germ& h = itg->second;
            auto edge_maps_to = [&](const std::string& id1, const std::string& id2) {
                const Edge* e1 = find_edge(g1, id1);
                const Edge* e2 = find_edge(g2, id2);
                if (!e1 || !e2) return false;
                auto f = forward.find(e1->from);
                auto t = forward.find(e1->to);
                if (f == forward.end() || t == forward.end()) return true; // decided later
                return e2->from == f->second && e2->to == t->second &&
                       matrices_match(e1->matrix, e2->matrix);
            };
            if (!edge_maps_to(germ.red.in, h.red.in) || !edge_maps_to(germ.red.out, h.red.out))
                return false;
            if (germ.green_pair.has_value() != h.green_pair.has_value()) return false;
            if (germ.green_pair &&
                (!edge_maps_to(germ.green_pair->in, h.green_pair->in) ||
                 !edge_maps_to(germ.green_pair->out, h.green_pair->out)))
                return false;
            if (germ.green_edge.has_value() != h.green_edge.has_value()) return false;
            if (germ.green_edge && !edge_maps_to(*germ.green_edge, *h.green_edge)) return false;
        }
        return true;
    }

    bool extend(std::size_t idx) {
        if (idx == order.size()) {
            if (germs_consistent()) {
                results.push_back(forward);
                if (limit != 0 && results.size() >= limit) return true;
            }
            return false;
        }
        const std::string& v = order[idx];
        VertexLabel label = g1.vertices.at(v);
        for (const auto& [w, wlabel] : g2.vertices) {
            if (wlabel != label || backward.count(w)) continue;
            if (in_edges(g1, v).size() != in_edges(g2, w).size() ||
                out_edges(g1, v).size() != out_edges(g2, w).size())
                continue;
            forward[v] = w;
            backward[w] = v;
            if (edges_consistent() && germs_consistent())
                if (extend(idx + 1)) return true;
            forward.erase(v);
            backward.erase(w);
        }
        return false;
    }
};

} // namespace

std::vector<VertexMap> wlg_isomorphisms(const Wlg& g1, const Wlg& g2, MatrixCompare mode,
                                        std::size_t limit) {
    if (g1.vertices.size() != g2.vertices.size() || g1.edges.size() != g2.edges.size())
        return {};
    IsoSearch search{g1, g2, mode, limit, {}, {}, {}, {}};
    for (const auto& [v, label] : g1.vertices) {
        (void)label;
        search.order.push_back(v);
    }
    search.extend(0);
    return std::move(search.results);
}

std::optional<VertexMap> wlg_equivalent(const Wlg& g1, const Wlg& g2, MatrixCompare mode) {
    auto all = wlg_isomorphisms(g1, g2, mode, 1);
    if (all.empty()) return std::nullopt;
    return all.front();
}

bool is_wlg_map(const Wlg& g1, const Wlg& g2, const VertexMap& map, MatrixCompare mode) {
    if (map.size() != g1.vertices.size() || g1.vertices.size() != g2.vertices.size() ||
        g1.edges.size() != g2.edges.size())
        return false;
    std::set<std::string> image;
    for (const auto& [v, w] : map) {
        auto it1 = g1.vertices.find(v);
        auto it2 = g2.vertices.find(w);
        if (it1 == g1.vertices.end() || it2 == g2.vertices.end()) return false;
        if (it1->second != it2->second) return false;
        if (!image.insert(w).second) return false;
    }
    IsoSearch checker{g1, g2, mode, 0, {}, {}, {}, {}};
    checker.forward = map;
    for (const auto& [v, w] : map) checker.backward[w] = v;
    return checker.edges_consistent() && checker.germs_consistent();
}

std::optional<std::pair<std::string, std::string>> find_isolated_inner_vertex(const Wlg& g) {
    if (!is_tree(g))
        throw Error(ErrorCode::NotATree, "isolated inner vertex search requires a tree");
    if (g.vertices.size() < 3) return std::nullopt;
    for (const auto& [v, label] : g.vertices) {
        (void)label;
        auto edges = incident_edges(g, v);
        if (edges.size() < 2) continue;
        std::vector<const Edge*> to_inner;
        for (const Edge* e : edges)
            if (degree(g, other_endpoint(*e, v)) != 1) to_inner.push_back(e);
        if (to_inner.size() > 1) continue;
        std::string inner_edge;
        if (to_inner.size() == 1) {
            inner_edge = to_inner.front()->id;
        } else {
            // all neighbors are leaves (star); any edge may serve as inner
            inner_edge = edges.front()->id;
            for (const Edge* e : edges) inner_edge = std::min(inner_edge, e->id);
        }
        return std::make_pair(v, inner_edge);
    }
    return std::nullopt;
}

} // namespace wlg
