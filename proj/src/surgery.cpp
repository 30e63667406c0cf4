#include "wlg/surgery.hpp"

#include <algorithm>

namespace wlg {

const char* split_kind_name(SplitKind kind) {
    switch (kind) {
    case SplitKind::I: return "I";
    case SplitKind::II: return "II";
    case SplitKind::III: return "III";
    }
    return "?";
}

namespace {

void require_tree(const Wlg& g) {
    if (!is_tree(g))
        throw Error(ErrorCode::NotATree, "graph splits are defined on trees");
}

void require_label(const Wlg& g, const std::string& v, VertexLabel want) {
    auto it = g.vertices.find(v);
    if (it == g.vertices.end())
        throw Error(ErrorCode::WrongLabel, "vertex '" + v + "' does not exist");
    if (it->second != want)
        throw Error(ErrorCode::WrongLabel, "vertex '" + v + "' is labeled " +
                                               vertex_label_name(it->second) + ", expected " +
                                               vertex_label_name(want));
}

// Fresh ids derive from the split vertex only, so every processing order
// produces identical names. Collisions with user ids resolve by appending
// '+' against the full id pool of the input graph.
std::string fresh_id(const Wlg& g, const std::string& base) {
    std::set<std::string> taken;
    for (const auto& [v, l] : g.vertices) {
        (void)l;
        taken.insert(v);
    }
    for (const Edge& e : g.edges) taken.insert(e.id);
    std::string id = base;
    while (taken.count(id)) id += "+";
    return id;
}

// Subgraph spanned by the vertices reachable from the seeds in g minus
// vertex `removed` (edges incident to `removed` excluded).
Wlg component_without(const Wlg& g, const std::string& removed,
                      std::vector<std::string> seeds) {
    std::set<std::string> keep;
    std::vector<std::string>& stack = seeds;
    while (!stack.empty()) {
        std::string v = stack.back();
        stack.pop_back();
        if (v == removed || !keep.insert(v).second) continue;
        for (const Edge* e : incident_edges(g, v)) {
            std::string w = other_endpoint(*e, v);
            if (w != removed) stack.push_back(w);
        }
    }
    Wlg out;
    for (const std::string& v : keep) {
        out.vertices[v] = g.vertices.at(v);
        auto it = g.germs.find(v);
        if (it != g.germs.end()) out.germs[v] = it->second;
    }
    for (const Edge& e : g.edges)
        if (keep.count(e.from) && keep.count(e.to)) out.edges.push_back(e);
    return out;
}

void remap_germ_edge(Wlg& g, const std::string& old_id, const std::string& new_id) {
    for (auto& [v, germ] : g.germs) {
        (void)v;
        auto fix = [&](std::string& id) {
            if (id == old_id) id = new_id;
        };
        fix(germ.red.in);
        fix(germ.red.out);
        if (germ.green_pair) {
            fix(germ.green_pair->in);
            fix(germ.green_pair->out);
        }
        if (germ.green_edge && *germ.green_edge == old_id) germ.green_edge = new_id;
    }
}

// Fuse an in/out edge pair of v into a single edge carrying the product
// matrix (incoming edge's matrix on the left). Returns the component of
// g - v containing the fused edge.
Wlg fuse_pair(const Wlg& g, const std::string& v, const Edge& ein, const Edge& eout,
              const std::string& new_edge_id) {
    // the fused edge bridges the components of the in-source and out-target
    Wlg part = component_without(g, v, {ein.from, eout.to});
    GluingMatrix fused = multiply(ein.matrix, eout.matrix);
    part.edges.push_back(Edge{new_edge_id, ein.from, eout.to, fused});
    remap_germ_edge(part, ein.id, new_edge_id);
    remap_germ_edge(part, eout.id, new_edge_id);
    std::sort(part.edges.begin(), part.edges.end(),
              [](const Edge& a, const Edge& b) { return a.id < b.id; });
    return part;
}

const Edge& germ_edge(const Wlg& g, const std::string& id) {
    const Edge* e = find_edge(g, id);
    if (!e) throw Error(ErrorCode::WrongLabel, "germ references missing edge '" + id + "'");
    return *e;
}

} // namespace

SplitResult graph_split_I(const Wlg& g, const std::string& v) {
    require_tree(g);
    require_label(g, v, VertexLabel::V1);
    const Germ& germ = g.germs.at(v);
    const Edge red_in = germ_edge(g, germ.red.in);
    const Edge red_out = germ_edge(g, germ.red.out);
    const Edge green_in = germ_edge(g, germ.green_pair->in);
    const Edge green_out = germ_edge(g, germ.green_pair->out);

    SplitResult r;
    r.g1 = fuse_pair(g, v, red_in, red_out, fresh_id(g, v + ".red"));
    r.g2 = fuse_pair(g, v, green_in, green_out, fresh_id(g, v + ".green"));
    return r;
}

SplitResult graph_split_II(const Wlg& g, const std::string& v) {
    require_tree(g);
    require_label(g, v, VertexLabel::V2);
    const Germ& germ = g.germs.at(v);
    const Edge red_in = germ_edge(g, germ.red.in);
    const Edge red_out = germ_edge(g, germ.red.out);
    const Edge green = germ_edge(g, *germ.green_edge);

    SplitResult r;
    r.g1 = fuse_pair(g, v, red_in, red_out, fresh_id(g, v + ".red"));

    // The green component loses its connection through v; cap the dangling
    // end with a leaf supplying the missing flow direction: the removed
    // endpoint was the source when the green edge enters v (fresh R keeps
    // the surviving vertex's degrees), and the target when it leaves v
    // (fresh A).
    bool green_into_v = green.to == v;
    std::string anchor = green_into_v ? green.from : green.to;
    Wlg part = component_without(g, v, {anchor});
    std::string cap = fresh_id(g, v + ".cap");
    std::string cap_edge = fresh_id(g, v + ".green");
    if (green_into_v) {
        part.vertices[cap] = VertexLabel::A;
        part.edges.push_back(Edge{cap_edge, anchor, cap, green.matrix});
    } else {
        part.vertices[cap] = VertexLabel::R;
        part.edges.push_back(Edge{cap_edge, cap, anchor, green.matrix});
    }
    remap_germ_edge(part, green.id, cap_edge);
    std::sort(part.edges.begin(), part.edges.end(),
              [](const Edge& a, const Edge& b) { return a.id < b.id; });
    r.g2 = std::move(part);
    r.fresh_g2.push_back(cap);
    r.specials_g2.push_back(cap);
    return r;
}

SplitResult graph_split_III(const Wlg& g, const std::string& v) {
    require_tree(g);
    require_label(g, v, VertexLabel::V3);
    auto ins = in_edges(g, v);
    auto outs = out_edges(g, v);
    if (ins.size() != 1 || outs.size() != 1)
        throw Error(ErrorCode::WrongLabel, "V3 vertex '" + v + "' must have in 1 / out 1");
    const Edge e1 = *ins.front();
    const Edge e2 = *outs.front();

    SplitResult r;
    {
        Wlg part = component_without(g, v, {e1.from});
        std::string cap = fresh_id(g, v + ".a");
        std::string cap_edge = fresh_id(g, v + ".ea");
        part.vertices[cap] = VertexLabel::A;
        part.edges.push_back(Edge{cap_edge, e1.from, cap, e1.matrix});
        remap_germ_edge(part, e1.id, cap_edge);
        std::sort(part.edges.begin(), part.edges.end(),
                  [](const Edge& a, const Edge& b) { return a.id < b.id; });
        r.g1 = std::move(part);
        r.fresh_g1.push_back(cap);
        r.specials_g1.push_back(cap);
    }
    {
        Wlg part = component_without(g, v, {e2.to});
        std::string cap = fresh_id(g, v + ".r");
        std::string cap_edge = fresh_id(g, v + ".er");
        part.vertices[cap] = VertexLabel::R;
        part.edges.push_back(Edge{cap_edge, cap, e2.to, e2.matrix});
        remap_germ_edge(part, e2.id, cap_edge);
        std::sort(part.edges.begin(), part.edges.end(),
                  [](const Edge& a, const Edge& b) { return a.id < b.id; });
        r.g2 = std::move(part);
        r.fresh_g2.push_back(cap);
        r.specials_g2.push_back(cap);
    }
    return r;
}

std::vector<std::string> splittable_vertices(const Wlg& g) {
    std::vector<std::string> out;
    for (const auto& [v, label] : g.vertices)
        if (label == VertexLabel::V1 || label == VertexLabel::V2 || label == VertexLabel::V3)
            out.push_back(v);
    return out;
}

namespace {

SplitResult apply_split(const Wlg& g, const std::string& v, SplitKind& kind_out) {
    switch (g.vertices.at(v)) {
    case VertexLabel::V1:
        kind_out = SplitKind::I;
        return graph_split_I(g, v);
    case VertexLabel::V2:
        kind_out = SplitKind::II;
        return graph_split_II(g, v);
    case VertexLabel::V3:
        kind_out = SplitKind::III;
        return graph_split_III(g, v);
    default:
        throw Error(ErrorCode::WrongLabel, "vertex '" + v + "' is not splittable");
    }
}

struct DecompBuilder {
    std::vector<std::string> order; // remaining split vertices, processed front to back
    Decomposition result;

    std::unique_ptr<DecompNode> run(const Wlg& g, std::set<std::string> specials,
                                    std::vector<std::string> origin) {
        // first vertex of `order` present in this component
        std::string pick;
        for (const std::string& v : order)
            if (g.vertices.count(v) && !pick.size()) pick = v;
        if (pick.empty()) {
            SimpleFactor factor{g, std::move(specials), std::move(origin)};
            result.factors.push_back(std::move(factor));
            auto node = std::make_unique<DecompNode>();
            node->factor_index = static_cast<int>(result.factors.size()) - 1;
            return node;
        }

        SplitKind kind;
        SplitResult split = apply_split(g, pick, kind);
        auto node = std::make_unique<DecompNode>();
        node->kind = kind;
        node->vertex = pick;
        if (!split.fresh_g1.empty()) node->fresh_g1 = split.fresh_g1.front();
        if (!split.fresh_g2.empty()) node->fresh_g2 = split.fresh_g2.front();

        auto carry = [&](const Wlg& part, const std::vector<std::string>& fresh_specials) {
            std::set<std::string> s;
            for (const std::string& v : specials)
                if (part.vertices.count(v)) s.insert(v);
            for (const std::string& v : fresh_specials) s.insert(v);
            return s;
        };
        std::vector<std::string> o1 = origin, o2 = origin;
        std::string step = std::string("split ") + split_kind_name(kind) + " at " + pick;
        o1.push_back(step + " (G1)");
        o2.push_back(step + " (G2)");

        node->left = run(split.g1, carry(split.g1, split.specials_g1), std::move(o1));
        node->right = run(split.g2, carry(split.g2, split.specials_g2), std::move(o2));
        return node;
    }
};

} // namespace

Decomposition simple_decomposition_ordered(const Wlg& g, const std::vector<std::string>& order) {
    if (!is_tree(g))
        throw Error(ErrorCode::NotATree, "simple decomposition requires a tree");
    DecompBuilder builder;
    builder.order = order;
    builder.result.plan = builder.run(g, {}, {});
    return std::move(builder.result);
}

Decomposition simple_decomposition(const Wlg& g) {
    return simple_decomposition_ordered(g, splittable_vertices(g));
}

} // namespace wlg
