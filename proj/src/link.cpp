#include "wlg/link.hpp"

#include <algorithm>
#include <tuple>

namespace wlg {

const char* role_name(Role role) {
    switch (role) {
    case Role::HopfCore: return "hopf-core";
    case Role::HopfPartner: return "hopf-partner";
    case Role::Cable: return "cable";
    }
    return "?";
}

namespace {

auto component_key(const IndexedComponent& c) {
    return std::make_tuple(static_cast<int>(c.role), c.index, c.p, c.q, c.orientation,
                           c.source_vertex);
}

auto piece_key(const SeifertPiece& piece) {
    std::vector<decltype(component_key(IndexedComponent{}))> keys;
    for (const IndexedComponent& c : piece.components) keys.push_back(component_key(c));
    return std::make_tuple(piece.hopf_sign, keys);
}

void normalize_component(IndexedComponent& c) {
    if (c.role != Role::Cable) return;
    if (c.p < 0 || (c.p == 0 && c.q < 0)) {
        c.p = -c.p;
        c.q = -c.q;
        c.orientation = -c.orientation;
    }
}

} // namespace

IndexedLink canonicalized(IndexedLink link) {
    for (SeifertPiece& piece : link.pieces) {
        for (IndexedComponent& c : piece.components) normalize_component(c);
        std::sort(piece.components.begin(), piece.components.end(),
                  [](const IndexedComponent& x, const IndexedComponent& y) {
                      return component_key(x) < component_key(y);
                  });
    }
    std::sort(link.pieces.begin(), link.pieces.end(),
              [](const SeifertPiece& x, const SeifertPiece& y) {
                  return piece_key(x) < piece_key(y);
              });
    std::sort(link.free_unknots.begin(), link.free_unknots.end(),
              [](const IndexedComponent& x, const IndexedComponent& y) {
                  return component_key(x) < component_key(y);
              });
    return link;
}

std::size_t component_count(const IndexedLink& link) {
    std::size_t n = link.free_unknots.size();
    for (const SeifertPiece& piece : link.pieces) n += piece.components.size();
    return n;
}

namespace {

int index_of_label(VertexLabel label) {
    if (label == VertexLabel::A) return 0;
    if (label == VertexLabel::R) return 2;
    return 1;
}

} // namespace

IndexedLink simple_factor_link(const Wlg& g, const NeatnessCertificate& cert) {
    NeatScan scan = is_neat_simple(g);
    if (!scan.ok())
        throw Error(ErrorCode::NotNeatSimple, scan.diagnostic);

    std::string partner;
    if (cert.kind == CertKind::NoV5) {
        if (g.vertices.size() == 2) {
            const Edge* e = find_edge(g, cert.exceptional_edges.front());
            partner = other_endpoint(*e, cert.v0);
        } else {
            // the Hopf partner is the leaf of the exceptional edge away from v0
            auto leaf_end = [&](const std::string& edge_id) {
                const Edge* e = find_edge(g, edge_id);
                return is_saddle(g.vertices.at(e->from)) ? e->to : e->from;
            };
            partner = leaf_end(cert.exceptional_edges.front());
            if (partner == cert.v0) partner = leaf_end(cert.exceptional_edges.back());
        }
    } else {
        for (const auto& [v, label] : g.vertices)
            if (label == VertexLabel::V5) partner = v;
    }

    SeifertPiece piece;
    piece.hopf_sign = signature(g, cert, partner);

    IndexedComponent core;
    core.role = Role::HopfCore;
    core.index = index_of_label(g.vertices.at(cert.v0));
    core.orientation = +1;
    core.source_vertex = cert.v0;
    piece.components.push_back(core);

    IndexedComponent mate;
    mate.role = Role::HopfPartner;
    mate.index = index_of_label(g.vertices.at(partner));
    mate.orientation = piece.hopf_sign;
    mate.source_vertex = partner;
    piece.components.push_back(mate);

    for (const auto& [v, label] : g.vertices) {
        if (v == cert.v0 || v == partner) continue;
        IndexedComponent cable;
        cable.role = Role::Cable;
        cable.index = index_of_label(label);
        cable.orientation = signature(g, cert, v);
        cable.p = cert.pq.first;
        cable.q = cert.pq.second;
        cable.source_vertex = v;
        piece.components.push_back(cable);
    }

    IndexedLink link;
    link.pieces.push_back(std::move(piece));
    return canonicalized(std::move(link));
}

namespace {

// Removes the component with the given source vertex; requires its index
// to be one of `allowed`.
IndexedComponent remove_component(IndexedLink& link, const std::string& source,
                                  std::initializer_list<int> allowed) {
    for (SeifertPiece& piece : link.pieces) {
        auto it = std::find_if(piece.components.begin(), piece.components.end(),
                               [&](const IndexedComponent& c) { return c.source_vertex == source; });
        if (it == piece.components.end()) continue;
        IndexedComponent removed = *it;
        if (std::find(allowed.begin(), allowed.end(), removed.index) == allowed.end())
            throw Error(ErrorCode::MissingComponent,
                        "component '" + source + "' has index " + std::to_string(removed.index) +
                            ", not allowed for this operation");
        piece.components.erase(it);
        return removed;
    }
    auto it = std::find_if(link.free_unknots.begin(), link.free_unknots.end(),
                           [&](const IndexedComponent& c) { return c.source_vertex == source; });
    if (it != link.free_unknots.end())
        throw Error(ErrorCode::MissingComponent,
                    "component '" + source + "' is an index-1 unknot, not removable");
    throw Error(ErrorCode::MissingComponent, "no component with source vertex '" + source + "'");
}

void drop_empty_pieces(IndexedLink& link) {
    link.pieces.erase(std::remove_if(link.pieces.begin(), link.pieces.end(),
                                     [](const SeifertPiece& p) { return p.components.empty(); }),
                      link.pieces.end());
}

} // namespace

IndexedLink wada_compose(const IndexedLink& l1, const IndexedLink& l2, WadaOp op,
                         const WadaParams& params) {
    IndexedLink a = l1, b = l2;
    switch (op) {
    case WadaOp::I:
        break;
    case WadaOp::II:
        if (!params.remove_from_l2)
            throw Error(ErrorCode::MissingComponent, "operation II names a component of l2");
        remove_component(b, *params.remove_from_l2, {0, 2});
        break;
    case WadaOp::III: {
        if (!params.remove_from_l1 || !params.remove_from_l2)
            throw Error(ErrorCode::MissingComponent,
                        "operation III names one component on each side");
        IndexedComponent r1 = remove_component(a, *params.remove_from_l1, {0, 2});
        IndexedComponent r2 = remove_component(b, *params.remove_from_l2, {0, 2});
        if (r1.index + r2.index != 2 || r1.index == r2.index)
            throw Error(ErrorCode::MissingComponent,
                        "operation III removes one index-0 and one index-2 component");
        break;
    }
    }
    drop_empty_pieces(a);
    drop_empty_pieces(b);

    IndexedLink out;
    out.pieces = std::move(a.pieces);
    out.pieces.insert(out.pieces.end(), b.pieces.begin(), b.pieces.end());
    out.free_unknots = std::move(a.free_unknots);
    out.free_unknots.insert(out.free_unknots.end(), b.free_unknots.begin(),
                            b.free_unknots.end());

    IndexedComponent connective;
    connective.role = Role::Cable;
    connective.index = 1;
    connective.orientation = +1;
    connective.source_vertex = params.connective_vertex;
    out.free_unknots.push_back(connective);
    return canonicalized(std::move(out));
}

namespace {

IndexedLink link_of_node(const Decomposition& dec, const DecompNode& node) {
    if (node.is_leaf()) {
        const SimpleFactor& factor = dec.factors[static_cast<std::size_t>(node.factor_index)];
        NeatScan scan = is_neat_simple(factor.graph);
        if (!scan.ok()) throw Error(ErrorCode::NotNeat, scan.diagnostic);
        return simple_factor_link(factor.graph, *scan.certificate);
    }
    IndexedLink l1 = link_of_node(dec, *node.left);
    IndexedLink l2 = link_of_node(dec, *node.right);
    WadaParams params;
    params.connective_vertex = node.vertex;
    switch (node.kind) {
    case SplitKind::I:
        return wada_compose(l1, l2, WadaOp::I, params);
    case SplitKind::II:
        params.remove_from_l2 = node.fresh_g2;
        return wada_compose(l1, l2, WadaOp::II, params);
    case SplitKind::III:
        params.remove_from_l1 = node.fresh_g1;
        params.remove_from_l2 = node.fresh_g2;
        return wada_compose(l1, l2, WadaOp::III, params);
    }
    throw Error(ErrorCode::MissingComponent, "unreachable");
}

} // namespace

IndexedLink link_of_wlg(const Wlg& g) {
    RealizabilityReport report = realizable_on_s3(g); // checks tree + neat
    if (!report.realizable)
        throw Error(ErrorCode::NotRealizable, report.diagnostics.empty()
                                                  ? "graph fails the realizability conditions"
                                                  : report.diagnostics.front());
    Decomposition dec = simple_decomposition(g);
    return link_of_node(dec, *dec.plan);
}

namespace {

IndexedLink swap_pq(IndexedLink link) {
    for (SeifertPiece& piece : link.pieces)
        for (IndexedComponent& c : piece.components)
            if (c.role == Role::Cable) std::swap(c.p, c.q);
    return link;
}

} // namespace

bool links_equal(const IndexedLink& l1, const IndexedLink& l2, bool identify_pq_swap) {
    IndexedLink a = canonicalized(l1);
    IndexedLink b = canonicalized(l2);
    if (a == b) return true;
    if (identify_pq_swap && canonicalized(swap_pq(a)) == b) return true;
    return false;
}

} // namespace wlg
