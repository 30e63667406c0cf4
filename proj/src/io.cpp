#include "wlg/io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace wlg {

namespace {

Json matrix_to_json(const GluingMatrix& m) {
    return Json::array({m.a, m.b, m.c, m.d});
}

GluingMatrix matrix_from_json(const Json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 4)
        throw Error(ErrorCode::SchemaError, where + ": matrix must be a 4-integer array");
    for (const auto& v : j)
        if (!v.is_number_integer())
            throw Error(ErrorCode::SchemaError, where + ": matrix entries must be integers");
    return GluingMatrix{j[0].get<std::int64_t>(), j[1].get<std::int64_t>(),
                        j[2].get<std::int64_t>(), j[3].get<std::int64_t>()};
}

const Json& require(const Json& j, const char* field, const std::string& where) {
    auto it = j.find(field);
    if (it == j.end())
        throw Error(ErrorCode::SchemaError, where + ": missing field '" + field + "'");
    return *it;
}

std::string require_string(const Json& j, const char* field, const std::string& where) {
    const Json& v = require(j, field, where);
    if (!v.is_string())
        throw Error(ErrorCode::SchemaError, where + ": field '" + field + "' must be a string");
    return v.get<std::string>();
}

} // namespace

Json wlg_to_json(const Wlg& g) {
    Json vertices = Json::array();
    for (const auto& [id, label] : g.vertices) {
        Json v;
        v["id"] = id;
        v["label"] = vertex_label_name(label);
        auto it = g.germs.find(id);
        if (it != g.germs.end()) {
            Json germ;
            germ["red"] = Json{{"in", it->second.red.in}, {"out", it->second.red.out}};
            if (it->second.green_pair)
                germ["green"] =
                    Json{{"in", it->second.green_pair->in}, {"out", it->second.green_pair->out}};
            if (it->second.green_edge) germ["green"] = *it->second.green_edge;
            v["germ"] = germ;
        }
        vertices.push_back(v);
    }
    Json edges = Json::array();
    std::vector<Edge> sorted = g.edges;
    std::sort(sorted.begin(), sorted.end(),
              [](const Edge& a, const Edge& b) { return a.id < b.id; });
    for (const Edge& e : sorted) {
        Json ej;
        ej["id"] = e.id;
        ej["from"] = e.from;
        ej["to"] = e.to;
        ej["matrix"] = matrix_to_json(e.matrix);
        edges.push_back(ej);
    }
    Json out;
    out["vertices"] = vertices;
    out["edges"] = edges;
    return out;
}

Wlg wlg_from_json(const Json& j) {
    if (!j.is_object()) throw Error(ErrorCode::SchemaError, "graph: document must be an object");
    Wlg g;
    const Json& vertices = require(j, "vertices", "graph");
    if (!vertices.is_array())
        throw Error(ErrorCode::SchemaError, "graph: 'vertices' must be an array");
    for (const Json& vj : vertices) {
        std::string id = require_string(vj, "id", "vertex");
        std::string label_name = require_string(vj, "label", "vertex '" + id + "'");
        auto label = vertex_label_from_name(label_name);
        if (!label)
            throw Error(ErrorCode::SchemaError,
                        "vertex '" + id + "': unknown label '" + label_name + "'");
        if (g.vertices.count(id))
            throw Error(ErrorCode::SchemaError, "vertex '" + id + "': duplicate id");
        g.vertices[id] = *label;
        if (vj.contains("germ")) {
            const Json& gj = vj["germ"];
            Germ germ;
            const Json& red = require(gj, "red", "germ of '" + id + "'");
            germ.red.in = require_string(red, "in", "germ of '" + id + "'");
            germ.red.out = require_string(red, "out", "germ of '" + id + "'");
            const Json& green = require(gj, "green", "germ of '" + id + "'");
            if (green.is_string()) {
                germ.green_edge = green.get<std::string>();
            } else {
                GermPair pair;
                pair.in = require_string(green, "in", "germ of '" + id + "'");
                pair.out = require_string(green, "out", "germ of '" + id + "'");
                germ.green_pair = pair;
            }
            g.germs[id] = germ;
        }
    }
    const Json& edges = require(j, "edges", "graph");
    if (!edges.is_array()) throw Error(ErrorCode::SchemaError, "graph: 'edges' must be an array");
    for (const Json& ej : edges) {
        Edge e;
        e.id = require_string(ej, "id", "edge");
        e.from = require_string(ej, "from", "edge '" + e.id + "'");
        e.to = require_string(ej, "to", "edge '" + e.id + "'");
        e.matrix = matrix_from_json(require(ej, "matrix", "edge '" + e.id + "'"),
                                    "edge '" + e.id + "'");
        g.edges.push_back(e);
    }
    std::sort(g.edges.begin(), g.edges.end(),
              [](const Edge& a, const Edge& b) { return a.id < b.id; });
    return g;
}

namespace {

Json curve_to_json(const CurveClass& c) {
    Json j;
    j["torus"] = c.torus;
    if (c.essential) {
        j["kind"] = "essential";
        j["class"] = Json::array({c.p, c.q});
        j["orientation"] = c.orientation > 0 ? "+" : "-";
    } else {
        j["kind"] = "inessential";
        j["handedness"] = c.handedness > 0 ? "left" : "right";
    }
    j["owner"] = Json{{"saddle", c.owner_saddle}, {"manifold", c.stable ? "stable" : "unstable"}};
    return j;
}

CurveClass curve_from_json(const Json& j) {
    CurveClass c;
    c.torus = require_string(j, "torus", "curve");
    std::string kind = require_string(j, "kind", "curve");
    if (kind == "essential") {
        c.essential = true;
        const Json& cls = require(j, "class", "curve");
        if (!cls.is_array() || cls.size() != 2)
            throw Error(ErrorCode::SchemaError, "curve: 'class' must be a 2-integer array");
        c.p = cls[0].get<std::int64_t>();
        c.q = cls[1].get<std::int64_t>();
        std::string ori = require_string(j, "orientation", "curve");
        if (ori != "+" && ori != "-")
            throw Error(ErrorCode::SchemaError, "curve: orientation must be '+' or '-'");
        c.orientation = ori == "+" ? +1 : -1;
        c.handedness = +1;
    } else if (kind == "inessential") {
        c.essential = false;
        c.p = 0;
        c.q = 0;
        c.orientation = +1;
        std::string hand = require_string(j, "handedness", "curve");
        if (hand != "left" && hand != "right")
            throw Error(ErrorCode::SchemaError, "curve: handedness must be 'left' or 'right'");
        c.handedness = hand == "left" ? +1 : -1;
    } else {
        throw Error(ErrorCode::SchemaError, "curve: kind must be 'essential' or 'inessential'");
    }
    const Json& owner = require(j, "owner", "curve");
    c.owner_saddle = require_string(owner, "saddle", "curve owner");
    std::string manifold = require_string(owner, "manifold", "curve owner");
    if (manifold != "stable" && manifold != "unstable")
        throw Error(ErrorCode::SchemaError, "curve: manifold must be 'stable' or 'unstable'");
    c.stable = manifold == "stable";
    return c;
}

} // namespace

Json presentation_to_json(const FlowPresentation& f) {
    Json acc;
    Json tori = Json::array();
    for (const std::string& t : f.accompany.tori) tori.push_back(t);
    acc["tori"] = tori;
    Json curves = Json::array();
    for (const CurveClass& c : f.accompany.curves) curves.push_back(curve_to_json(c));
    acc["curves"] = curves;
    Json out;
    out["version"] = 1;
    out["graph"] = wlg_to_json(f.graph);
    out["accompany"] = acc;
    return out;
}

FlowPresentation presentation_from_json(const Json& j) {
    if (!j.is_object())
        throw Error(ErrorCode::SchemaError, "presentation: document must be an object");
    const Json& version = require(j, "version", "presentation");
    if (!version.is_number_integer() || version.get<int>() != 1)
        throw Error(ErrorCode::SchemaError, "presentation: unsupported version");
    FlowPresentation f;
    f.graph = wlg_from_json(require(j, "graph", "presentation"));
    const Json& acc = require(j, "accompany", "presentation");
    const Json& tori = require(acc, "tori", "accompany");
    for (const Json& t : tori) f.accompany.tori.push_back(t.get<std::string>());
    const Json& curves = require(acc, "curves", "accompany");
    for (const Json& c : curves) f.accompany.curves.push_back(curve_from_json(c));

    // cross-references
    for (const std::string& t : f.accompany.tori)
        if (!f.graph.vertices.count(t) || is_saddle(f.graph.vertices.at(t)))
            throw Error(ErrorCode::SchemaError, "accompany: torus '" + t +
                                                    "' is not an A/R vertex of the graph");
    for (const CurveClass& c : f.accompany.curves) {
        if (!f.graph.vertices.count(c.torus) || is_saddle(f.graph.vertices.at(c.torus)))
            throw Error(ErrorCode::SchemaError, "accompany: curve torus '" + c.torus +
                                                    "' is not an A/R vertex of the graph");
        if (!f.graph.vertices.count(c.owner_saddle) ||
            !is_saddle(f.graph.vertices.at(c.owner_saddle)))
            throw Error(ErrorCode::SchemaError, "accompany: owner '" + c.owner_saddle +
                                                    "' is not a saddle vertex of the graph");
    }
    return f;
}

Json link_to_json(const IndexedLink& link) {
    IndexedLink canon = canonicalized(link);
    auto component_json = [](const IndexedComponent& c) {
        Json j;
        j["component"] = c.source_vertex;
        j["index"] = c.index;
        j["orientation"] = c.orientation > 0 ? "+" : "-";
        if (c.role == Role::Cable && c.p == 0 && c.q == 0 && c.index == 1) {
            j["role"] = "unknot";
        } else {
            j["role"] = role_name(c.role);
            if (c.role == Role::Cable) j["cable"] = Json::array({c.p, c.q});
        }
        return j;
    };
    Json pieces = Json::array();
    for (const SeifertPiece& piece : canon.pieces) {
        Json pj;
        pj["hopf_sign"] = piece.hopf_sign > 0 ? "+" : "-";
        Json comps = Json::array();
        for (const IndexedComponent& c : piece.components) comps.push_back(component_json(c));
        pj["components"] = comps;
        pieces.push_back(pj);
    }
    Json unknots = Json::array();
    for (const IndexedComponent& c : canon.free_unknots) unknots.push_back(component_json(c));
    Json out;
    out["pieces"] = pieces;
    out["free_unknots"] = unknots;
    return out;
}

std::string link_to_table(const IndexedLink& link) {
    IndexedLink canon = canonicalized(link);
    std::ostringstream os;
    os << "component  index  orientation  role\n";
    auto describe = [&](const IndexedComponent& c, int piece_no) {
        os << c.source_vertex << "  " << c.index << "  " << (c.orientation > 0 ? "+" : "-")
           << "  ";
        if (c.role == Role::Cable && piece_no < 0) {
            os << "unknot";
        } else if (c.role == Role::Cable) {
            os << "cable(" << c.p << "," << c.q << ")";
        } else {
            os << role_name(c.role);
        }
        if (piece_no >= 0) os << "  piece " << piece_no;
        os << "\n";
    };
    int n = 0;
    for (const SeifertPiece& piece : canon.pieces) {
        os << "piece " << n << ": hopf sign " << (piece.hopf_sign > 0 ? "+" : "-") << "\n";
        for (const IndexedComponent& c : piece.components) describe(c, n);
        ++n;
    }
    for (const IndexedComponent& c : canon.free_unknots) describe(c, -1);
    return os.str();
}

Json report_to_json(const ValidationReport& report) {
    Json findings = Json::array();
    for (const Finding& f : report.findings)
        findings.push_back(Json{{"code", f.code}, {"subject", f.subject}, {"detail", f.detail}});
    Json out;
    out["valid"] = report.ok();
    out["findings"] = findings;
    return out;
}

Json certificate_to_json(const NeatnessCertificate& cert) {
    Json out;
    out["kind"] = cert.kind == CertKind::NoV5 ? "no-v5" : "with-v5";
    Json ex = Json::array();
    for (const std::string& id : cert.exceptional_edges) ex.push_back(id);
    out["exceptional_edges"] = ex;
    out["v0"] = cert.v0;
    out["bar_b"] = matrix_to_json(cert.bar_b);
    if (cert.kind == CertKind::NoV5) {
        out["rotation_product"] = matrix_to_json(cert.rotation_product);
        out["pq"] = Json::array({cert.pq.first, cert.pq.second});
    } else {
        out["t"] = cert.t;
        out["form_sign"] = cert.form_sign > 0 ? "+" : "-";
    }
    return out;
}

Json entry_to_json(const ClassificationEntry& entry) {
    Json out;
    out["orbit_count"] = entry.orbit_count;
    out["family"] = entry.family;
    Json params;
    for (const auto& [k, v] : entry.params) params[k] = v;
    out["params"] = params;
    out["representative"] = presentation_to_json(entry.representative);
    return out;
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out;
}

const char* dot_shape(VertexLabel label) {
    switch (label) {
    case VertexLabel::R: return "invtriangle";
    case VertexLabel::A: return "triangle";
    case VertexLabel::V5: return "doublecircle";
    default: return "circle";
    }
}

} // namespace

std::string to_dot(const Wlg& g) {
    std::ostringstream os;
    os << "digraph wlg {\n";
    for (const auto& [id, label] : g.vertices)
        os << "  \"" << dot_escape(id) << "\" [shape=" << dot_shape(label) << ", label=\""
           << dot_escape(id) << " : " << vertex_label_name(label) << "\"];\n";
    std::vector<Edge> sorted = g.edges;
    std::sort(sorted.begin(), sorted.end(),
              [](const Edge& a, const Edge& b) { return a.id < b.id; });
    for (const Edge& e : sorted) {
        std::string color;
        auto germ_color = [&](const Germ& germ) {
            if (germ.red.in == e.id || germ.red.out == e.id) color = "red";
            if (germ.green_pair &&
                (germ.green_pair->in == e.id || germ.green_pair->out == e.id))
                color = "green";
            if (germ.green_edge && *germ.green_edge == e.id) color = "green";
        };
        for (const auto& [v, germ] : g.germs) {
            (void)v;
            germ_color(germ);
        }
        os << "  \"" << dot_escape(e.from) << "\" -> \"" << dot_escape(e.to) << "\" [label=\""
           << dot_escape(e.id) << " [[" << e.matrix.a << "," << e.matrix.b << "],[" << e.matrix.c
           << "," << e.matrix.d << "]]\"";
        if (!color.empty()) os << ", color=" << color;
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

std::string serialize(const Json& j) {
    return j.dump(2) + "\n";
}

Json parse_json_text(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw Error(ErrorCode::ParseError,
                    origin + ": " + err.what());
    }
}

Wlg load_wlg_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, path + ": cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return wlg_from_json(parse_json_text(ss.str(), path));
}

FlowPresentation load_presentation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, path + ": cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return presentation_from_json(parse_json_text(ss.str(), path));
}

} // namespace wlg
