// Command-line front end: subcommand dispatch, file I/O, deterministic
// exit codes (0 success or true verdict, 1 false verdict, 2 bad input).

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "wlg/io.hpp"

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitBadInput = 2;

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw wlg::Error(wlg::ErrorCode::ParseError, path + ": cannot write file");
    out << text;
}

std::string stem_of(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

int cmd_validate(const std::string& file, const std::string& format) {
    wlg::Wlg g = wlg::load_wlg_file(file);
    wlg::ValidationReport report = wlg::validate(g);
    if (format == "json") {
        std::cout << wlg::serialize(wlg::report_to_json(report));
    } else {
        if (report.ok()) std::cout << "valid\n";
        for (const wlg::Finding& f : report.findings)
            std::cout << f.code << " [" << f.subject << "] " << f.detail << "\n";
    }
    return report.ok() ? kExitTrue : kExitFalse;
}

int cmd_split(const std::string& file, const std::string& vertex, const std::string& out_dir) {
    wlg::Wlg g = wlg::load_wlg_file(file);
    auto it = g.vertices.find(vertex);
    if (it == g.vertices.end())
        throw wlg::Error(wlg::ErrorCode::SchemaError, "vertex '" + vertex + "' does not exist");
    wlg::SplitResult r;
    switch (it->second) {
    case wlg::VertexLabel::V1: r = wlg::graph_split_I(g, vertex); break;
    case wlg::VertexLabel::V2: r = wlg::graph_split_II(g, vertex); break;
    case wlg::VertexLabel::V3: r = wlg::graph_split_III(g, vertex); break;
    default:
        throw wlg::Error(wlg::ErrorCode::WrongLabel,
                         "vertex '" + vertex + "' is not a V1/V2/V3 vertex");
    }
    wlg::Json sidecar;
    sidecar["g1"] = wlg::Json{{"special_vertices", r.specials_g1}};
    sidecar["g2"] = wlg::Json{{"special_vertices", r.specials_g2}};
    if (out_dir.empty()) {
        wlg::Json out;
        out["g1"] = wlg::wlg_to_json(r.g1);
        out["g2"] = wlg::wlg_to_json(r.g2);
        out["provenance"] = sidecar;
        std::cout << wlg::serialize(out);
    } else {
        std::string stem = (std::filesystem::path(out_dir) / stem_of(file)).string();
        write_file(stem + ".g1.json", wlg::serialize(wlg::wlg_to_json(r.g1)));
        write_file(stem + ".g2.json", wlg::serialize(wlg::wlg_to_json(r.g2)));
        write_file(stem + ".provenance.json", wlg::serialize(sidecar));
        std::cout << "wrote " << stem << ".g1.json, .g2.json, .provenance.json\n";
    }
    return kExitTrue;
}

int cmd_decompose(const std::string& file, const std::string& out_dir) {
    wlg::Wlg g = wlg::load_wlg_file(file);
    wlg::Decomposition dec = wlg::simple_decomposition(g);
    wlg::Json provenance = wlg::Json::array();
    for (std::size_t i = 0; i < dec.factors.size(); ++i) {
        const wlg::SimpleFactor& f = dec.factors[i];
        wlg::Json pj;
        pj["factor"] = i;
        pj["special_vertices"] =
            std::vector<std::string>(f.special_vertices.begin(), f.special_vertices.end());
        pj["origin"] = f.origin;
        provenance.push_back(pj);
    }
    if (out_dir.empty()) {
        wlg::Json out;
        wlg::Json factors = wlg::Json::array();
        for (const wlg::SimpleFactor& f : dec.factors)
            factors.push_back(wlg::wlg_to_json(f.graph));
        out["factors"] = factors;
        out["provenance"] = provenance;
        std::cout << wlg::serialize(out);
    } else {
        std::string stem = (std::filesystem::path(out_dir) / stem_of(file)).string();
        for (std::size_t i = 0; i < dec.factors.size(); ++i)
            write_file(stem + ".factor" + std::to_string(i) + ".json",
                       wlg::serialize(wlg::wlg_to_json(dec.factors[i].graph)));
        write_file(stem + ".provenance.json", wlg::serialize(provenance));
        std::cout << "wrote " << dec.factors.size() << " factor files under " << out_dir << "\n";
    }
    return kExitTrue;
}

int cmd_neat(const std::string& file, bool apply_normalize, const std::string& format) {
    wlg::Wlg g = wlg::load_wlg_file(file);
    if (apply_normalize) {
        wlg::NormalizeResult n = wlg::normalize(g);
        for (const std::string& note : n.notes) std::cerr << note << "\n";
        g = n.graph;
    }
    if (wlg::is_simple(g)) {
        wlg::NeatScan scan = wlg::is_neat_simple(g);
        if (!scan.ok()) {
            std::cerr << scan.diagnostic << "\n";
            std::cout << "not neat\n";
            return kExitFalse;
        }
        if (format == "json")
            std::cout << wlg::serialize(wlg::certificate_to_json(*scan.certificate));
        else
            std::cout << "neat simple ("
                      << (scan.certificate->kind == wlg::CertKind::NoV5 ? "no-v5" : "with-v5")
                      << ", v0 " << scan.certificate->v0 << ")\n";
        return kExitTrue;
    }
    wlg::Decomposition dec = wlg::simple_decomposition(g);
    bool all_ok = true;
    wlg::Json certs = wlg::Json::array();
    for (std::size_t i = 0; i < dec.factors.size(); ++i) {
        wlg::NeatScan scan = wlg::is_neat_simple(dec.factors[i].graph);
        if (!scan.ok()) {
            all_ok = false;
            std::cerr << "factor " << i << ": " << scan.diagnostic << "\n";
        } else if (format == "json") {
            certs.push_back(wlg::certificate_to_json(*scan.certificate));
        }
    }
    if (!all_ok) {
        std::cout << "not neat\n";
        return kExitFalse;
    }
    if (format == "json")
        std::cout << wlg::serialize(certs);
    else
        std::cout << "neat (" << dec.factors.size() << " factors)\n";
    return kExitTrue;
}

int cmd_sign(const std::string& file, const std::string& v0_override) {
    wlg::Wlg g = wlg::load_wlg_file(file);
    if (!wlg::is_simple(g))
        throw wlg::Error(wlg::ErrorCode::NotSimple,
                         "signatures are computed on neat simple graphs; decompose first");
    wlg::NeatScan scan = wlg::is_neat_simple(g);
    if (!scan.ok()) {
        std::cerr << scan.diagnostic << "\n";
        return kExitFalse;
    }
    wlg::NeatnessCertificate cert = *scan.certificate;
    if (!v0_override.empty() && v0_override != cert.v0) {
        bool adjacent = false;
        for (const std::string& id : cert.exceptional_edges) {
            const wlg::Edge* e = wlg::find_edge(g, id);
            if (e->from == v0_override || e->to == v0_override) adjacent = true;
        }
        if (!adjacent)
            throw wlg::Error(wlg::ErrorCode::SchemaError,
                             "--v0 must name a leaf adjacent to an exceptional edge");
        std::cerr << "using non-canonical base vertex " << v0_override << "\n";
        cert.v0 = v0_override;
    }
    std::cout << "# v0: " << cert.v0 << "\n";
    for (const auto& [v, label] : g.vertices) {
        (void)label;
        if (v == cert.v0) continue;
        int s = wlg::signature(g, cert, v);
        std::cout << v << " " << (s > 0 ? "+1" : "-1") << "\n";
    }
    return kExitTrue;
}

int cmd_realize(const std::string& file) {
    wlg::Wlg g = wlg::load_wlg_file(file);
    wlg::RealizabilityReport report = wlg::realizable_on_s3(g);
    for (const std::string& d : report.diagnostics) std::cerr << d << "\n";
    std::cout << (report.realizable ? "realizable\n" : "not realizable\n");
    return report.realizable ? kExitTrue : kExitFalse;
}

int cmd_link(const std::string& file, const std::string& format) {
    wlg::Wlg g = wlg::load_wlg_file(file);
    wlg::IndexedLink link = wlg::link_of_wlg(g);
    if (format == "json")
        std::cout << wlg::serialize(wlg::link_to_json(link));
    else
        std::cout << wlg::link_to_table(link);
    return kExitTrue;
}

int cmd_equiv(const std::string& file1, const std::string& file2) {
    wlg::FlowPresentation f1 = wlg::load_presentation_file(file1);
    wlg::FlowPresentation f2 = wlg::load_presentation_file(file2);
    std::optional<wlg::VertexMap> witness = wlg::flows_equivalent(f1, f2);
    if (!witness) {
        std::cout << "NOT EQUIVALENT (criterion)\n";
        return kExitFalse;
    }
    wlg::Json out;
    for (const auto& [v, w] : *witness) out[v] = w;
    std::cout << wlg::serialize(out);
    return kExitTrue;
}

int cmd_classify(int orbits, std::int64_t p_bound, const std::string& format) {
    std::vector<wlg::ClassificationEntry> entries = wlg::classify(orbits, p_bound);
    if (format == "json") {
        wlg::Json out;
        out["orbit_count"] = orbits;
        out["p_bound"] = p_bound;
        wlg::Json list = wlg::Json::array();
        for (const wlg::ClassificationEntry& e : entries) list.push_back(wlg::entry_to_json(e));
        out["entries"] = list;
        std::cout << wlg::serialize(out);
    } else {
        std::cout << entries.size() << " classes (p bound " << p_bound << ")\n";
        for (const wlg::ClassificationEntry& e : entries) {
            std::cout << e.family;
            for (const auto& [k, v] : e.params) std::cout << " " << k << "=" << v;
            std::cout << "\n";
        }
    }
    return kExitTrue;
}

int cmd_export_dot(const std::string& file) {
    std::cout << wlg::to_dot(wlg::load_wlg_file(file));
    return kExitTrue;
}

int cmd_generate(int max_vertices, std::int64_t matrix_bound) {
    std::vector<wlg::Wlg> graphs = wlg::generate_neat_simple(max_vertices, matrix_bound);
    wlg::Json out = wlg::Json::array();
    for (const wlg::Wlg& g : graphs) out.push_back(wlg::wlg_to_json(g));
    std::cout << wlg::serialize(out);
    return kExitTrue;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted Lyapunov graph calculus"};
    app.require_subcommand(1);

    std::string file, file2, vertex, out_dir, v0_override;
    std::string format = "table";
    bool apply_normalize = false;
    int orbits = 2;
    std::int64_t p_bound = 3;
    int max_vertices = 4;
    std::int64_t matrix_bound = 1;

    CLI::App* validate = app.add_subcommand("validate", "check the WLG invariants");
    validate->add_option("file", file)->required();
    validate->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

    CLI::App* split = app.add_subcommand("split", "graph split at one V1/V2/V3 vertex");
    split->add_option("file", file)->required();
    split->add_option("--vertex", vertex)->required();
    split->add_option("--out-dir", out_dir);

    CLI::App* decompose = app.add_subcommand("decompose", "simple WLG decomposition");
    decompose->add_option("file", file)->required();
    decompose->add_option("--out-dir", out_dir);

    CLI::App* neat = app.add_subcommand("neat", "neatness certificate");
    neat->add_option("file", file)->required();
    neat->add_flag("--normalize", apply_normalize, "apply coordinate normalization first");
    neat->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

    CLI::App* sign = app.add_subcommand("sign", "signature table of a neat simple WLG");
    sign->add_option("file", file)->required();
    sign->add_option("--v0", v0_override);

    CLI::App* realize = app.add_subcommand("realize", "3-sphere realizability test");
    realize->add_option("file", file)->required();

    CLI::App* link = app.add_subcommand("link", "indexed link of a neat realizable WLG");
    link->add_option("file", file)->required();
    link->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

    CLI::App* equiv = app.add_subcommand("equiv", "topological-equivalence criterion");
    equiv->add_option("file1", file)->required();
    equiv->add_option("file2", file2)->required();

    CLI::App* classify = app.add_subcommand("classify", "catalog of flows by orbit count");
    classify->add_option("--orbits", orbits)->required();
    classify->add_option("--p-bound", p_bound);
    classify->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

    CLI::App* export_dot = app.add_subcommand("export-dot", "Graphviz text");
    export_dot->add_option("file", file)->required();

    CLI::App* generate = app.add_subcommand("generate", "enumerate neat simple WLGs");
    generate->add_option("--max-vertices", max_vertices);
    generate->add_option("--matrix-bound", matrix_bound);

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(file, format);
        if (split->parsed()) return cmd_split(file, vertex, out_dir);
        if (decompose->parsed()) return cmd_decompose(file, out_dir);
        if (neat->parsed()) return cmd_neat(file, apply_normalize, format);
        if (sign->parsed()) return cmd_sign(file, v0_override);
        if (realize->parsed()) return cmd_realize(file);
        if (link->parsed()) return cmd_link(file, format);
        if (equiv->parsed()) return cmd_equiv(file, file2);
        if (classify->parsed()) return cmd_classify(orbits, p_bound, format);
        if (export_dot->parsed()) return cmd_export_dot(file);
        if (generate->parsed()) return cmd_generate(max_vertices, matrix_bound);
    } catch (const wlg::Error& err) {
        std::cerr << err.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
