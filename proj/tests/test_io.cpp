#include <doctest.h>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "support/builders.hpp"
#include "wlg/io.hpp"

using namespace wlg;
using namespace wlgtest;

namespace {

std::string fixture_path(const std::string& name) {
    return std::string(WLG_FIXTURE_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("graph fixtures round-trip byte-stable") {
    for (const char* name : {"g1.json", "g2.json", "hopf_pos.json", "hopf_neg.json",
                             "chain_v3.json", "four_b.json", "two_v3.json"}) {
        std::string text = read_file(fixture_path(name));
        Wlg g = wlg_from_json(parse_json_text(text, name));
        CHECK(serialize(wlg_to_json(g)) == text);
    }
}

TEST_CASE("presentation fixtures round-trip byte-stable") {
    for (const char* name : {"three_regular_ppp.json", "three_regular_ppm.json",
                             "hopf_pos_presentation.json", "hopf_neg_presentation.json"}) {
        std::string text = read_file(fixture_path(name));
        FlowPresentation f = presentation_from_json(parse_json_text(text, name));
        CHECK(serialize(presentation_to_json(f)) == text);
    }
}

TEST_CASE("serialization is deterministic") {
    Wlg g = example_g1();
    CHECK(serialize(wlg_to_json(g)) == serialize(wlg_to_json(g)));
    Json j = link_to_json(link_of_wlg(chain_v3()));
    CHECK(serialize(j) == serialize(link_to_json(link_of_wlg(chain_v3()))));
}

TEST_CASE("germ serialization round-trips") {
    Wlg g = v1_star(kIdentity, kIdentity, GluingMatrix{1, 0, 2, 1}, kIdentity);
    Wlg back = wlg_from_json(wlg_to_json(g));
    CHECK(back.germs.at("v") == g.germs.at("v"));
    CHECK(wlg_to_json(back) == wlg_to_json(g)); // edges reload in sorted order

    Wlg f = make_four_b_graph();
    Wlg fb = wlg_from_json(wlg_to_json(f));
    CHECK(fb.germs.at("S").green_edge == f.germs.at("S").green_edge);
}

TEST_CASE("parse errors carry the origin and position") {
    try {
        parse_json_text("{\"vertices\": [oops", "bad.json");
        FAIL("expected a parse error");
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::ParseError);
        CHECK(std::string(err.what()).find("bad.json") != std::string::npos);
    }
}

TEST_CASE("schema errors name the offending field") {
    Json missing_label = Json::parse(R"({"vertices":[{"id":"x"}],"edges":[]})");
    try {
        wlg_from_json(missing_label);
        FAIL("expected a schema error");
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::SchemaError);
        CHECK(std::string(err.what()).find("label") != std::string::npos);
    }

    Json bad_matrix = Json::parse(
        R"({"vertices":[{"id":"R","label":"R"},{"id":"A","label":"A"}],
            "edges":[{"id":"e","from":"R","to":"A","matrix":[1,0,0]}]})");
    CHECK_THROWS_AS(wlg_from_json(bad_matrix), Error);

    Json bad_label = Json::parse(R"({"vertices":[{"id":"x","label":"V9"}],"edges":[]})");
    CHECK_THROWS_AS(wlg_from_json(bad_label), Error);
}

TEST_CASE("presentation cross-references are validated") {
    Wlg g = make_three_regular_graph();
    FlowPresentation f{g, derive_accompany(g, {})};
    Json j = presentation_to_json(f);
    j["accompany"]["curves"][0]["torus"] = "S"; // a saddle, not a torus
    CHECK_THROWS_AS(presentation_from_json(j), Error);
    Json j2 = presentation_to_json(f);
    j2["accompany"]["curves"][0]["owner"]["saddle"] = "R";
    CHECK_THROWS_AS(presentation_from_json(j2), Error);
}

TEST_CASE("dot export lists every vertex and edge deterministically") {
    Wlg g = example_g2();
    std::string dot = to_dot(g);
    CHECK(dot == to_dot(g));
    CHECK(dot.find("digraph") != std::string::npos);
    for (const auto& [v, label] : g.vertices) {
        (void)label;
        CHECK(dot.find("\"" + v + "\"") != std::string::npos);
    }
    CHECK(dot.find("[[5,2],[2,1]]") != std::string::npos);
    CHECK(dot.find("doublecircle") != std::string::npos); // the V5 vertex

    std::string with_germ = to_dot(make_four_b_graph());
    CHECK(with_germ.find("color=red") != std::string::npos);
    CHECK(with_germ.find("color=green") != std::string::npos);
}

TEST_CASE("certificate and report serialization") {
    Wlg g = example_g2();
    Json cert = certificate_to_json(*is_neat_simple(g).certificate);
    CHECK(cert["kind"] == "with-v5");
    CHECK(cert["t"] == 3);
    Json report = report_to_json(validate(g));
    CHECK(report["valid"] == true);
}
