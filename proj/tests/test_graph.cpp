#include <doctest.h>
#include <random>

#include "support/builders.hpp"
#include "support/random_graphs.hpp"

using namespace wlg;
using namespace wlgtest;

TEST_CASE("validate accepts the two-vertex Hopf graph") {
    // degree table: R in 0 / out 1, A in 1 / out 0, one edge, det -1... +1
    Wlg g = make_hopf_graph(false);
    CHECK(validate(g).ok());
}

TEST_CASE("validate rejects an R vertex of out-degree 2") {
    Wlg g;
    g.vertices["R"] = VertexLabel::R;
    g.vertices["A1"] = VertexLabel::A;
    g.vertices["A2"] = VertexLabel::A;
    g.edges.push_back(Edge{"e1", "R", "A1", kIdentity});
    g.edges.push_back(Edge{"e2", "R", "A2", kIdentity});
    ValidationReport report = validate(g);
    REQUIRE(!report.ok());
    bool found = false;
    for (const Finding& f : report.findings)
        if (f.code == "degree" && f.subject == "R") found = true;
    CHECK(found);
}

TEST_CASE("validate rejects a V1 vertex of in-degree 3") {
    Wlg g = v1_star(kIdentity, kIdentity, kIdentity, kIdentity);
    // rewire A1 into another repeller pointing at v
    g.vertices.erase("A1");
    g.vertices["R3"] = VertexLabel::R;
    for (Edge& e : g.edges)
        if (e.id == "ro") e = Edge{"ro", "R3", "v", kIdentity};
    ValidationReport report = validate(g);
    REQUIRE(!report.ok());
    bool found = false;
    for (const Finding& f : report.findings)
        if (f.code == "degree" && f.subject == "v") found = true;
    CHECK(found);
}

TEST_CASE("validate reports non-unimodular matrices and germ defects") {
    Wlg g = make_hopf_graph(true);
    g.edges[0].matrix = GluingMatrix{2, 0, 0, 1};
    CHECK(!validate(g).ok());

    Wlg star = v1_star(kIdentity, kIdentity, kIdentity, kIdentity);
    star.germs["v"].green_pair->in = "ro"; // outgoing edge in an 'in' slot
    CHECK(!validate(star).ok());
    star.germs.erase("v");
    CHECK(!validate(star).ok()); // germ missing
}

TEST_CASE("is_simple") {
    CHECK(is_simple(example_g1()));
    CHECK(!is_simple(chain_v3()));
    CHECK(is_simple(make_hopf_graph(true)));
}

TEST_CASE("wlg_equivalent is reflexive with the identity map") {
    Wlg g = example_g1();
    auto map = wlg_equivalent(g, g);
    REQUIRE(map.has_value());
    for (const auto& [v, w] : *map) CHECK(v == w);
}

TEST_CASE("wlg_equivalent detects a single perturbed weight") {
    Wlg g = example_g1();
    Wlg h = g;
    for (Edge& e : h.edges)
        if (e.id == "h2") e.matrix.a += 1;
    CHECK(!wlg_equivalent(g, h).has_value());
}

TEST_CASE("interchangeable leaves produce the swap isomorphism") {
    // V4 star with two repeller leaves carrying the same matrix
    Wlg g;
    g.vertices["R1"] = VertexLabel::R;
    g.vertices["R2"] = VertexLabel::R;
    g.vertices["S"] = VertexLabel::V4;
    g.vertices["A"] = VertexLabel::A;
    g.edges.push_back(Edge{"e1", "R1", "S", GluingMatrix{1, 0, 2, 1}});
    g.edges.push_back(Edge{"e2", "R2", "S", GluingMatrix{1, 0, 2, 1}});
    g.edges.push_back(Edge{"e3", "S", "A", kRotationMinus});
    auto all = wlg_isomorphisms(g, g);
    bool swap_found = false;
    for (const VertexMap& m : all)
        if (m.at("R1") == "R2" && m.at("R2") == "R1" && m.at("A") == "A") swap_found = true;
    CHECK(swap_found);
    CHECK(all.size() == 2);
}

TEST_CASE("germ colors are preserved by equivalence") {
    GluingMatrix m1{1, 0, 1, 1}, m2{1, 0, 2, 1};
    Wlg g = v1_star(m1, kIdentity, m2, kIdentity);
    Wlg h = v1_star(m2, kIdentity, m1, kIdentity); // red and green exchanged
    CHECK(!wlg_equivalent(g, h).has_value());
    Wlg same = v1_star(m1, kIdentity, m2, kIdentity);
    CHECK(wlg_equivalent(g, same).has_value());
}

TEST_CASE("matrix comparison mode") {
    Wlg g = make_hopf_graph(true);
    Wlg h = g;
    h.edges[0].matrix = negate(h.edges[0].matrix);
    CHECK(!wlg_equivalent(g, h).has_value());
    CHECK(wlg_equivalent(g, h, MatrixCompare::UpToSign).has_value());
}

TEST_CASE("equivalence maps compose") {
    std::mt19937 rng(7);
    for (int i = 0; i < 40; ++i) {
        Wlg g1 = random_tree_wlg(rng, std::uniform_int_distribution<int>(0, 2)(rng));
        REQUIRE(validate(g1).ok());
        Wlg g2 = rename_with_prefix(g1, "x.");
        Wlg g3 = rename_with_prefix(g1, "y.");
        auto m12 = wlg_equivalent(g1, g2);
        auto m23 = wlg_equivalent(g2, g3);
        REQUIRE(m12.has_value());
        REQUIRE(m23.has_value());
        // composite must itself be a witness
        VertexMap m13;
        for (const auto& [v, w] : *m12) m13[v] = m23->at(w);
        CHECK(is_wlg_map(g1, g3, m13));
        // symmetry
        CHECK(wlg_equivalent(g2, g1).has_value());
    }
}

TEST_CASE("degree bookkeeping on random graphs") {
    std::mt19937 rng(11);
    for (int i = 0; i < 60; ++i) {
        Wlg g = random_tree_wlg(rng, std::uniform_int_distribution<int>(0, 3)(rng));
        REQUIRE(validate(g).ok());
        long net = 0;
        std::size_t r_sourced = 0, r_count = 0;
        for (const auto& [v, label] : g.vertices) {
            net += static_cast<long>(out_edges(g, v).size()) -
                   static_cast<long>(in_edges(g, v).size());
            if (label == VertexLabel::R) {
                ++r_count;
                r_sourced += out_edges(g, v).size();
            }
        }
        CHECK(net == 0);
        CHECK(r_sourced == r_count);
    }
}

TEST_CASE("isolated inner vertex on a star") {
    Wlg g;
    g.vertices["R1"] = VertexLabel::R;
    g.vertices["R2"] = VertexLabel::R;
    g.vertices["S"] = VertexLabel::V4;
    g.vertices["A"] = VertexLabel::A;
    g.edges.push_back(Edge{"e1", "R1", "S", kIdentity});
    g.edges.push_back(Edge{"e2", "R2", "S", kIdentity});
    g.edges.push_back(Edge{"e3", "S", "A", kRotationMinus});
    auto found = find_isolated_inner_vertex(g);
    REQUIRE(found.has_value());
    CHECK(found->first == "S");
    // oracle: the definition, checked by enumeration
    std::size_t leaf_edges = 0;
    for (const Edge* e : incident_edges(g, found->first))
        if (degree(g, other_endpoint(*e, found->first)) == 1) ++leaf_edges;
    CHECK(leaf_edges >= degree(g, found->first) - 1);
}

TEST_CASE("two-vertex tree has no inner vertex") {
    CHECK(!find_isolated_inner_vertex(make_hopf_graph(true)).has_value());
}

TEST_CASE("maximal-path endpoint neighbor is returned on a path graph") {
    Wlg g;
    g.vertices["n0"] = VertexLabel::R;
    g.vertices["n1"] = VertexLabel::V5;
    g.vertices["n2"] = VertexLabel::V5;
    g.vertices["n3"] = VertexLabel::V5;
    g.vertices["n4"] = VertexLabel::A;
    for (int i = 0; i < 4; ++i)
        g.edges.push_back(Edge{"e" + std::to_string(i), "n" + std::to_string(i),
                               "n" + std::to_string(i + 1), kIdentity});
    REQUIRE(validate(g).ok());
    auto found = find_isolated_inner_vertex(g);
    REQUIRE(found.has_value());
    // the maximal path n0..n4 starts at n0; its second vertex qualifies
    CHECK(found->first == "n1");
    CHECK(found->second == "e1");
}

TEST_CASE("inner vertex search requires a tree") {
    Wlg g;
    g.vertices["R"] = VertexLabel::R;
    g.vertices["A"] = VertexLabel::A;
    g.vertices["S1"] = VertexLabel::V4;
    g.vertices["S2"] = VertexLabel::V4;
    g.edges.push_back(Edge{"e1", "R", "S1", kIdentity});
    g.edges.push_back(Edge{"p1", "S1", "S2", kIdentity});
    g.edges.push_back(Edge{"p2", "S1", "S2", kMinusIdentity});
    g.edges.push_back(Edge{"e2", "S2", "A", kIdentity});
    REQUIRE(validate(g).ok()); // parallel edges make an unoriented cycle only
    CHECK_THROWS_AS(find_isolated_inner_vertex(g), Error);
}

TEST_CASE("every tree with at least three vertices has an inner vertex") {
    std::mt19937 rng(23);
    for (int i = 0; i < 100; ++i) {
        Wlg g = random_tree_wlg(rng, std::uniform_int_distribution<int>(0, 3)(rng));
        if (g.vertices.size() < 3) continue;
        auto found = find_isolated_inner_vertex(g);
        REQUIRE(found.has_value());
        std::size_t leaf_edges = 0;
        for (const Edge* e : incident_edges(g, found->first))
            if (degree(g, other_endpoint(*e, found->first)) == 1) ++leaf_edges;
        CHECK(leaf_edges >= degree(g, found->first) - 1);
        CHECK(degree(g, found->first) >= 2);
    }
}

TEST_CASE("parallel edges compare as multisets") {
    auto two_v4 = [](const GluingMatrix& m1, const GluingMatrix& m2) {
        Wlg g;
        g.vertices["R"] = VertexLabel::R;
        g.vertices["A"] = VertexLabel::A;
        g.vertices["S1"] = VertexLabel::V4;
        g.vertices["S2"] = VertexLabel::V4;
        g.edges.push_back(Edge{"e1", "R", "S1", kIdentity});
        g.edges.push_back(Edge{"p1", "S1", "S2", m1});
        g.edges.push_back(Edge{"p2", "S1", "S2", m2});
        g.edges.push_back(Edge{"e2", "S2", "A", kIdentity});
        return g;
    };
    Wlg both_identity = two_v4(kIdentity, kIdentity);
    Wlg mixed = two_v4(kIdentity, kMinusIdentity);
    REQUIRE(validate(both_identity).ok());
    REQUIRE(validate(mixed).ok());
    CHECK(!wlg_equivalent(both_identity, mixed).has_value());
    CHECK(wlg_equivalent(mixed, two_v4(kMinusIdentity, kIdentity)).has_value());
}

TEST_CASE("backtracking search agrees with the exhaustive permutation oracle") {
    std::mt19937 rng(314);
    for (int trial = 0; trial < 30; ++trial) {
        Wlg g1 = random_tree_wlg(rng, std::uniform_int_distribution<int>(0, 2)(rng));
        if (g1.vertices.size() > 7) continue;
        Wlg g2 = rename_with_prefix(g1, "q.");
        if (trial % 3 == 0 && !g2.edges.empty())
            g2.edges[trial % g2.edges.size()].matrix.c += 1; // may break det or weights

        // oracle: try every bijection respecting the sorted vertex lists
        std::vector<std::string> v1, v2;
        for (const auto& [v, l] : g1.vertices) {
            (void)l;
            v1.push_back(v);
        }
        for (const auto& [v, l] : g2.vertices) {
            (void)l;
            v2.push_back(v);
        }
        bool oracle = false;
        std::sort(v2.begin(), v2.end());
        do {
            VertexMap map;
            for (std::size_t i = 0; i < v1.size(); ++i) map[v1[i]] = v2[i];
            if (is_wlg_map(g1, g2, map)) {
                oracle = true;
                break;
            }
        } while (std::next_permutation(v2.begin(), v2.end()));

        CHECK(wlg_equivalent(g1, g2).has_value() == oracle);
    }
}
