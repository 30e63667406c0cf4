#include "wlg/catalog.hpp"

#include <algorithm>
#include <numeric>

namespace wlg {

namespace {

// x, y with p*x + q*y = gcd(p, q)
std::pair<std::int64_t, std::int64_t> egcd(std::int64_t p, std::int64_t q) {
    if (q == 0) return {p >= 0 ? 1 : -1, 0};
    auto [x, y] = egcd(q, p % q);
    return {y, x - (p / q) * y};
}

// Second row completing ((p,q)) to determinant +1, adjusted so the matrix
// RotationMinus * inverse(B) avoids trace -2; that keeps the Hopf pair of
// the four-orbit representatives positive.
GluingMatrix complete_first_row(std::int64_t p, std::int64_t q) {
    auto [x, y] = egcd(p, q);
    std::int64_t s = x, r = -y; // p*s - q*r = 1
    for (std::int64_t step = 0; step <= 8; ++step) {
        for (std::int64_t n : {step, -step}) {
            GluingMatrix b{p, q, r + n * p, s + n * q};
            GluingMatrix abar = multiply(kRotationMinus, inverse(b));
            if (trace(abar) != -2) return b;
            if (step == 0) break;
        }
    }
    return GluingMatrix{p, q, r, s};
}

GluingMatrix unipotent(std::int64_t k, int sign) {
    return sign >= 0 ? GluingMatrix{1, 0, k, 1} : GluingMatrix{-1, 0, k, -1};
}

GluingMatrix v5_attractor(std::int64_t t, int sign) {
    GluingMatrix m{2 * t - 1, 2, t - 1, 1};
    return sign >= 0 ? m : negate(m);
}

GluingMatrix v5_repeller(std::int64_t t, int sign) {
    GluingMatrix m{1, -2, 1 - t, 2 * t - 1};
    return sign >= 0 ? m : negate(m);
}

} // namespace

Wlg make_hopf_graph(bool positive) {
    Wlg g;
    g.vertices["R"] = VertexLabel::R;
    g.vertices["A"] = VertexLabel::A;
    g.edges.push_back(Edge{"e", "R", "A", positive ? kRotationMinus : kRotationPlus});
    return g;
}

Wlg make_three_regular_graph() {
    Wlg g;
    g.vertices["R"] = VertexLabel::R;
    g.vertices["S"] = VertexLabel::V3;
    g.vertices["A"] = VertexLabel::A;
    g.edges.push_back(Edge{"er", "R", "S", kRotationMinus});
    g.edges.push_back(Edge{"ea", "S", "A", kRotationMinus});
    return g;
}

Wlg make_three_twisted_graph(int twisted_case, std::int64_t p) {
    Wlg g;
    g.vertices["R"] = VertexLabel::R;
    g.vertices["S"] = VertexLabel::V5;
    g.vertices["A"] = VertexLabel::A;
    GluingMatrix er = kIdentity, ea = kIdentity;
    switch (twisted_case) {
    case 1: ea = v5_attractor(p, +1); break;
    case 2: ea = v5_attractor(p, -1); break;
    case 3: er = v5_repeller(p, +1); break;
    case 4: er = v5_repeller(p, -1); break;
    default:
        throw Error(ErrorCode::UnsupportedCount, "twisted case must be 1..4");
    }
    g.edges.push_back(Edge{"er", "R", "S", er});
    g.edges.push_back(Edge{"ea", "S", "A", ea});
    return g;
}

Wlg make_four_a_graph(bool partner_is_attractor, std::int64_t p, std::int64_t q, int eps) {
    Wlg g;
    g.vertices["R1"] = VertexLabel::R;
    g.vertices["R2"] = VertexLabel::R;
    g.vertices["S"] = VertexLabel::V4;
    g.vertices["A"] = VertexLabel::A;
    GluingMatrix bbar = complete_first_row(p, q);
    GluingMatrix abar = multiply(kRotationMinus, inverse(bbar));
    if (partner_is_attractor) {
        // Hopf pair R1 and A; R2 is the plain cable leaf.
        g.edges.push_back(Edge{"h1", "R1", "S", abar});
        g.edges.push_back(Edge{"f", "R2", "S", eps >= 0 ? kIdentity : kMinusIdentity});
        g.edges.push_back(Edge{"h2", "S", "A", bbar});
    } else {
        // Hopf pair R1 and R2; A is the plain cable leaf.
        g.edges.push_back(Edge{"h1", "R1", "S", inverse(bbar)});
        g.edges.push_back(Edge{"h2", "R2", "S", abar});
        g.edges.push_back(Edge{"f", "S", "A", eps >= 0 ? kIdentity : kMinusIdentity});
    }
    return g;
}

Wlg make_four_b_graph() {
    Wlg g;
    g.vertices["R1"] = VertexLabel::R;
    g.vertices["R2"] = VertexLabel::R;
    g.vertices["S"] = VertexLabel::V2;
    g.vertices["A"] = VertexLabel::A;
    g.edges.push_back(Edge{"er1", "R1", "S", kRotationMinus});
    g.edges.push_back(Edge{"er2", "R2", "S", kRotationMinus});
    g.edges.push_back(Edge{"ea", "S", "A", kIdentity});
    Germ germ;
    germ.red = GermPair{"er1", "ea"};
    germ.green_edge = "er2";
    g.germs["S"] = germ;
    return g;
}

namespace {

FlowPresentation present(const Wlg& g, const AccompanyChoices& choices) {
    return FlowPresentation{g, derive_accompany(g, choices)};
}

AccompanyChoices tau_choices(const std::string& saddle, int i, int j, int k) {
    AccompanyChoices c;
    c.orientation[saddle + "/s"] = i;
    c.orientation[saddle + "/u"] = j;
    c.handedness[saddle] = k;
    return c;
}

void push_entry(std::vector<ClassificationEntry>& out, int orbits, std::string family,
                std::map<std::string, std::int64_t> params, const Wlg& g,
                const AccompanyChoices& choices) {
    out.push_back(ClassificationEntry{orbits, std::move(family), std::move(params),
                                      present(g, choices)});
}

} // namespace

std::vector<ClassificationEntry> classify(int orbit_count, std::int64_t p_bound) {
    if (orbit_count < 2 || orbit_count > 4)
        throw Error(ErrorCode::UnsupportedCount,
                    "classification covers 2, 3 and 4 periodic orbits");
    if (p_bound < 1) p_bound = 1;

    std::vector<ClassificationEntry> out;
    const int signs[2] = {+1, -1};

    if (orbit_count == 2) {
        push_entry(out, 2, "two-orbit", {}, make_hopf_graph(true), {});
        return out;
    }

    if (orbit_count == 3) {
        Wlg regular = make_three_regular_graph();
        for (int i : signs)
            for (int j : signs)
                for (int k : signs)
                    push_entry(out, 3, "three-regular", {{"i", i}, {"j", j}, {"k", k}}, regular,
                               tau_choices("S", i, j, k));
        for (int c = 1; c <= 4; ++c)
            for (std::int64_t p = -p_bound; p <= p_bound; ++p) {
                if ((c == 3 || c == 4) && (p == 0 || p == 1)) continue;
                push_entry(out, 3, "three-twisted", {{"case", c}, {"p", p}},
                           make_three_twisted_graph(c, p), {});
            }
        return out;
    }

    // four periodic orbits
    for (int i : signs)
        for (int j : signs)
            for (int k : signs)
                push_entry(out, 4, "four-b", {{"i", i}, {"j", j}, {"k", k}}, make_four_b_graph(),
                           tau_choices("S", i, j, k));

    // case (a): Hopf pair R1+A over primitive (p,q), p >= 1, q != 0; the
    // first-row pair (1,0) reads as unipotent and is excluded.
    for (std::int64_t p = 1; p <= p_bound; ++p)
        for (std::int64_t q = -p_bound; q <= p_bound; ++q) {
            if (q == 0 || std::gcd(p, q < 0 ? -q : q) != 1) continue;
            for (int eps : signs)
                push_entry(out, 4, "four-a",
                           {{"partner_is_attractor", 1}, {"p", p}, {"q", q}, {"eps", eps}},
                           make_four_a_graph(true, p, q, eps), {});
        }
    // case (a) with Hopf pair R1+R2: |p| and |q| at least 2, and the (p,q)
    // <-> (q,p) identification keeps the representative with p <= q.
    for (std::int64_t p = 2; p <= p_bound; ++p)
        for (std::int64_t q = -p_bound; q <= p_bound; ++q) {
            if (q > -2 && q < 2) continue;
            if (std::gcd(p, q < 0 ? -q : q) != 1) continue;
            if (q >= 2 && q < p) continue; // swapped representative already listed
            for (int eps : signs)
                push_entry(out, 4, "four-a",
                           {{"partner_is_attractor", 0}, {"p", p}, {"q", q}, {"eps", eps}},
                           make_four_a_graph(false, p, q, eps), {});
        }
    return out;
}

namespace {

// Cheap invariant to bucket candidates before the isomorphism check.
std::string iso_bucket_key(const Wlg& g) {
    std::vector<std::string> parts;
    for (const auto& [v, label] : g.vertices) {
        (void)v;
        parts.push_back(vertex_label_name(label));
    }
    std::sort(parts.begin(), parts.end());
    std::string key;
    for (const std::string& s : parts) key += s + ";";
    std::vector<std::string> edges;
    for (const Edge& e : g.edges) {
        const char* lf = vertex_label_name(g.vertices.at(e.from));
        const char* lt = vertex_label_name(g.vertices.at(e.to));
        edges.push_back(std::string(lf) + ">" + lt + ":" + std::to_string(e.matrix.a) + "," +
                        std::to_string(e.matrix.b) + "," + std::to_string(e.matrix.c) + "," +
                        std::to_string(e.matrix.d));
    }
    std::sort(edges.begin(), edges.end());
    for (const std::string& s : edges) key += s + "|";
    return key;
}

void emit_if_neat(std::vector<Wlg>& out, std::map<std::string, std::vector<std::size_t>>& buckets,
                  const Wlg& g) {
    if (!validate(g).ok()) return;
    if (!is_neat_simple(g).ok()) return;
    std::string key = iso_bucket_key(g);
    for (std::size_t idx : buckets[key])
        if (wlg_equivalent(out[idx], g)) return;
    buckets[key].push_back(out.size());
    out.push_back(g);
}

// All determinant +-1 matrices with entries bounded by `bound` that do not
// read as unipotent; candidates for an exceptional edge.
std::vector<GluingMatrix> exceptional_pool(std::int64_t bound) {
    std::vector<GluingMatrix> pool;
    for (std::int64_t a = -bound; a <= bound; ++a)
        for (std::int64_t b = -bound; b <= bound; ++b)
            for (std::int64_t c = -bound; c <= bound; ++c)
                for (std::int64_t d = -bound; d <= bound; ++d) {
                    GluingMatrix m{a, b, c, d};
                    if (!is_unimodular(m)) continue;
                    if (in_unipotent_family(m)) continue;
                    pool.push_back(m);
                }
    return pool;
}

std::vector<GluingMatrix> unipotent_pool(std::int64_t bound) {
    std::vector<GluingMatrix> pool;
    for (std::int64_t k = -bound; k <= bound; ++k) {
        pool.push_back(unipotent(k, +1));
        pool.push_back(unipotent(k, -1));
    }
    return pool;
}

// Saddle skeletons: a path of saddle vertices s0..s{n-1} (trees on <= 3
// saddles are paths except the 3-star, which a V4 cannot center once its
// third slot is a leaf... a degree-3 center has no leaf slot, still legal).
struct Skeleton {
    std::vector<VertexLabel> saddles;           // labels, size n
    std::vector<std::pair<int, int>> internal;  // saddle tree edges (indices)
};

std::vector<Skeleton> saddle_skeletons(int max_saddles) {
    std::vector<Skeleton> out;
    for (int n = 1; n <= max_saddles; ++n) {
        std::vector<std::vector<std::pair<int, int>>> trees;
        if (n == 1) trees.push_back({});
        if (n == 2) trees.push_back({{0, 1}});
        if (n == 3) {
            trees.push_back({{0, 1}, {1, 2}}); // path
            trees.push_back({{0, 1}, {0, 2}}); // star at 0
        }
        for (auto& tree : trees) {
            // V5 may sit at any position of internal degree <= 2, or nowhere.
            for (int v5_at = -1; v5_at < n; ++v5_at) {
                std::vector<int> internal_degree(n, 0);
                for (auto& [x, y] : tree) {
                    ++internal_degree[x];
                    ++internal_degree[y];
                }
                Skeleton s;
                s.internal = tree;
                bool ok = true;
                for (int i = 0; i < n; ++i) {
                    VertexLabel label = i == v5_at ? VertexLabel::V5 : VertexLabel::V4;
                    int capacity = label == VertexLabel::V5 ? 2 : 3;
                    if (internal_degree[i] > capacity) ok = false;
                    s.saddles.push_back(label);
                }
                if (ok) out.push_back(std::move(s));
            }
        }
    }
    return out;
}

} // namespace

std::vector<Wlg> generate_neat_simple(int max_vertices, std::int64_t matrix_bound) {
    std::vector<Wlg> out;
    std::map<std::string, std::vector<std::size_t>> buckets;
    if (max_vertices < 2) return out;

    emit_if_neat(out, buckets, make_hopf_graph(true));
    emit_if_neat(out, buckets, make_hopf_graph(false));

    std::vector<GluingMatrix> unipotents = unipotent_pool(matrix_bound);
    std::vector<GluingMatrix> exceptionals = exceptional_pool(matrix_bound);

    int max_saddles = std::max(0, (max_vertices - 1) / 2);
    for (const Skeleton& skel : saddle_skeletons(std::min(max_saddles, 3))) {
        int n = static_cast<int>(skel.saddles.size());
        std::vector<int> internal_degree(n, 0);
        for (auto& [x, y] : skel.internal) {
            ++internal_degree[x];
            ++internal_degree[y];
        }
        std::vector<int> leaf_slots(n);
        int total_vertices = n;
        for (int i = 0; i < n; ++i) {
            int capacity = skel.saddles[i] == VertexLabel::V5 ? 2 : 3;
            leaf_slots[i] = capacity - internal_degree[i];
            total_vertices += leaf_slots[i];
        }
        if (total_vertices > max_vertices) continue;

        // Enumerate orientations of internal edges and of each leaf slot,
        // then matrix assignments. Assignments are represented as digit
        // vectors over the relevant pools.
        int internal_count = static_cast<int>(skel.internal.size());
        int leaf_count = total_vertices - n;
        for (int imask = 0; imask < (1 << internal_count); ++imask)
            for (int lmask = 0; lmask < (1 << leaf_count); ++lmask) {
                Wlg base;
                std::vector<std::string> saddle_ids(n);
                for (int i = 0; i < n; ++i) {
                    saddle_ids[i] = "s" + std::to_string(i);
                    base.vertices[saddle_ids[i]] = skel.saddles[i];
                }
                std::vector<std::pair<std::string, bool>> leaf_edges; // (edge id, into saddle)
                int leaf_idx = 0;
                bool degrees_ok = true;
                std::vector<int> in_deg(n, 0), out_deg(n, 0);
                for (int t = 0; t < internal_count; ++t) {
                    auto [x, y] = skel.internal[t];
                    bool forward = (imask >> t) & 1;
                    int from = forward ? x : y, to = forward ? y : x;
                    ++out_deg[from];
                    ++in_deg[to];
                    base.edges.push_back(Edge{"i" + std::to_string(t), saddle_ids[from],
                                              saddle_ids[to], kIdentity});
                }
                for (int i = 0; i < n; ++i)
                    for (int sslot = 0; sslot < leaf_slots[i]; ++sslot) {
                        bool into = (lmask >> leaf_idx) & 1;
                        std::string leaf = "l" + std::to_string(leaf_idx);
                        std::string eid = "e" + std::to_string(leaf_idx);
                        if (into) {
                            base.vertices[leaf] = VertexLabel::R;
                            base.edges.push_back(Edge{eid, leaf, saddle_ids[i], kIdentity});
                            ++in_deg[i];
                        } else {
                            base.vertices[leaf] = VertexLabel::A;
                            base.edges.push_back(Edge{eid, saddle_ids[i], leaf, kIdentity});
                            ++out_deg[i];
                        }
                        leaf_edges.emplace_back(eid, into);
                        ++leaf_idx;
                    }
                for (int i = 0; i < n; ++i) {
                    bool v5 = skel.saddles[i] == VertexLabel::V5;
                    if (v5 && !(in_deg[i] == 1 && out_deg[i] == 1)) degrees_ok = false;
                    if (!v5 && !((in_deg[i] == 1 && out_deg[i] == 2) ||
                                 (in_deg[i] == 2 && out_deg[i] == 1)))
                        degrees_ok = false;
                }
                if (!degrees_ok) continue;

                bool has_v5 = std::count(skel.saddles.begin(), skel.saddles.end(),
                                         VertexLabel::V5) > 0;
                int exceptional_needed = has_v5 ? 1 : 2;

                // internal matrices: each +-I
                for (int signs_mask = 0; signs_mask < (1 << internal_count); ++signs_mask) {
                    Wlg with_internal = base;
                    for (int t = 0; t < internal_count; ++t)
                        with_internal.edges[t].matrix =
                            (signs_mask >> t) & 1 ? kMinusIdentity : kIdentity;

                    // choose exceptional leaf edges; for the two-edge case
                    // the quarter-turn condition determines the second
                    // matrix from the first, so only one pool is scanned
                    std::vector<std::vector<int>> picks;
                    if (exceptional_needed == 1) {
                        for (int li = 0; li < leaf_count; ++li) picks.push_back({li});
                    } else {
                        for (int x = 0; x < leaf_count; ++x)
                            for (int y = x + 1; y < leaf_count; ++y) picks.push_back({x, y});
                    }
                    for (const std::vector<int>& pick : picks) {
                        std::vector<std::pair<int, GluingMatrix>> assignments; // per candidate
                        std::vector<std::vector<std::pair<int, GluingMatrix>>> variants;
                        if (exceptional_needed == 1) {
                            for (const GluingMatrix& m : exceptionals)
                                variants.push_back({{pick[0], m}});
                        } else {
                            // leaf endpoints and the non-v0 side
                            auto leaf_vertex = [&](int li) {
                                const Edge* e = find_edge(with_internal, leaf_edges[li].first);
                                return leaf_edges[li].second ? e->from : e->to;
                            };
                            std::string lx = leaf_vertex(pick[0]), ly = leaf_vertex(pick[1]);
                            bool x_is_v0;
                            bool x_is_a = with_internal.vertices.at(lx) == VertexLabel::A;
                            bool y_is_a = with_internal.vertices.at(ly) == VertexLabel::A;
                            if (x_is_a != y_is_a)
                                x_is_v0 = x_is_a;
                            else
                                x_is_v0 = lx < ly;
                            int other = x_is_v0 ? pick[1] : pick[0];
                            int at_v0 = x_is_v0 ? pick[0] : pick[1];
                            std::string v_other = x_is_v0 ? ly : lx;
                            std::string v_zero = x_is_v0 ? lx : ly;
                            auto path = tree_path(with_internal, v_other, v_zero);
                            bool agrees_other = path.front().second;
                            bool agrees_v0 = path.back().second;
                            for (const GluingMatrix& stored : exceptionals) {
                                GluingMatrix bar_a = path_matrix(stored, agrees_other);
                                for (const GluingMatrix& rot : {kRotationPlus, kRotationMinus}) {
                                    GluingMatrix bar_b = multiply(inverse(bar_a), rot);
                                    GluingMatrix stored_b = agrees_v0 ? bar_b : inverse(bar_b);
                                    auto small = [&](std::int64_t v) {
                                        return v >= -matrix_bound && v <= matrix_bound;
                                    };
                                    if (!small(stored_b.a) || !small(stored_b.b) ||
                                        !small(stored_b.c) || !small(stored_b.d))
                                        continue;
                                    if (in_unipotent_family(stored_b)) continue;
                                    variants.push_back({{other, stored}, {at_v0, stored_b}});
                                }
                            }
                        }

                        std::vector<int> plain;
                        for (int li = 0; li < leaf_count; ++li)
                            if (std::find(pick.begin(), pick.end(), li) == pick.end())
                                plain.push_back(li);
                        std::vector<std::size_t> digits(plain.size(), 0);
                        while (true) {
                            Wlg candidate = with_internal;
                            auto set_matrix = [&](int li, const GluingMatrix& m) {
                                for (Edge& e : candidate.edges)
                                    if (e.id == leaf_edges[li].first) e.matrix = m;
                            };
                            for (std::size_t di = 0; di < plain.size(); ++di)
                                set_matrix(plain[di], unipotents[digits[di]]);
                            for (const auto& variant : variants) {
                                for (const auto& [li, m] : variant) set_matrix(li, m);
                                emit_if_neat(out, buckets, candidate);
                            }
                            std::size_t pos = 0;
                            while (pos < digits.size()) {
                                if (++digits[pos] < unipotents.size()) break;
                                digits[pos++] = 0;
                            }
                            if (pos == digits.size()) break;
                        }
                    }
                }
            }
    }
    return out;
}

} // namespace wlg
