#include "wlg/equivalence.hpp"

#include <algorithm>
#include <tuple>

namespace wlg {

bool gamma_member(const GluingMatrix& m) {
    return m.a == 1 && m.b == 0 && (m.d == 1 || m.d == -1);
}

namespace {

auto curve_key(const CurveClass& c) {
    return std::make_tuple(c.torus, c.owner_saddle, c.stable, c.essential, c.p, c.q,
                           c.orientation, c.handedness);
}

void sort_curves(std::vector<CurveClass>& curves) {
    std::sort(curves.begin(), curves.end(), [](const CurveClass& x, const CurveClass& y) {
        return curve_key(x) < curve_key(y);
    });
}

} // namespace

bool accompany_equivalent(const FlowPresentation& f1, const FlowPresentation& f2,
                          const VertexMap& witness) {
    if (!is_wlg_map(f1.graph, f2.graph, witness))
        throw Error(ErrorCode::InvalidWitness, "map is not a weight-preserving WLG equivalence");

    std::vector<CurveClass> relabeled = f1.accompany.curves;
    for (CurveClass& c : relabeled) {
        auto t = witness.find(c.torus);
        auto o = witness.find(c.owner_saddle);
        if (t == witness.end() || o == witness.end()) return false;
        c.torus = t->second;
        c.owner_saddle = o->second;
    }
    std::vector<CurveClass> target = f2.accompany.curves;
    sort_curves(relabeled);
    sort_curves(target);
    return relabeled == target;
}

std::optional<VertexMap> flows_equivalent(const FlowPresentation& f1,
                                          const FlowPresentation& f2) {
    for (const VertexMap& witness : wlg_isomorphisms(f1.graph, f2.graph))
        if (accompany_equivalent(f1, f2, witness)) return witness;
    return std::nullopt;
}

namespace {

// Walks from `saddle` across edge `e` and onwards until a leaf torus is
// reached. Stable curves travel backward (through in-edges), unstable ones
// forward; a branching continuation follows the smallest edge id.
std::string trace_to_leaf(const Wlg& g, const Edge* e, const std::string& saddle, bool stable) {
    std::string cur = other_endpoint(*e, saddle);
    std::set<std::string> visited{saddle};
    while (is_saddle(g.vertices.at(cur)) && !visited.count(cur)) {
        visited.insert(cur);
        auto continuations = stable ? in_edges(g, cur) : out_edges(g, cur);
        const Edge* next = nullptr;
        for (const Edge* cand : continuations)
            if (!next || cand->id < next->id) next = cand;
        if (!next) break;
        cur = other_endpoint(*next, cur);
    }
    return cur;
}

int choice(const std::map<std::string, int>& m, const std::string& key) {
    auto it = m.find(key);
    return it == m.end() ? +1 : it->second;
}

} // namespace

AccompanyGraph derive_accompany(const Wlg& g, const AccompanyChoices& choices) {
    AccompanyGraph acc;
    for (const auto& [v, label] : g.vertices)
        if (!is_saddle(label)) acc.tori.push_back(v);
    std::sort(acc.tori.begin(), acc.tori.end());

    auto essential = [&](const std::string& torus, const std::string& owner, bool stable,
                         std::int64_t p, std::int64_t q, int orientation) {
        CurveClass c;
        c.torus = torus;
        c.essential = true;
        c.p = p;
        c.q = q;
        c.orientation = orientation;
        c.owner_saddle = owner;
        c.stable = stable;
        acc.curves.push_back(c);
    };
    auto inessential = [&](const std::string& torus, const std::string& owner, bool stable,
                           int handedness) {
        CurveClass c;
        c.torus = torus;
        c.essential = false;
        c.p = 0;
        c.q = 0;
        c.orientation = +1;
        c.handedness = handedness;
        c.owner_saddle = owner;
        c.stable = stable;
        acc.curves.push_back(c);
    };

    for (const auto& [v, label] : g.vertices) {
        if (!is_saddle(label)) continue;
        int hand = choice(choices.handedness, v);
        int ori_s = choice(choices.orientation, v + "/s");
        int ori_u = choice(choices.orientation, v + "/u");
        auto ins = in_edges(g, v);
        auto outs = out_edges(g, v);

        switch (label) {
        case VertexLabel::V4:
            // all curves essential, parallel to the orbits, no freedom
            for (const Edge* e : ins) essential(trace_to_leaf(g, e, v, true), v, true, 1, 0, +1);
            for (const Edge* e : outs) essential(trace_to_leaf(g, e, v, false), v, false, 1, 0, +1);
            break;
        case VertexLabel::V5:
            for (const Edge* e : ins) essential(trace_to_leaf(g, e, v, true), v, true, 2, 1, +1);
            for (const Edge* e : outs) essential(trace_to_leaf(g, e, v, false), v, false, 2, 1, +1);
            break;
        case VertexLabel::V3: {
            // entrance side: core-parallel curve (free orientation) and an
            // inessential curve (free handedness); exit side mirrors it with
            // the handedness determined by the stable choice
            const Edge* ein = ins.front();
            const Edge* eout = outs.front();
            std::string tin = trace_to_leaf(g, ein, v, true);
            std::string tout = trace_to_leaf(g, eout, v, false);
            essential(tin, v, true, 1, 0, ori_s);
            inessential(tin, v, true, hand);
            essential(tout, v, false, 1, 0, ori_u);
            inessential(tout, v, false, hand);
            break;
        }
        case VertexLabel::V2: {
            const Germ& germ = g.germs.at(v);
            const Edge* red_in = find_edge(g, germ.red.in);
            const Edge* red_out = find_edge(g, germ.red.out);
            const Edge* green = find_edge(g, *germ.green_edge);
            bool green_in = green->to == v;
            std::string t_red_in = trace_to_leaf(g, red_in, v, true);
            std::string t_red_out = trace_to_leaf(g, red_out, v, false);
            std::string t_green = trace_to_leaf(g, green, v, green_in);
            if (green_in) {
                inessential(t_red_in, v, true, hand);
                essential(t_green, v, true, 1, 0, ori_s);
                inessential(t_red_out, v, false, hand);
                essential(t_red_out, v, false, 1, 0, ori_u);
            } else {
                inessential(t_red_in, v, true, hand);
                essential(t_red_in, v, true, 1, 0, ori_s);
                inessential(t_red_out, v, false, hand);
                essential(t_green, v, false, 1, 0, ori_u);
            }
            break;
        }
        case VertexLabel::V1: {
            const Germ& germ = g.germs.at(v);
            const Edge* red_in = find_edge(g, germ.red.in);
            const Edge* red_out = find_edge(g, germ.red.out);
            const Edge* green_in = find_edge(g, germ.green_pair->in);
            const Edge* green_out = find_edge(g, germ.green_pair->out);
            // the two entrance curves share one handedness; exits mirror it
            inessential(trace_to_leaf(g, red_in, v, true), v, true, hand);
            inessential(trace_to_leaf(g, green_in, v, true), v, true, hand);
            inessential(trace_to_leaf(g, red_out, v, false), v, false, hand);
            inessential(trace_to_leaf(g, green_out, v, false), v, false, hand);
            break;
        }
        default:
            break;
        }
    }
    sort_curves(acc.curves);
    return acc;
}

std::vector<AccompanyGraph> enumerate_accompany(const Wlg& g) {
    // collect the free slots in a fixed order
    std::vector<std::string> hand_slots, ori_slots;
    for (const auto& [v, label] : g.vertices) {
        if (label == VertexLabel::V1 || label == VertexLabel::V2 || label == VertexLabel::V3)
            hand_slots.push_back(v);
        if (label == VertexLabel::V2 || label == VertexLabel::V3) {
            ori_slots.push_back(v + "/s");
            ori_slots.push_back(v + "/u");
        }
    }

    std::vector<AccompanyGraph> out;
    std::size_t bits = hand_slots.size() + ori_slots.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << bits); ++mask) {
        AccompanyChoices choices;
        std::size_t bit = 0;
        for (const std::string& s : hand_slots)
            choices.handedness[s] = (mask >> bit++) & 1 ? -1 : +1;
        for (const std::string& s : ori_slots)
            choices.orientation[s] = (mask >> bit++) & 1 ? -1 : +1;
        out.push_back(derive_accompany(g, choices));
    }
    return out;
}

int count_presentations(const Wlg& g) {
    RealizabilityReport report = realizable_on_s3(g); // throws NotNeat on non-neat input
    if (!report.realizable)
        throw Error(ErrorCode::NotRealizable, report.diagnostics.empty()
                                                  ? "graph fails the realizability conditions"
                                                  : report.diagnostics.front());

    std::vector<AccompanyGraph> all = enumerate_accompany(g);
    std::vector<FlowPresentation> reps;
    int classes = 0;
    for (AccompanyGraph& acc : all) {
        FlowPresentation f{g, std::move(acc)};
        bool fresh = true;
        for (const FlowPresentation& rep : reps)
            if (flows_equivalent(rep, f)) {
                fresh = false;
                break;
            }
        if (fresh) {
            ++classes;
            reps.push_back(std::move(f));
        }
    }
    return classes;
}

} // namespace wlg
