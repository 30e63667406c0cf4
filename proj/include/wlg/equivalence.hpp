#pragma once

#include "wlg/link.hpp"

namespace wlg {

/// Isotopy class of one invariant-manifold curve on the boundary torus of
/// an attractor or repeller neighborhood. Essential curves carry a
/// primitive (p,q) class and an orientation sign; inessential curves carry
/// a handedness (+1 left, -1 right).
struct CurveClass {
    std::string torus;        // A/R vertex id owning the boundary torus
    bool essential = true;
    std::int64_t p = 1, q = 0; // essential only
    int orientation = +1;      // essential only
    int handedness = +1;       // inessential only
    std::string owner_saddle;
    bool stable = true;

    friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

struct AccompanyGraph {
    std::vector<std::string> tori; // A/R vertex ids
    std::vector<CurveClass> curves;

    friend bool operator==(const AccompanyGraph&, const AccompanyGraph&) = default;
};

struct FlowPresentation {
    Wlg graph;
    AccompanyGraph accompany;
};

/// Membership in the lower-triangular group generated by ((1,0),(p,1)) and
/// ((1,0),(q,-1)): first row (1,0), bottom-right entry +1 or -1.
bool gamma_member(const GluingMatrix& m);

/// Decides whether the accompany data of f1 maps onto that of f2 through
/// the given WLG witness, with identity boundary coordinates: curve records
/// must match exactly after relabeling tori and owners through the map.
bool accompany_equivalent(const FlowPresentation& f1, const FlowPresentation& f2,
                          const VertexMap& witness); // InvalidWitness

/// Searches every WLG-equivalence witness for one under which the accompany
/// graphs match. An absent result means the sufficient criterion failed,
/// not that the flows are topologically distinct.
std::optional<VertexMap> flows_equivalent(const FlowPresentation& f1,
                                          const FlowPresentation& f2);

/// Free combinatorial choices of an accompany graph over a fixed WLG:
/// one handedness sign per V1/V2/V3 saddle, one orientation sign per
/// essential curve owned by a V2/V3 saddle (stable and unstable slots).
struct AccompanyChoices {
    std::map<std::string, int> handedness;              // saddle id -> +-1
    std::map<std::string, int> orientation;             // "saddle/s" or "saddle/u" -> +-1
};

/// Deterministic curve skeleton of the accompany graph for the given
/// choices. Curves land on the leaf torus reached by tracing through the
/// tree; at a branching continuation the smallest edge id is followed.
AccompanyGraph derive_accompany(const Wlg& g, const AccompanyChoices& choices);

std::vector<AccompanyGraph> enumerate_accompany(const Wlg& g);

/// Number of equivalence classes among all accompany graphs compatible
/// with g, grouped by flows_equivalent.
int count_presentations(const Wlg& g); // NotNeat, NotRealizable

} // namespace wlg
