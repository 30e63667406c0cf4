#pragma once

#include <memory>

#include "wlg/graph.hpp"

namespace wlg {

enum class SplitKind { I, II, III };
const char* split_kind_name(SplitKind kind);

/// Result of one graph split. `g1` holds the fused red edge (splits I/II)
/// or the component upstream of the removed V3 vertex (split III).
/// Fresh cap leaves introduced by the surgery are listed per side.
struct SplitResult {
    Wlg g1, g2;
    std::vector<std::string> fresh_g1, fresh_g2;     // fresh leaf vertex ids
    std::vector<std::string> specials_g1, specials_g2;
};

SplitResult graph_split_I(const Wlg& g, const std::string& v);   // WrongLabel, NotATree
SplitResult graph_split_II(const Wlg& g, const std::string& v);  // WrongLabel, NotATree
SplitResult graph_split_III(const Wlg& g, const std::string& v); // WrongLabel, NotATree

struct SimpleFactor {
    Wlg graph;
    std::set<std::string> special_vertices;
    std::vector<std::string> origin; // split steps that produced this factor
};

/// Binary recomposition plan mirroring the split sequence. Leaves carry a
/// factor index; internal nodes carry the split data needed to undo it.
struct DecompNode {
    int factor_index = -1;
    SplitKind kind = SplitKind::I;
    std::string vertex;
    std::string fresh_g1, fresh_g2; // cap leaves to drop when recomposing
    std::unique_ptr<DecompNode> left, right;

    bool is_leaf() const { return !left; }
};

struct Decomposition {
    std::vector<SimpleFactor> factors;
    std::unique_ptr<DecompNode> plan;
};

/// Splits every V1/V2/V3 vertex (smallest id first) until all factors are
/// simple. The factor multiset does not depend on the order; see
/// simple_decomposition_ordered for an explicit order.
Decomposition simple_decomposition(const Wlg& g); // NotATree

/// Same, processing the splittable vertices in the given order. `order`
/// must list exactly the V1/V2/V3 vertices of g.
Decomposition simple_decomposition_ordered(const Wlg& g,
                                           const std::vector<std::string>& order);

std::vector<std::string> splittable_vertices(const Wlg& g);

} // namespace wlg
