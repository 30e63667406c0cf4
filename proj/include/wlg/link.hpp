#pragma once

#include "wlg/neat.hpp"

namespace wlg {

enum class Role { HopfCore, HopfPartner, Cable };
const char* role_name(Role role);

/// One oriented link component. Index 0 marks attractors, 1 saddles,
/// 2 repellers. Cables carry the (p,q) class relative to the Hopf core of
/// their piece; a negative orientation stands for the reversed curve.
struct IndexedComponent {
    int index = 0;
    int orientation = +1;
    Role role = Role::Cable;
    std::int64_t p = 0, q = 0; // Cable only
    std::string source_vertex;

    friend bool operator==(const IndexedComponent&, const IndexedComponent&) = default;
};

/// A split summand: one Hopf pair plus parallel cables of the core. Wada
/// removals may reduce a piece below the full Hopf pair.
struct SeifertPiece {
    int hopf_sign = +1;
    std::vector<IndexedComponent> components;

    friend bool operator==(const SeifertPiece&, const SeifertPiece&) = default;
};

struct IndexedLink {
    std::vector<SeifertPiece> pieces;
    std::vector<IndexedComponent> free_unknots; // index-1 connective unknots

    friend bool operator==(const IndexedLink&, const IndexedLink&) = default;
};

/// Sorted pieces and components; cable classes sign-normalized so the pair
/// (p,q) is lexicographically positive, folding the flip into the
/// orientation. Idempotent.
IndexedLink canonicalized(IndexedLink link);

std::size_t component_count(const IndexedLink& link);

/// Link of a neat simple WLG: the Hopf pair on v0 and its partner, every
/// other vertex a signed cable of the core.
IndexedLink simple_factor_link(const Wlg& g, const NeatnessCertificate& cert); // NotNeatSimple

enum class WadaOp { I, II, III };

struct WadaParams {
    std::string connective_vertex;            // source vertex of the fresh index-1 unknot
    std::optional<std::string> remove_from_l1; // op III: index-0 or index-2 component
    std::optional<std::string> remove_from_l2; // op II and III
};

/// Split sum of two links with a fresh index-1 unknot, removing the named
/// components first: op I removes nothing, op II removes one index-0/2
/// component of l2, op III removes an index-0 component on one side and an
/// index-2 component on the other.
IndexedLink wada_compose(const IndexedLink& l1, const IndexedLink& l2, WadaOp op,
                         const WadaParams& params); // MissingComponent

/// Link of a neat realizable tree WLG: decompose, take each factor's link,
/// recompose along the split sequence.
IndexedLink link_of_wlg(const Wlg& g); // NotNeat, NotRealizable, NotATree

/// Structural equality of canonical forms. With `identify_pq_swap`, links
/// whose cable classes differ by swapping p and q are also identified.
bool links_equal(const IndexedLink& l1, const IndexedLink& l2, bool identify_pq_swap = false);

} // namespace wlg
