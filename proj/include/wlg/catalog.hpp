#pragma once

#include "wlg/equivalence.hpp"

namespace wlg {

/// One classified flow: a family tag with its integer parameters and a
/// concrete representative presentation.
///
/// Families and parameters:
///   "two-orbit"      {}
///   "three-regular"  { i, j, k : +-1 }
///   "three-twisted"  { case : 1..4, p }
///   "four-a"         { partner_is_attractor : 0/1, p, q, eps : +-1 }
///   "four-b"         { i, j, k : +-1 }
struct ClassificationEntry {
    int orbit_count = 0;
    std::string family;
    std::map<std::string, std::int64_t> params;
    FlowPresentation representative;
};

/// Complete list of pairwise-inequivalent flows with the given number of
/// periodic orbits; integer-parameterized families are truncated to
/// |p| <= p_bound (and |q| <= p_bound for the four-orbit grid).
std::vector<ClassificationEntry> classify(int orbit_count, std::int64_t p_bound);
// throws UnsupportedCount for orbit_count outside {2,3,4}

/// Every neat simple WLG with at most `max_vertices` vertices whose
/// unipotent parameters, twist parameters and exceptional matrix entries
/// are bounded by `matrix_bound`, deduplicated under WLG equivalence.
std::vector<Wlg> generate_neat_simple(int max_vertices, std::int64_t matrix_bound);

// Fixed-shape builders shared by the catalog and the test fixtures.
Wlg make_hopf_graph(bool positive);
Wlg make_three_regular_graph();
Wlg make_three_twisted_graph(int twisted_case, std::int64_t p);
Wlg make_four_a_graph(bool partner_is_attractor, std::int64_t p, std::int64_t q, int eps);
Wlg make_four_b_graph();

} // namespace wlg
