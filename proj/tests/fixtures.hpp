#pragma once

#include "diffcech/gallery.hpp"

#include <algorithm>

namespace fixtures {

using namespace diffcech;

/// Two arcs {0..6} and {6..11,0} of the 12-atom circle. Their intersection
/// has two components, so this is not a good cover; it only serves refinement tests.
inline PresentationPtr two_arc() {
    Supports s;
    s.chart_atoms = {{0, 1, 2, 3, 4, 5, 6}, {0, 6, 7, 8, 9, 10, 11}};
    for (int a = 0; a < 12; ++a) {
        std::vector<int> adj{(a + 11) % 12, (a + 1) % 12};
        std::sort(adj.begin(), adj.end());
        s.adjacency.push_back(adj);
    }
    return make_presentation(FiniteNerve::from_supports({"A", "B"}, s, 2, false), "two-arc");
}

/// Charts 0,1,2 with the triple (0,1,2) alive.
inline PresentationPtr triangle(bool alternating = true) {
    return make_presentation(FiniteNerve::from_facets({"a", "b", "c"}, {{0, 1, 2}}, 2, alternating), "triangle");
}

/// Two disjoint charts.
inline PresentationPtr two_points() {
    return make_presentation(FiniteNerve({"p", "q"}, {}, 2, false), "two-points");
}

inline Cochain nerve_cochain(const PresentationPtr& p, const GroupTag& tag, int k,
                             const std::vector<std::pair<Tuple, long>>& entries) {
    const FiniteNerve& n = p->nerve();
    std::vector<GroupElement> vals(n.num_tuples(k), GroupElement::zero(tag));
    for (const auto& [t, v] : entries) vals[*n.index_of(t)] = GroupElement::integer(tag, v);
    return Cochain::nerve(p, tag, k, std::move(vals));
}

} // namespace fixtures
