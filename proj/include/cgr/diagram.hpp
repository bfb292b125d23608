#pragma once

#include <string>
#include <vector>

#include "cgr/graph.hpp"
#include "cgr/projection.hpp"

namespace cgr {

// One passage of a component through a crossing.
struct Passage {
    int cid = 0;
    bool over = false;
    int sign = 0;
};

// Purely combinatorial oriented link diagram: cyclic passage sequences per
// component. Every crossing id appears exactly twice, once over and once
// under, with a consistent sign.
struct LinkDiagram {
    std::vector<std::vector<Passage>> comps;
    int ncross = 0;

    int ncomps() const { return static_cast<int>(comps.size()); }
    // Positions of both passages of a crossing: (comp, pos) over then under.
    struct Spot {
        int comp = -1, pos = -1;
    };
    std::pair<Spot, Spot> find_crossing(int cid) const;

    // Extended Gauss text, one component per line: "O1+ U2+ O3+ ...".
    std::string gauss_text() const;

    // Relabeling-invariant-enough key for memoization: minimal over starting
    // component and rotation, crossing ids renumbered by first appearance.
    std::string canonical_encoding() const;

    void check_valid() const;   // throws internal_error on broken invariants
};

// Traversal route of one component through the embedded graph: edges with
// directions, expanded into projected segments.
struct CycleRoute {
    std::vector<std::pair<int, bool>> steps;   // (edge id, forward)
    std::string label;
};

// Route of a canonical cycle in a simple graph.
CycleRoute route_for_cycle(const GraphSpec& spec, const Cycle& c);

// Restrict the full-graph crossing set to one cycle.
LinkDiagram diagram_for_cycle(const Projection& proj, const CycleRoute& route);

// Restrict to a disjoint pair; component 0 = first route.
LinkDiagram diagram_for_pair(const Projection& proj, const CycleRoute& r1, const CycleRoute& r2);

// Count crossings with one passage in each component of a 2-component diagram.
int inter_component_crossings(const LinkDiagram& d);

// Skein moves. Both return new diagrams.
LinkDiagram switch_crossing(const LinkDiagram& d, int cid);
LinkDiagram smooth_crossing(const LinkDiagram& d, int cid);

} // namespace cgr
