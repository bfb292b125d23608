#pragma once

#include <vector>

#include "cgr/conway.hpp"
#include "cgr/diagram.hpp"
#include "cgr/rational.hpp"

namespace cgr {

// Braid letter: crossing between strands col and col+1 carrying the diagram
// crossing sign (det(t_over, t_under) in the plane).
struct BraidLetter {
    int col = 0;    // 1-based column
    int sign = 0;   // +1 / -1
};

struct BraidWord {
    int strands = 0;
    std::vector<BraidLetter> letters;
};

// Reidemeister-II moves until the Seifert circles are coherently nested, then
// reads the diagram off as a closed braid. Preserves the link type; the
// number of Seifert circles equals the strand count.
BraidWord braid_from_diagram(const LinkDiagram& d);

// Closure of a braid word as a combinatorial diagram (used by tests and by
// the braiding self-checks).
LinkDiagram braid_closure(const BraidWord& w);

// Seifert linking form of the braid-closure surface (disks from the coherent
// circles, one twisted band per letter; basis loops run through consecutive
// same-column band pairs).
struct SeifertMatrix {
    std::vector<std::vector<long long>> v;
    int crossings = 0;   // of the diagram the surface was built from
    int circles = 0;

    int size() const { return static_cast<int>(v.size()); }
};

SeifertMatrix seifert_matrix_of_braid(const BraidWord& w);

// Seifert matrix of a knot diagram (1 component); braids internally.
SeifertMatrix seifert_matrix(const LinkDiagram& knot);

// det(x V - x^-1 V^T) rewritten in z = x - x^-1.
ConwayPolynomial conway_from_seifert(const SeifertMatrix& m);

// z^2 coefficient via the Seifert route, cross-checked against the skein
// oracle; a mismatch throws invariant_violation.
int conway_a2(const LinkDiagram& knot);

} // namespace cgr
