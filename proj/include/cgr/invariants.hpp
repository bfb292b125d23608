#pragma once

#include <cstdint>

#include "cgr/diagram.hpp"
#include "cgr/seifert.hpp"
#include "cgr/subgraphs.hpp"

namespace cgr {

// Half the signed sum over inter-component crossings.
int linking_number(const LinkDiagram& d);

// Same, cross-checked against the skein z^1 coefficient and the even-parity
// invariant of inter-component crossings.
int lk_checked(const LinkDiagram& d);

// conway_a2 lives in seifert.hpp (Seifert route checked against the skein
// oracle); diagram extraction plus a2 for one cycle route:
int pipeline_a2(const Projection& proj, const CycleRoute& route);
int pipeline_lk(const Projection& proj, const CycleRoute& r1, const CycleRoute& r2);

// Arf invariant as a2 mod 2.
int arf(const LinkDiagram& knot);

// Simon invariant terms resolved against a host graph: unordered edge-id
// pairs with the sign eps(x,y) times the orientation corrections.
struct SimonTerms {
    // coefficient by unordered (min,max) edge-id pair
    std::vector<std::pair<std::pair<int, int>, int>> coeff;
};

SimonTerms simon_terms(const GraphSpec& host, const LabeledK5& k5);
SimonTerms simon_terms(const GraphSpec& host, const LabeledK33& k33);

// Sum of eps(x,y) * l(f(x), f(y)) over disjoint edge pairs, from one generic
// projection. Always odd; an even value throws invariant_violation.
int simon_invariant(const Projection& proj, const SimonTerms& terms);

// Standalone K5 / K3,3 embedding with the identity template labeling.
int simon_invariant(const SpatialEmbedding& e, const Direction& dir);

// alpha invariant: weighted a2 sum over all cycles, weights by family:
// K5: 5-cycles +1, 4-cycles -1, 3-cycles 0; K3,3: 6-cycles +1, 4-cycles -1;
// D4: 4-cycles +-1 by index-sum parity, 2-cycles 0.
long long alpha_omega(const SpatialEmbedding& e, std::uint64_t proj_seed = 0);

// lk of the D4 pairs lambda = (e1 u e2, e5 u e6) and lambda' = (e3 u e4, e7 u e8).
std::pair<int, int> d4_pair_linking(const SpatialEmbedding& e, std::uint64_t proj_seed = 0);

enum class KnotClass { Unknot, Trefoil, FigureEight };
enum class LinkClass { Trivial, Hopf, Torus24 };

// Stick-bound classification: with at most 7 sticks the only nontrivial knots
// are the trefoil (6 sticks) and the figure eight (7), and the only
// nontrivial 2-component links are the Hopf link (6) and the (2,4)-torus
// link (7). Values outside the table throw invariant_violation.
KnotClass classify_knot(int a2, int stick_bound);
LinkClass classify_link(int lk, int stick_bound);

} // namespace cgr
