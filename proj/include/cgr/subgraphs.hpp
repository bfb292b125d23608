#pragma once

#include <array>
#include <vector>

#include "cgr/graph.hpp"

namespace cgr {

// Oriented edge of a host graph, by vertex labels.
struct OrientedEdge {
    int from = 0, to = 0;
};

// A K5 subgraph with the template labeling: template vertices 1..5 placed on
// host vertices, pentagon edges e_i = i -> i+1 (mod 5) and diagonals
// d_i = i -> i+2 (mod 5). Sign table for disjoint edge pairs:
// eps(e_i, e_j) = +1, eps(d_k, d_l) = -1, eps(e_i, d_k) = -1.
class LabeledK5 {
public:
    explicit LabeledK5(std::array<int, 5> vertex_map);

    const std::array<int, 5>& vertex_map() const { return map_; }
    const std::array<OrientedEdge, 5>& pentagon() const { return e_; }
    const std::array<OrientedEdge, 5>& diagonals() const { return d_; }

    // All 15 unordered disjoint edge pairs with their signs.
    struct SignedPair {
        OrientedEdge x, y;
        int eps;
    };
    std::vector<SignedPair> signed_pairs() const;

    // 3-, 4-, 5-cycles as host cycles.
    std::vector<Cycle> all_cycles() const;

private:
    std::array<int, 5> map_;
    std::array<OrientedEdge, 5> e_, d_;
};

// A K3,3 subgraph with the template labeling: template vertices 1..6 in
// hexagonal order (edge iff i+j odd), hexagon edges c_i = i -> i+1 (mod 6),
// long diagonals b_k = k -> k+3. Sign table: eps(c_i, c_j) = +1,
// eps(b_k, b_l) = +1, eps(c_i, b_k) = +1 when the two oriented edges are
// parallel in the regular hexagon drawing and -1 when anti-parallel.
class LabeledK33 {
public:
    explicit LabeledK33(std::array<int, 6> vertex_map);

    const std::array<int, 6>& vertex_map() const { return map_; }
    const std::array<OrientedEdge, 6>& hexagon() const { return c_; }
    const std::array<OrientedEdge, 3>& long_diagonals() const { return b_; }

    struct SignedPair {
        OrientedEdge x, y;
        int eps;
    };
    // All 18 unordered disjoint edge pairs with signs.
    std::vector<SignedPair> signed_pairs() const;

    // 4- and 6-cycles as host cycles.
    std::vector<Cycle> all_cycles() const;

private:
    std::array<int, 6> map_;
    std::array<OrientedEdge, 6> c_;
    std::array<OrientedEdge, 3> b_;
};

// One labeled K5 per deleted vertex of K6; 6 in total, in deletion order.
std::vector<LabeledK5> k5_subgraphs_of_k6();

// One labeled K3,3 per unordered bipartition of {1..6} into 3-sets; 10 in
// total, ordered by the part containing vertex 1.
std::vector<LabeledK33> k33_subgraphs_of_k6();

// The doubled 4-cycle: vertices v1..v4, edge pairs {e1,e2} on v1v2,
// {e3,e4} on v2v3, {e5,e6} on v3v4, {e7,e8} on v4v1.
// Cycles: four 2-cycles (the parallel pairs) and sixteen 4-cycles picking
// one edge per pair, weighted by the parity of the index sum.
struct D4Graph {
    // Endpoint vertices of edge e_i (1-based edge index 1..8).
    static std::pair<int, int> edge_ends(int i);

    struct FourCycle {
        std::array<int, 4> edge_ids;   // one of e1/e2, e3/e4, e5/e6, e7/e8 in order
        int omega;                     // +1 if index sum even, -1 if odd
    };
    static std::vector<FourCycle> four_cycles();

    struct TwoCycle {
        std::array<int, 2> edge_ids;
    };
    static std::vector<TwoCycle> two_cycles();   // {e1,e2},{e3,e4},{e5,e6},{e7,e8}
};

} // namespace cgr
