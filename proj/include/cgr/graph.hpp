#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cgr/errors.hpp"

namespace cgr {

// Undirected simple graph on vertices 1..n. Edges are stored sorted, and the
// index of an edge in edges() is its stable id.
class SimpleGraph {
public:
    SimpleGraph() = default;
    SimpleGraph(int n, std::vector<std::pair<int, int>> edges);

    int n() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& vertices() const { return vertices_; }

    bool has_vertex(int v) const;
    bool has_edge(int a, int b) const;
    // Edge id of {a,b}; -1 if absent.
    int edge_id(int a, int b) const;

private:
    int n_ = 0;
    std::vector<int> vertices_;                 // sorted labels
    std::vector<std::pair<int, int>> edges_;    // sorted pairs (a < b)
};

// K_n on vertices 1..n, 3 <= n <= 12.
SimpleGraph complete_graph(int n);

// Induced subgraph after removing v and its incident edges. Vertex labels are kept.
SimpleGraph vertex_deleted(const SimpleGraph& g, int v);

// A cycle in canonical form: starts at its minimum vertex and continues in the
// direction that gives the lexicographically smaller sequence.
class Cycle {
public:
    Cycle() = default;
    explicit Cycle(std::vector<int> vertices);   // canonicalizes

    int length() const { return static_cast<int>(verts_.size()); }
    const std::vector<int>& vertices() const { return verts_; }
    // Consecutive pairs (v_i, v_{i+1}), closing back to the start.
    std::vector<std::pair<int, int>> edges() const;
    bool contains_vertex(int v) const;
    bool disjoint_from(const Cycle& o) const;

    // Paper bracket notation, e.g. [135].
    std::string notation() const;

    bool operator==(const Cycle& o) const { return verts_ == o.verts_; }
    bool operator<(const Cycle& o) const;

private:
    std::vector<int> verts_;
};

// Unordered pair of vertex-disjoint cycles, stored with the larger element first.
struct CyclePair {
    Cycle first, second;

    CyclePair() = default;
    CyclePair(Cycle a, Cycle b);   // orders canonically, checks disjointness

    std::string notation() const { return first.notation() + "|" + second.notation(); }

    bool operator==(const CyclePair& o) const { return first == o.first && second == o.second; }
    bool operator<(const CyclePair& o) const;
};

// All k-cycles of g, canonical, sorted, no duplicates.
std::vector<Cycle> cycles_of_length(const SimpleGraph& g, int k);

// All unordered disjoint pairs of a k-cycle and an l-cycle, sorted.
std::vector<CyclePair> disjoint_cycle_pairs(const SimpleGraph& g, int k, int l);

} // namespace cgr
