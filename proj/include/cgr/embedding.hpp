#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cgr/graph.hpp"
#include "cgr/vec.hpp"

namespace cgr {

// The graphs the artifact embeds: complete graphs K3..K12, the bipartite
// K3,3 (vertices 1..6, edge iff i+j odd) and the doubled 4-cycle D4.
enum class GraphKind { Complete, K33, D4 };

struct GraphEdge {
    int a = 0, b = 0;   // endpoint vertices; traversal "forward" means a -> b
};

struct GraphSpec {
    GraphKind kind = GraphKind::Complete;
    int n = 0;   // vertex count

    static GraphSpec complete(int n);
    static GraphSpec k33();
    static GraphSpec d4();
    static GraphSpec from_name(const std::string& name);

    std::string name() const;
    // Stable edge list; the index is the edge id.
    std::vector<GraphEdge> edges() const;
    int edge_id(int a, int b) const;   // simple kinds only; -1 if absent

    bool operator==(const GraphSpec& o) const { return kind == o.kind && n == o.n; }
};

// Piecewise-linear embedding: exact rational vertex positions plus optional
// interior points per edge (empty list = straight segment).
struct SpatialEmbedding {
    GraphSpec spec;
    std::vector<Vec3> vertex_pos;              // index v-1
    std::vector<std::vector<Vec3>> edge_path;  // per edge id, interior points

    const Vec3& pos(int v) const { return vertex_pos[v - 1]; }
    bool rectilinear() const;
    // Full point chain of an edge, from edge.a to edge.b.
    std::vector<Vec3> polyline(int edge_id) const;
    std::uint64_t content_hash() const;
};

struct EmbeddingViolation {
    std::string kind;      // coincident-vertices | degenerate-segment | vertex-on-edge | edge-intersection
    std::string witness;
};

struct EmbeddingReport {
    bool ok = true;
    std::vector<EmbeddingViolation> violations;
};

// Exact check that the map is an embedding: distinct vertex images, no
// zero-length segments, open edge interiors pairwise disjoint and avoiding
// all vertex points.
EmbeddingReport validate_embedding(const SpatialEmbedding& e);

// K_n with vertex i at (i, i^2, i^3), all edges straight.
SpatialEmbedding moment_curve_embedding(int n);

// Same layout restricted to the K3,3 edge set (6 vertices on the curve).
SpatialEmbedding moment_curve_k33();

// D4 on moment-curve vertices; one edge of each parallel pair is bent through
// a fixed interior point so the pair embeds.
SpatialEmbedding moment_curve_d4();

// Vertices i.i.d. uniform on the integer lattice [-span, span]^3, resampled
// (advancing one deterministic stream) until the embedding validates.
// Identical (spec, seed, span) give identical output. Caps at 10^4 attempts.
SpatialEmbedding random_rectilinear(const GraphSpec& spec, std::uint64_t seed, long span);

// Random D4: lattice vertices plus one random interior point on the second
// edge of each parallel pair, resampled until valid.
SpatialEmbedding random_d4(std::uint64_t seed, long span);

} // namespace cgr
