#pragma once

// Shared test fixtures: seeded polyline bends and hand-built D4 embeddings
// with prescribed pair linkings.

#include "cgr/rng.hpp"
#include "cgr/theorems.hpp"

namespace cgr::fixtures {

inline Vec3 P(long x, long y, long z) { return {Rat(Int(x)), Rat(Int(y)), Rat(Int(z))}; }

// Replaces a few straight edges by two-point detours, deterministically in
// seed; candidates are rejected until the result validates and its projected
// crossing count stays small enough for the skein oracle.
inline SpatialEmbedding bend_embedding(const SpatialEmbedding& base, std::uint64_t seed, int nedges,
                                       long amp, int max_crossings = 32) {
    Rng rng(seed);
    for (int attempt = 0; attempt < 300; ++attempt) {
        auto f = base;
        for (int k = 0; k < nedges; ++k) {
            const int eid = static_cast<int>(rng.below(f.edge_path.size()));
            const auto ge = f.spec.edges()[eid];
            const Vec3 mid = (f.pos(ge.a) + f.pos(ge.b)) * Rat(1, 2);
            auto off = [&] { return Rat(Int(rng.range(-amp, amp)), Int(2)); };
            f.edge_path[eid] = {mid + Vec3{off(), off(), off()}, mid + Vec3{off(), off(), off()}};
        }
        if (!validate_embedding(f).ok) continue;
        try {
            const auto proj = project(f, random_generic_direction(f, 3));
            if (static_cast<int>(proj.crossings.size()) <= max_crossings) return f;
        } catch (const std::exception&) {
            continue;
        }
    }
    throw internal_error("bend_embedding: no valid candidate");
}

// Bent K5 embeddings with alpha != 0 (seeds found by scanning and frozen).
inline std::vector<SpatialEmbedding> knotted_k5_fixtures() {
    std::vector<SpatialEmbedding> out;
    for (std::uint64_t s : {114, 134, 164, 173, 264, 273})
        out.push_back(bend_embedding(random_rectilinear(GraphSpec::complete(5), 200 + s, 20), s, 2, 28));
    return out;
}

// Bent K3,3 embeddings with alpha != 0.
inline std::vector<SpatialEmbedding> knotted_k33_fixtures() {
    std::vector<SpatialEmbedding> out;
    for (std::uint64_t s : {7, 30, 35, 39, 42, 52})
        out.push_back(bend_embedding(random_rectilinear(GraphSpec::k33(), 100 + s, 20), s, 2, 60, 64));
    return out;
}

// Bent (non-rectilinear) K6 embeddings.
inline std::vector<SpatialEmbedding> polyline_k6_fixtures() {
    std::vector<SpatialEmbedding> out;
    for (std::uint64_t s : {1, 2, 3, 4})
        out.push_back(bend_embedding(random_rectilinear(GraphSpec::complete(6), 300 + s, 25), s, 1, 30, 44));
    return out;
}

// D4 with |lk(lambda)| = 2, lk(lambda') = 0: the bigon on v1v2 is a rectangle
// in the y=0 plane and the bigon on v3v4 coils twice through its hole.
inline SpatialEmbedding d4_two_zero() {
    SpatialEmbedding e;
    e.spec = GraphSpec::d4();
    e.vertex_pos = {P(0, 0, -4), P(0, 0, 4), P(5, -3, 0), P(5, -3, 3)};
    e.edge_path.assign(8, {});
    e.edge_path[1] = {P(6, 0, -4), P(6, 0, 4)};
    e.edge_path[4] = {P(5, 3, 0), P(-3, 3, 1), P(-3, -3, 1), P(4, -3, 2), P(4, 3, 2), P(-3, 3, 3), P(-3, -3, 3)};
    e.edge_path[2] = {P(0, -8, 4)};
    e.edge_path[3] = {P(-2, -9, 5)};
    e.edge_path[6] = {P(6, -8, -2)};
    e.edge_path[7] = {P(8, -9, -1)};
    return e;
}

// D4 with both pairs linked once: two Hopf-linked rectangles plus bridge
// bigons, one threading the other's hole; |alpha| = 1.
inline SpatialEmbedding d4_one_one() {
    SpatialEmbedding e;
    e.spec = GraphSpec::d4();
    e.vertex_pos = {P(-2, 0, 0), P(2, 0, 0), P(0, 0, -3), P(0, 0, 3)};
    e.edge_path.assign(8, {});
    e.edge_path[0] = {P(-2, -2, 0), P(2, -2, 0)};
    e.edge_path[1] = {P(-2, 2, 0), P(2, 2, 0)};
    e.edge_path[3] = {P(5, 0, -5)};
    e.edge_path[5] = {P(0, 6, -3), P(0, 6, 3)};
    e.edge_path[6] = {P(3, -2, -2), P(3, 2, -2)};
    e.edge_path[7] = {P(-6, 1, 6), P(-6, 1, 0)};
    return e;
}

// Like d4_one_one but the v3v4 bigon coils twice: |lk| pair (2,1), |alpha| = 2.
inline SpatialEmbedding d4_two_one() {
    auto e = d4_one_one();
    e.edge_path[4] = {P(1, 1, -2), P(1, 1, 1), P(1, 5, 1), P(1, 5, -2), P(-1, 1, -2), P(-1, 1, 2)};
    return e;
}

// Relabels v1..v4 -> v2..v4,v1, which swaps the roles of lambda and lambda'.
inline SpatialEmbedding rotate_d4_labels(const SpatialEmbedding& e) {
    SpatialEmbedding r;
    r.spec = e.spec;
    r.vertex_pos = {e.vertex_pos[1], e.vertex_pos[2], e.vertex_pos[3], e.vertex_pos[0]};
    r.edge_path.assign(8, {});
    // Paths are stored in cycle order (v_k -> v_{k+1}), so rotating the labels
    // just shifts the pair index.
    for (int pair = 0; pair < 4; ++pair) {
        const int src = (pair + 1) % 4;
        for (int k = 0; k < 2; ++k) r.edge_path[2 * pair + k] = e.edge_path[2 * src + k];
    }
    return r;
}

inline std::vector<SpatialEmbedding> d4_fixture_set() {
    std::vector<SpatialEmbedding> out;
    out.push_back(moment_curve_d4());
    out.push_back(d4_two_zero());
    out.push_back(d4_one_one());
    out.push_back(d4_two_one());
    out.push_back(rotate_d4_labels(d4_two_zero()));
    out.push_back(rotate_d4_labels(d4_two_one()));
    for (std::uint64_t s = 1; s <= 16; ++s) out.push_back(random_d4(s, 20));
    return out;
}

} // namespace cgr::fixtures
