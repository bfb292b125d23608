#pragma once

#include <cstdint>
#include <vector>

#include "cgr/segments.hpp"

namespace cgr {

// Projection frame: plane coordinates are taken in the basis (u, v, d), so the
// view direction (projection kernel) is d itself and "height" is the
// d-coordinate. det(u, v, d) > 0 fixes the plane orientation, which makes
// crossing signs well defined.
struct Direction {
    Vec3 d, u, v;
};

// Builds the (u, v) basis for a given nonzero d from coordinate axes.
Direction direction_with_basis(const Vec3& d);

struct GenericityViolation {
    std::string kind;   // coincident-vertex-images | vertex-on-edge | tangency | triple-point | adjacent-edge-overlap
    std::string witness;
};

struct GenericityReport {
    bool ok = true;
    std::vector<GenericityViolation> violations;
};

// Projected segment with exact plane coordinates and heights.
struct ProjSeg {
    int edge = 0, idx = 0;
    SegTag tp, tq;
    Vec2 a, b;       // images of the stored endpoints
    Rat ha, hb;      // heights along d
};

struct CrossingRecord {
    int over_seg = 0, under_seg = 0;   // indices into Projection::segs
    Rat t_over, t_under;               // params along the stored directions
    int sign = 0;                      // sgn det(t_over, t_under) in the plane
    Vec2 point;
};

// Full-graph crossing set for one generic direction.
struct Projection {
    Direction dir;
    std::vector<ProjSeg> segs;
    std::vector<std::vector<int>> edge_segs;   // per edge id, segment indices in order
    std::vector<CrossingRecord> crossings;
};

// Exact regular-projection predicate.
GenericityReport is_generic(const SpatialEmbedding& e, const Direction& dir);

// Crossing extraction; throws argument_error when the direction is not generic.
Projection project(const SpatialEmbedding& e, const Direction& dir);

// Deterministic seeded search for a generic direction; retries internally and
// throws internal_error after 10^4 attempts.
Direction random_generic_direction(const SpatialEmbedding& e, std::uint64_t seed);

} // namespace cgr
