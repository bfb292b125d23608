#pragma once

#include <string>
#include <vector>

#include "cgr/embedding.hpp"
#include "cgr/vec.hpp"

namespace cgr {

// Combinatorial endpoint of a polyline segment: a graph vertex v is (v, -1),
// interior joint k of edge e is (-e-1, k). Two segments are adjacent exactly
// when they share a tag.
struct SegTag {
    int a1 = 0, a2 = 0;
    bool operator==(const SegTag& o) const { return a1 == o.a1 && a2 == o.a2; }
};

struct Seg3 {
    Vec3 p, q;
    int edge = 0, idx = 0;
    SegTag tp, tq;
};

std::vector<Seg3> all_segments(const SpatialEmbedding& e);

inline bool segs_adjacent(const Seg3& s, const Seg3& t) {
    return s.tp == t.tp || s.tp == t.tq || s.tq == t.tp || s.tq == t.tq;
}

// Closed-segment intersection in 3D, exact.
// Returns 0 = disjoint, 1 = single point (stored), 2 = collinear overlap.
int seg_intersect_3d(const Vec3& p0, const Vec3& p1, const Vec3& q0, const Vec3& q1,
                     Vec3* point = nullptr);

bool point_on_segment_3d(const Vec3& a, const Vec3& p, const Vec3& q);

inline std::string seg_name(const Seg3& s) {
    return "edge" + std::to_string(s.edge) + ".seg" + std::to_string(s.idx);
}

} // namespace cgr
