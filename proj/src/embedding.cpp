#include "cgr/embedding.hpp"

#include <algorithm>
#include <array>

#include "cgr/rng.hpp"
#include "cgr/segments.hpp"
#include "cgr/subgraphs.hpp"

namespace cgr {

GraphSpec GraphSpec::complete(int n) {
    if (n < 3 || n > 12) throw argument_error("complete graph size must be 3..12");
    return {GraphKind::Complete, n};
}

GraphSpec GraphSpec::k33() { return {GraphKind::K33, 6}; }
GraphSpec GraphSpec::d4() { return {GraphKind::D4, 4}; }

GraphSpec GraphSpec::from_name(const std::string& name) {
    if (name == "K33") return k33();
    if (name == "D4") return d4();
    if (name.size() >= 2 && name[0] == 'K') {
        int n = 0;
        try {
            n = std::stoi(name.substr(1));
        } catch (...) {
            throw argument_error("unknown graph name: " + name);
        }
        if (n >= 3 && n <= 12) return complete(n);
    }
    throw argument_error("unknown graph name: " + name);
}

std::string GraphSpec::name() const {
    switch (kind) {
        case GraphKind::Complete: return "K" + std::to_string(n);
        case GraphKind::K33: return "K33";
        case GraphKind::D4: return "D4";
    }
    return "?";
}

std::vector<GraphEdge> GraphSpec::edges() const {
    std::vector<GraphEdge> es;
    switch (kind) {
        case GraphKind::Complete:
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) es.push_back({i, j});
            break;
        case GraphKind::K33:
            for (int i = 1; i <= 6; ++i)
                for (int j = i + 1; j <= 6; ++j)
                    if ((i + j) % 2 == 1) es.push_back({i, j});
            break;
        case GraphKind::D4:
            for (int i = 1; i <= 8; ++i) {
                auto [a, b] = D4Graph::edge_ends(i);
                es.push_back({a, b});
            }
            break;
    }
    return es;
}

int GraphSpec::edge_id(int a, int b) const {
    if (kind == GraphKind::D4) throw argument_error("edge_id by endpoints is ambiguous for D4");
    if (a > b) std::swap(a, b);
    auto es = edges();
    for (size_t i = 0; i < es.size(); ++i)
        if (es[i].a == a && es[i].b == b) return static_cast<int>(i);
    return -1;
}

bool SpatialEmbedding::rectilinear() const {
    for (auto& p : edge_path)
        if (!p.empty()) return false;
    return true;
}

std::vector<Vec3> SpatialEmbedding::polyline(int edge_id) const {
    auto es = spec.edges();
    std::vector<Vec3> pts;
    pts.push_back(pos(es[edge_id].a));
    for (auto& q : edge_path[edge_id]) pts.push_back(q);
    pts.push_back(pos(es[edge_id].b));
    return pts;
}

std::uint64_t SpatialEmbedding::content_hash() const {
    std::string s = spec.name();
    auto feed = [&](const Vec3& p) {
        s += to_string(p.x);
        s += ',';
        s += to_string(p.y);
        s += ',';
        s += to_string(p.z);
        s += ';';
    };
    for (auto& p : vertex_pos) feed(p);
    for (auto& path : edge_path) {
        s += '|';
        for (auto& p : path) feed(p);
    }
    std::uint64_t h = 1469598103934665603ull;   // FNV-1a
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::vector<Seg3> all_segments(const SpatialEmbedding& e) {
    std::vector<Seg3> segs;
    auto es = e.spec.edges();
    for (size_t eid = 0; eid < es.size(); ++eid) {
        auto pts = e.polyline(static_cast<int>(eid));
        const int m = static_cast<int>(pts.size());
        for (int i = 0; i + 1 < m; ++i) {
            Seg3 s;
            s.p = pts[i];
            s.q = pts[i + 1];
            s.edge = static_cast<int>(eid);
            s.idx = i;
            s.tp = (i == 0) ? SegTag{es[eid].a, -1} : SegTag{-(int)eid - 1, i - 1};
            s.tq = (i + 2 == m) ? SegTag{es[eid].b, -1} : SegTag{-(int)eid - 1, i};
            segs.push_back(std::move(s));
        }
    }
    return segs;
}

int seg_intersect_3d(const Vec3& p0, const Vec3& p1, const Vec3& q0, const Vec3& q1,
                     Vec3* point) {
    const Vec3 d1 = p1 - p0, d2 = q1 - q0, r = q0 - p0;
    const Vec3 n = cross(d1, d2);
    if (!(n == Vec3{Rat(0), Rat(0), Rat(0)})) {
        // Lines skew unless coplanar.
        if (det3(d1, d2, r) != 0) return 0;
        const Rat nn = dot(n, n);
        const Rat s = dot(cross(r, d2), n) / nn;
        const Rat t = dot(cross(r, d1), n) / nn;
        if (s < 0 || s > 1 || t < 0 || t > 1) return 0;
        if (point) *point = p0 + d1 * s;
        return 1;
    }
    // Parallel. Collinear iff r is parallel to d1.
    if (!(cross(r, d1) == Vec3{Rat(0), Rat(0), Rat(0)})) return 0;
    // Project onto d1.
    const Rat dd = dot(d1, d1);
    if (dd == 0) throw internal_error("degenerate segment in intersection test");
    Rat t0 = dot(q0 - p0, d1) / dd;
    Rat t1 = dot(q1 - p0, d1) / dd;
    if (t0 > t1) std::swap(t0, t1);
    const Rat lo = std::max(Rat(0), t0), hi = std::min(Rat(1), t1);
    if (lo > hi) return 0;
    if (lo == hi) {
        if (point) *point = p0 + d1 * lo;
        return 1;
    }
    return 2;
}

bool point_on_segment_3d(const Vec3& a, const Vec3& p, const Vec3& q) {
    const Vec3 d = q - p;
    if (!(cross(a - p, d) == Vec3{Rat(0), Rat(0), Rat(0)})) return false;
    const Rat t = dot(a - p, d) / dot(d, d);
    return t >= 0 && t <= 1;
}

EmbeddingReport validate_embedding(const SpatialEmbedding& e) {
    EmbeddingReport rep;
    auto bad = [&](const std::string& kind, const std::string& w) {
        rep.ok = false;
        rep.violations.push_back({kind, w});
    };

    const int n = e.spec.n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (e.vertex_pos[i] == e.vertex_pos[j])
                bad("coincident-vertices", "vertices " + std::to_string(i + 1) + "," + std::to_string(j + 1));

    auto segs = all_segments(e);
    for (auto& s : segs)
        if (s.p == s.q) bad("degenerate-segment", seg_name(s));
    if (!rep.ok) return rep;

    // Vertex points must avoid all open edge interiors. A vertex interior to a
    // segment it is not an endpoint of is a violation, as is an interior joint
    // coinciding with a vertex.
    for (int v = 1; v <= n; ++v) {
        const Vec3& pv = e.pos(v);
        const SegTag vt{v, -1};
        for (auto& s : segs) {
            if (s.tp == vt || s.tq == vt) continue;
            if (point_on_segment_3d(pv, s.p, s.q))
                bad("vertex-on-edge", "vertex " + std::to_string(v) + " on " + seg_name(s));
        }
    }

    for (size_t i = 0; i < segs.size(); ++i) {
        for (size_t j = i + 1; j < segs.size(); ++j) {
            const auto& s = segs[i];
            const auto& t = segs[j];
            Vec3 pt;
            const int k = seg_intersect_3d(s.p, s.q, t.p, t.q, &pt);
            if (segs_adjacent(s, t)) {
                // Must meet exactly at the shared point.
                if (k == 2) bad("edge-intersection", "adjacent overlap " + seg_name(s) + " ~ " + seg_name(t));
            } else if (k != 0) {
                bad("edge-intersection", seg_name(s) + " x " + seg_name(t));
            }
        }
    }
    return rep;
}

SpatialEmbedding moment_curve_embedding(int n) {
    auto spec = GraphSpec::complete(n);
    SpatialEmbedding e;
    e.spec = spec;
    for (int i = 1; i <= n; ++i) e.vertex_pos.push_back(moment_point(i));
    e.edge_path.assign(spec.edges().size(), {});
    return e;
}

SpatialEmbedding moment_curve_k33() {
    SpatialEmbedding e;
    e.spec = GraphSpec::k33();
    for (int i = 1; i <= 6; ++i) e.vertex_pos.push_back(moment_point(i));
    e.edge_path.assign(e.spec.edges().size(), {});
    return e;
}

namespace {

SpatialEmbedding d4_with_bends(const std::array<Vec3, 4>& vp,
                               const std::array<Vec3, 4>& bend_points) {
    SpatialEmbedding e;
    e.spec = GraphSpec::d4();
    e.vertex_pos.assign(vp.begin(), vp.end());
    e.edge_path.assign(8, {});
    for (int pair = 0; pair < 4; ++pair) e.edge_path[2 * pair + 1] = {bend_points[pair]};
    return e;
}

} // namespace

SpatialEmbedding moment_curve_d4() {
    std::array<Vec3, 4> vp{moment_point(1), moment_point(2), moment_point(3), moment_point(4)};
    // Deterministic bend offsets; the first valid scale wins.
    for (long h = 3; h <= 3000; h *= 3) {
        std::array<Vec3, 4> bends;
        for (int pair = 0; pair < 4; ++pair) {
            auto [a, b] = D4Graph::edge_ends(2 * pair + 1);
            Vec3 mid = (vp[a - 1] + vp[b - 1]) * Rat(1, 2);
            Vec3 off = (pair % 2 == 0) ? Vec3{Rat(0), Rat(0), Rat(h)} : Vec3{Rat(0), Rat(h), Rat(0)};
            bends[pair] = mid + off;
        }
        auto e = d4_with_bends(vp, bends);
        if (validate_embedding(e).ok) return e;
    }
    throw internal_error("moment_curve_d4: no valid bend found");
}

SpatialEmbedding random_rectilinear(const GraphSpec& spec, std::uint64_t seed, long span) {
    if (spec.kind == GraphKind::D4) throw argument_error("D4 has no rectilinear embedding; use random_d4");
    if (span < 8) throw argument_error("span must be >= 8");
    Rng rng(seed);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        SpatialEmbedding e;
        e.spec = spec;
        for (int v = 0; v < spec.n; ++v) {
            Rat x(Int(rng.range(-span, span)));
            Rat y(Int(rng.range(-span, span)));
            Rat z(Int(rng.range(-span, span)));
            e.vertex_pos.push_back({x, y, z});
        }
        e.edge_path.assign(spec.edges().size(), {});
        if (validate_embedding(e).ok) return e;
    }
    throw internal_error("random_rectilinear: retry cap exceeded");
}

SpatialEmbedding random_d4(std::uint64_t seed, long span) {
    if (span < 8) throw argument_error("span must be >= 8");
    Rng rng(seed);
    auto draw = [&] { return Rat(Int(rng.range(-span, span))); };
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::array<Vec3, 4> vp;
        for (auto& p : vp) p = {draw(), draw(), draw()};
        std::array<Vec3, 4> bends;
        for (auto& p : bends) p = {draw(), draw(), draw()};
        auto e = d4_with_bends(vp, bends);
        if (validate_embedding(e).ok) return e;
    }
    throw internal_error("random_d4: retry cap exceeded");
}

} // namespace cgr
