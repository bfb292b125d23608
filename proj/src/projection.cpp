#include "cgr/projection.hpp"

#include <map>
#include <set>

#include "cgr/rng.hpp"

namespace cgr {

Direction direction_with_basis(const Vec3& d) {
    const Vec3 zero{Rat(0), Rat(0), Rat(0)};
    if (d == zero) throw argument_error("zero direction");
    const Vec3 ex{Rat(1), Rat(0), Rat(0)}, ey{Rat(0), Rat(1), Rat(0)}, ez{Rat(0), Rat(0), Rat(1)};
    const Vec3 axes[3] = {ex, ey, ez};
    int i = 0;
    if (d.x != 0)
        i = 0;
    else if (d.y != 0)
        i = 1;
    else
        i = 2;
    Vec3 u = axes[(i + 1) % 3], v = axes[(i + 2) % 3];
    if (sgn(det3(u, v, d)) < 0) std::swap(u, v);
    return {d, u, v};
}

namespace {

struct Scan {
    GenericityReport report;
    Projection proj;
};

// One exact pass over all projected segment pairs: genericity checks and
// crossing extraction together.
Scan scan_projection(const SpatialEmbedding& e, const Direction& dir) {
    Scan out;
    out.proj.dir = dir;
    auto bad = [&](const std::string& kind, const std::string& w) {
        out.report.ok = false;
        out.report.violations.push_back({kind, w});
    };

    const Rat D = det3(dir.u, dir.v, dir.d);
    if (sgn(D) <= 0) throw argument_error("direction basis must have det(u,v,d) > 0");
    auto plane = [&](const Vec3& p) -> Vec2 { return {det3(p, dir.v, dir.d) / D, det3(dir.u, p, dir.d) / D}; };
    auto height = [&](const Vec3& p) -> Rat { return det3(dir.u, dir.v, p) / D; };

    auto segs3 = all_segments(e);
    out.proj.edge_segs.assign(e.spec.edges().size(), {});
    for (auto& s : segs3) {
        ProjSeg ps;
        ps.edge = s.edge;
        ps.idx = s.idx;
        ps.tp = s.tp;
        ps.tq = s.tq;
        ps.a = plane(s.p);
        ps.b = plane(s.q);
        ps.ha = height(s.p);
        ps.hb = height(s.q);
        out.proj.edge_segs[s.edge].push_back(static_cast<int>(out.proj.segs.size()));
        out.proj.segs.push_back(std::move(ps));
    }
    auto& segs = out.proj.segs;

    // Degenerate images (direction parallel to a segment).
    for (auto& s : segs)
        if (s.a == s.b) bad("tangency", "segment projects to a point: edge" + std::to_string(s.edge) + ".seg" + std::to_string(s.idx));
    if (!out.report.ok) return out;

    // Distinct vertex images.
    const int n = e.spec.n;
    std::vector<Vec2> vimg;
    for (int v = 1; v <= n; ++v) vimg.push_back(plane(e.pos(v)));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (vimg[i] == vimg[j])
                bad("coincident-vertex-images", "vertices " + std::to_string(i + 1) + "," + std::to_string(j + 1));

    // Vertex image interior to a non-incident segment image.
    auto on_closed_2d = [](const Vec2& a, const Vec2& p, const Vec2& q) {
        if (cross2(a - p, q - p) != 0) return false;
        const Vec2 d = q - p;
        const Rat dd = d.x * d.x + d.y * d.y;
        const Rat t = ((a.x - p.x) * d.x + (a.y - p.y) * d.y) / dd;
        return t >= 0 && t <= 1;
    };
    for (int v = 1; v <= n; ++v) {
        const SegTag vt{v, -1};
        for (auto& s : segs) {
            if (s.tp == vt || s.tq == vt) continue;
            if (on_closed_2d(vimg[v - 1], s.a, s.b))
                bad("vertex-on-edge",
                    "vertex " + std::to_string(v) + " image on edge" + std::to_string(s.edge) + ".seg" + std::to_string(s.idx));
        }
    }

    // Pairwise checks and crossing extraction.
    std::map<Vec2, std::set<int>> at_point;
    const size_t m = segs.size();
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = i + 1; j < m; ++j) {
            const auto& s = segs[i];
            const auto& t = segs[j];
            auto pair_name = [&] {
                return "edge" + std::to_string(s.edge) + ".seg" + std::to_string(s.idx) + " x edge" +
                       std::to_string(t.edge) + ".seg" + std::to_string(t.idx);
            };
            const Vec2 d1 = s.b - s.a, d2 = t.b - t.a, r = t.a - s.a;
            const Rat denom = cross2(d1, d2);
            const bool adjacent_pair =
                s.tp == t.tp || s.tp == t.tq || s.tq == t.tp || s.tq == t.tq;
            if (denom == 0) {
                // Parallel images.
                if (cross2(r, d1) != 0) continue;   // distinct parallel lines
                // Collinear: compute overlap.
                const Rat dd = d1.x * d1.x + d1.y * d1.y;
                Rat t0 = ((t.a.x - s.a.x) * d1.x + (t.a.y - s.a.y) * d1.y) / dd;
                Rat t1 = ((t.b.x - s.a.x) * d1.x + (t.b.y - s.a.y) * d1.y) / dd;
                if (t0 > t1) std::swap(t0, t1);
                const Rat lo = std::max(Rat(0), t0), hi = std::min(Rat(1), t1);
                if (lo > hi) continue;
                if (lo == hi && adjacent_pair) continue;   // touch at the shared image only
                bad(adjacent_pair ? "adjacent-edge-overlap" : "tangency", "collinear overlap " + pair_name());
                continue;
            }
            const Rat sp = cross2(r, d2) / denom;
            const Rat tp_ = cross2(r, d1) / denom;
            if (sp < 0 || sp > 1 || tp_ < 0 || tp_ > 1) continue;
            if (adjacent_pair) continue;   // transversal images meet at the shared point only
            const bool interior = sp > 0 && sp < 1 && tp_ > 0 && tp_ < 1;
            if (!interior) {
                bad("vertex-on-edge", "endpoint touch " + pair_name());
                continue;
            }
            // Proper crossing: heights decide over/under.
            const Rat h1 = s.ha + (s.hb - s.ha) * sp;
            const Rat h2 = t.ha + (t.hb - t.ha) * tp_;
            // Equal heights mean the segments meet in 3-space: not an embedding.
            if (h1 == h2) throw argument_error("segments intersect in space; not an embedding");
            CrossingRecord cr;
            const bool s_over = h1 > h2;
            cr.over_seg = static_cast<int>(s_over ? i : j);
            cr.under_seg = static_cast<int>(s_over ? j : i);
            cr.t_over = s_over ? sp : tp_;
            cr.t_under = s_over ? tp_ : sp;
            const Rat cs = s_over ? cross2(d1, d2) : cross2(d2, d1);
            cr.sign = sgn(cs) > 0 ? +1 : -1;
            cr.point = {s.a.x + d1.x * sp, s.a.y + d1.y * sp};
            at_point[cr.point].insert(static_cast<int>(i));
            at_point[cr.point].insert(static_cast<int>(j));
            out.proj.crossings.push_back(std::move(cr));
        }
    }
    for (auto& [pt, ss] : at_point)
        if (ss.size() >= 3) bad("triple-point", "point shared by " + std::to_string(ss.size()) + " segments");
    return out;
}

} // namespace

GenericityReport is_generic(const SpatialEmbedding& e, const Direction& dir) {
    return scan_projection(e, dir).report;
}

Projection project(const SpatialEmbedding& e, const Direction& dir) {
    auto sc = scan_projection(e, dir);
    if (!sc.report.ok)
        throw argument_error("project: direction is not generic (" + sc.report.violations.front().kind + ")");
    return std::move(sc.proj);
}

Direction random_generic_direction(const SpatialEmbedding& e, std::uint64_t seed) {
    Rng rng(seed);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        Vec3 d{Rat(Int(rng.range(-99, 99))), Rat(Int(rng.range(-99, 99))), Rat(Int(rng.range(-99, 99)))};
        if (d == Vec3{Rat(0), Rat(0), Rat(0)}) continue;
        Direction dir = direction_with_basis(d);
        if (is_generic(e, dir).ok) return dir;
    }
    throw internal_error("random_generic_direction: retry cap exceeded");
}

} // namespace cgr
