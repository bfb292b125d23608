#include "cgr/seifert.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "cgr/laurent.hpp"

namespace cgr {

namespace {

// Port slots at a crossing.
constexpr int IN_OVER = 0, IN_UNDER = 1, OUT_OVER = 2, OUT_UNDER = 3;

// Counterclockwise port order around a crossing, by sign.
const int ROT_POS[4] = {OUT_OVER, OUT_UNDER, IN_OVER, IN_UNDER};
const int ROT_NEG[4] = {OUT_OVER, IN_UNDER, IN_OVER, OUT_UNDER};

// With the rotation lists above, the two faces merged by the oriented
// smoothing sit at ccw gap indices {0,2} for positive and {1,3} for negative
// crossings (gap k lies between rotation entries k and k+1).
const int MERGE_POS[2] = {0, 2};
const int MERGE_NEG[2] = {1, 3};

struct Derived {
    // Flattened entries: entry i = (comp, pos); arcs: arc i runs from the exit
    // of entry i to the entry port of the next passage on the same component.
    std::vector<std::pair<int, int>> entry_at;          // entry -> (comp,pos)
    std::vector<std::vector<int>> entry_of;             // (comp,pos) -> entry
    int narcs = 0;
    std::vector<int> arc_head_port, arc_tail_port;      // port = cid*4 + slot
    std::vector<int> port_arc, port_is_tail;            // per port
    std::vector<int> sign_of;                           // per cid
    std::vector<int> face_of;                           // per dart (= arc*2 + dir)
    int nfaces = 0;
    std::vector<int> circle_of;                         // per arc
    int ncircles = 0;
    std::vector<int> region_of_face;
    int nregions = 0;
    std::vector<std::array<int, 2>> crossing_circles;   // per cid (over-splice circle, under-splice circle)
};

const int* rotation(int sign) { return sign > 0 ? ROT_POS : ROT_NEG; }

Derived derive(const LinkDiagram& d) {
    Derived w;
    const int nc = d.ncomps();
    w.entry_of.assign(nc, {});
    for (int c = 0; c < nc; ++c) {
        w.entry_of[c].resize(d.comps[c].size());
        for (int p = 0; p < static_cast<int>(d.comps[c].size()); ++p) {
            w.entry_of[c][p] = static_cast<int>(w.entry_at.size());
            w.entry_at.emplace_back(c, p);
        }
    }
    w.narcs = static_cast<int>(w.entry_at.size());
    if (w.narcs != 2 * d.ncross) throw internal_error("entry count mismatch");

    w.sign_of.assign(d.ncross, 0);
    w.arc_head_port.assign(w.narcs, -1);
    w.arc_tail_port.assign(w.narcs, -1);
    w.port_arc.assign(4 * d.ncross, -1);
    w.port_is_tail.assign(4 * d.ncross, 0);

    for (int c = 0; c < nc; ++c) {
        const int len = static_cast<int>(d.comps[c].size());
        for (int p = 0; p < len; ++p) {
            const auto& e = d.comps[c][p];
            w.sign_of[e.cid] = e.sign;
            const int arc = w.entry_of[c][p];                       // leaves e
            const int next = w.entry_of[c][(p + 1) % len];          // next passage
            const auto& en = d.comps[c][(p + 1) % len];
            const int tail_port = e.cid * 4 + (e.over ? OUT_OVER : OUT_UNDER);
            const int head_port = en.cid * 4 + (en.over ? IN_OVER : IN_UNDER);
            (void)next;
            w.arc_tail_port[arc] = tail_port;
            w.arc_head_port[arc] = head_port;
            w.port_arc[tail_port] = arc;
            w.port_is_tail[tail_port] = 1;
            w.port_arc[head_port] = arc;
            w.port_is_tail[head_port] = 0;
        }
    }
    for (int p = 0; p < 4 * d.ncross; ++p)
        if (w.port_arc[p] < 0) throw internal_error("unused port");

    // Face tracing: arriving at port q, leave from the clockwise-next port.
    auto cw_next = [&](int port) {
        const int cid = port / 4, slot = port % 4;
        const int* rot = rotation(w.sign_of[cid]);
        int k = 0;
        while (rot[k] != slot) ++k;
        return cid * 4 + rot[(k + 3) % 4];
    };
    auto dart_head = [&](int dart) {
        const int arc = dart / 2;
        return dart % 2 == 0 ? w.arc_head_port[arc] : w.arc_tail_port[arc];
    };
    auto next_dart = [&](int dart) {
        const int q = cw_next(dart_head(dart));
        const int arc = w.port_arc[q];
        return arc * 2 + (w.port_is_tail[q] ? 0 : 1);
    };
    w.face_of.assign(2 * w.narcs, -1);
    for (int s = 0; s < 2 * w.narcs; ++s) {
        if (w.face_of[s] >= 0) continue;
        int dart = s;
        while (w.face_of[dart] < 0) {
            w.face_of[dart] = w.nfaces;
            dart = next_dart(dart);
        }
        if (dart != s) throw internal_error("face trace did not close");
        ++w.nfaces;
    }
    if (d.ncross - w.narcs + w.nfaces != 2) throw internal_error("Euler check failed");

    // Seifert circles: splice successors.
    auto circle_succ = [&](int arc) {
        const int hp = w.arc_head_port[arc];
        const int cid = hp / 4, slot = hp % 4;
        const int out = cid * 4 + (slot == IN_OVER ? OUT_UNDER : OUT_OVER);
        if (slot != IN_OVER && slot != IN_UNDER) throw internal_error("arc head is not an in port");
        return w.port_arc[out];
    };
    w.circle_of.assign(w.narcs, -1);
    for (int a = 0; a < w.narcs; ++a) {
        if (w.circle_of[a] >= 0) continue;
        int x = a;
        while (w.circle_of[x] < 0) {
            w.circle_of[x] = w.ncircles;
            x = circle_succ(x);
        }
        ++w.ncircles;
    }

    w.crossing_circles.assign(d.ncross, {-1, -1});
    for (int cid = 0; cid < d.ncross; ++cid) {
        const int a_over = w.port_arc[cid * 4 + IN_OVER];
        const int a_under = w.port_arc[cid * 4 + IN_UNDER];
        w.crossing_circles[cid] = {w.circle_of[a_over], w.circle_of[a_under]};
        if (w.crossing_circles[cid][0] == w.crossing_circles[cid][1])
            throw internal_error("both smoothed strands on one Seifert circle");
    }

    // Regions of the smoothed picture: faces merged across each crossing.
    std::vector<int> parent(w.nfaces);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    auto face_at_gap = [&](int cid, int k) {
        // Gap k lies between rotation entries k and k+1; it belongs to the face
        // of the dart arriving at rotation entry k+1.
        const int* rot = rotation(w.sign_of[cid]);
        const int q = cid * 4 + rot[(k + 1) % 4];
        const int arc = w.port_arc[q];
        const int dart = arc * 2 + (w.port_is_tail[q] ? 1 : 0);
        return w.face_of[dart];
    };
    for (int cid = 0; cid < d.ncross; ++cid) {
        const int* mg = w.sign_of[cid] > 0 ? MERGE_POS : MERGE_NEG;
        parent[find(face_at_gap(cid, mg[0]))] = find(face_at_gap(cid, mg[1]));
    }
    std::map<int, int> region_ids;
    w.region_of_face.assign(w.nfaces, -1);
    for (int f = 0; f < w.nfaces; ++f) {
        const int root = find(f);
        if (!region_ids.count(root)) region_ids[root] = static_cast<int>(region_ids.size());
        w.region_of_face[f] = region_ids[root];
    }
    w.nregions = static_cast<int>(region_ids.size());
    if (w.nregions != w.ncircles + 1) throw internal_error("region count mismatch");
    return w;
}

// Side of a circle a region lies on, encoded by dart direction: 0 = the
// region owns forward darts of the circle's arcs, 1 = backward darts.
struct Sides {
    // (region, circle) -> side; also one witness arc per entry.
    std::map<std::pair<int, int>, std::pair<int, int>> side_and_arc;
};

Sides circle_sides(const Derived& w) {
    Sides s;
    for (int arc = 0; arc < w.narcs; ++arc) {
        for (int dir = 0; dir < 2; ++dir) {
            const int region = w.region_of_face[w.face_of[arc * 2 + dir]];
            const auto key = std::make_pair(region, w.circle_of[arc]);
            auto it = s.side_and_arc.find(key);
            if (it == s.side_and_arc.end())
                s.side_and_arc[key] = {dir, arc};
            else if (it->second.first != dir)
                throw internal_error("region sees one circle from both sides");
        }
    }
    return s;
}

// One Vogel reducing move: push arc alpha across the region over arc beta.
// `left` tells whether the region lies on the left of both strands.
void apply_move(LinkDiagram& d, int arc_alpha, int arc_beta, bool left, const Derived& w) {
    const int x1 = d.ncross, x2 = d.ncross + 1;
    const auto [ca, pa] = w.entry_at[arc_alpha];
    const auto [cb, pb] = w.entry_at[arc_beta];

    std::vector<Passage> ins_a, ins_b;
    if (left) {
        ins_a = {{x1, true, +1}, {x2, true, -1}};
        ins_b = {{x2, false, -1}, {x1, false, +1}};
    } else {
        ins_a = {{x1, true, -1}, {x2, true, +1}};
        ins_b = {{x2, false, +1}, {x1, false, -1}};
    }

    if (ca == cb) {
        auto& comp = d.comps[ca];
        if (pa == pb) throw internal_error("vogel move on a single arc");
        if (pa > pb) {
            comp.insert(comp.begin() + pa + 1, ins_a.begin(), ins_a.end());
            comp.insert(comp.begin() + pb + 1, ins_b.begin(), ins_b.end());
        } else {
            comp.insert(comp.begin() + pb + 1, ins_b.begin(), ins_b.end());
            comp.insert(comp.begin() + pa + 1, ins_a.begin(), ins_a.end());
        }
    } else {
        d.comps[ca].insert(d.comps[ca].begin() + pa + 1, ins_a.begin(), ins_a.end());
        d.comps[cb].insert(d.comps[cb].begin() + pb + 1, ins_b.begin(), ins_b.end());
    }
    d.ncross += 2;
    d.check_valid();
}

} // namespace

BraidWord braid_from_diagram(const LinkDiagram& input) {
    LinkDiagram d = input;
    d.check_valid();
    if (d.ncross == 0) throw argument_error("braid_from_diagram: crossing-free diagram");

    const int move_cap = 4 * d.ncross * d.ncross + 64;
    Derived w;
    for (int moves = 0;; ++moves) {
        w = derive(d);

        // Defect: a diagram face bordered by arcs of two different Seifert
        // circles seen from the same side (same dart direction). The reducing
        // move slides one arc across that face over the other.
        int arc_a = -1, arc_b = -1, side = -1;
        {
            // Per face: first (circle, arc) seen for each dart direction.
            std::vector<std::array<std::pair<int, int>, 2>> seen(
                w.nfaces, {std::make_pair(-1, -1), std::make_pair(-1, -1)});
            for (int arc = 0; arc < w.narcs && arc_a < 0; ++arc) {
                for (int dir = 0; dir < 2 && arc_a < 0; ++dir) {
                    const int f = w.face_of[arc * 2 + dir];
                    auto& slot = seen[f][dir];
                    const int circ = w.circle_of[arc];
                    if (slot.first < 0) {
                        slot = {circ, arc};
                    } else if (slot.first != circ) {
                        arc_a = slot.second;
                        arc_b = arc;
                        side = dir;
                    }
                }
            }
        }
        if (arc_a < 0) break;   // coherent
        if (moves >= move_cap) throw internal_error("vogel move cap exceeded");
        apply_move(d, arc_a, arc_b, /*left=*/side == 0, w);
    }

    // Region adjacency must form a path; order circles along it.
    auto sides = circle_sides(w);
    std::vector<std::set<int>> region_circles(w.nregions);
    std::map<int, std::set<int>> circle_regions;
    for (auto& [key, val] : sides.side_and_arc) {
        region_circles[key.first].insert(key.second);
        circle_regions[key.second].insert(key.first);
    }
    for (auto& [c, rs] : circle_regions)
        if (rs.size() != 2) throw internal_error("circle does not separate two regions");

    int leaf = -1;
    for (int r = 0; r < w.nregions; ++r)
        if (region_circles[r].size() == 1) {
            leaf = r;
            break;
        }
    if (leaf < 0) throw internal_error("no leaf region in coherent diagram");

    std::vector<int> circle_order;                    // path order
    std::vector<int> strand_of(w.ncircles, -1);
    {
        int region = leaf;
        std::set<int> used_circles;
        while (static_cast<int>(circle_order.size()) < w.ncircles) {
            int next_circle = -1;
            for (int c : region_circles[region])
                if (!used_circles.count(c)) {
                    if (next_circle >= 0) throw internal_error("region adjacency is not a path");
                    next_circle = c;
                }
            if (next_circle < 0) throw internal_error("region path ended early");
            strand_of[next_circle] = static_cast<int>(circle_order.size());
            circle_order.push_back(next_circle);
            used_circles.insert(next_circle);
            int next_region = -1;
            for (int r : circle_regions[next_circle])
                if (r != region) next_region = r;
            region = next_region;
        }
    }

    // Crossing sequence along every circle, in traversal order.
    auto circle_succ = [&](int arc) {
        const int hp = w.arc_head_port[arc];
        const int cid = hp / 4, slot = hp % 4;
        const int out = cid * 4 + (slot == IN_OVER ? OUT_UNDER : OUT_OVER);
        return w.port_arc[out];
    };
    std::vector<std::vector<int>> circle_seq(w.ncircles);
    {
        std::vector<char> done(w.narcs, 0);
        for (int a0 = 0; a0 < w.narcs; ++a0) {
            if (done[a0]) continue;
            int a = a0;
            do {
                done[a] = 1;
                circle_seq[w.circle_of[a]].push_back(w.arc_head_port[a] / 4);
                a = circle_succ(a);
            } while (a != a0);
        }
    }

    // Column of each crossing; both circles must be path-adjacent.
    std::vector<int> column(d.ncross, -1);
    for (int cid = 0; cid < d.ncross; ++cid) {
        const int s1 = strand_of[w.crossing_circles[cid][0]];
        const int s2 = strand_of[w.crossing_circles[cid][1]];
        if (std::abs(s1 - s2) != 1) throw internal_error("crossing joins non-adjacent strands");
        column[cid] = std::min(s1, s2) + 1;   // 1-based
    }

    // Merge the per-circle cyclic orders into one global cyclic time order.
    std::vector<int> global = circle_seq[circle_order[0]];
    for (int idx = 1; idx < w.ncircles; ++idx) {
        const int circ = circle_order[idx];
        auto seq = circle_seq[circ];
        // Anchors: letters of the previous column, already placed.
        std::vector<int> anchor_pos;
        for (size_t k = 0; k < seq.size(); ++k)
            if (column[seq[k]] == idx) anchor_pos.push_back(static_cast<int>(k));
        if (anchor_pos.empty()) throw internal_error("no anchors while merging braid order");
        // Rotate so the sequence starts at an anchor.
        std::rotate(seq.begin(), seq.begin() + anchor_pos[0], seq.end());
        auto pos_in_global = [&](int cid) {
            auto it = std::find(global.begin(), global.end(), cid);
            if (it == global.end()) throw internal_error("anchor missing from global order");
            return static_cast<int>(it - global.begin());
        };
        // Consistency of the anchor cyclic order.
        {
            std::vector<int> ps;
            for (int cid : seq)
                if (column[cid] == idx) ps.push_back(pos_in_global(cid));
            int wraps = 0;
            for (size_t k = 1; k < ps.size(); ++k)
                if (ps[k] < ps[k - 1]) ++wraps;
            if (ps.size() > 1 && wraps > 1) throw internal_error("anchor order mismatch while merging");
        }
        // Insert runs of new letters after their anchors.
        int anchor = seq[0];
        std::vector<int> run;
        auto flush = [&](int after_cid) {
            if (run.empty()) return;
            const int p = pos_in_global(after_cid);
            global.insert(global.begin() + p + 1, run.begin(), run.end());
            run.clear();
        };
        for (size_t k = 1; k < seq.size(); ++k) {
            const int cid = seq[k];
            if (column[cid] == idx) {
                flush(anchor);
                anchor = cid;
            } else {
                run.push_back(cid);
            }
        }
        flush(anchor);
    }
    if (static_cast<int>(global.size()) != d.ncross) throw internal_error("merged order lost letters");

    BraidWord word;
    word.strands = w.ncircles;
    for (int cid : global) word.letters.push_back({column[cid], w.sign_of[cid]});

    // The closure permutation must reproduce the component count (an n-cycle
    // for knots).
    {
        std::vector<int> perm(word.strands);
        std::iota(perm.begin(), perm.end(), 0);
        for (auto& l : word.letters) std::swap(perm[l.col - 1], perm[l.col]);
        std::vector<char> vis(word.strands, 0);
        int cycles = 0;
        for (int i = 0; i < word.strands; ++i) {
            if (vis[i]) continue;
            ++cycles;
            for (int j = i; !vis[j]; j = perm[j]) vis[j] = 1;
        }
        if (cycles != input.ncomps()) throw internal_error("braid closure component count mismatch");
    }
    return word;
}

LinkDiagram braid_closure(const BraidWord& w) {
    const int n = w.strands;
    if (n < 1) throw argument_error("empty braid");
    std::vector<std::vector<Passage>> strand_seq(n);
    std::vector<int> at(n);                 // strand currently at each position
    std::iota(at.begin(), at.end(), 0);
    for (size_t t = 0; t < w.letters.size(); ++t) {
        const auto& l = w.letters[t];
        if (l.col < 1 || l.col >= n) throw argument_error("braid letter column out of range");
        const int asc = at[l.col - 1], desc = at[l.col];
        const bool desc_over = l.sign > 0;
        strand_seq[asc].push_back({static_cast<int>(t), !desc_over, l.sign});
        strand_seq[desc].push_back({static_cast<int>(t), desc_over, l.sign});
        std::swap(at[l.col - 1], at[l.col]);
    }
    // Strand s starts at position s and ends at position end_pos[s].
    std::vector<int> end_pos(n);
    for (int p = 0; p < n; ++p) end_pos[at[p]] = p;

    LinkDiagram d;
    d.ncross = static_cast<int>(w.letters.size());
    std::vector<char> used(n, 0);
    for (int s0 = 0; s0 < n; ++s0) {
        if (used[s0]) continue;
        std::vector<Passage> comp;
        int s = s0;
        do {
            used[s] = 1;
            comp.insert(comp.end(), strand_seq[s].begin(), strand_seq[s].end());
            s = end_pos[s];   // closure: end position p joins the strand that started at p
        } while (s != s0);
        d.comps.push_back(std::move(comp));
    }
    d.check_valid();
    return d;
}

SeifertMatrix seifert_matrix_of_braid(const BraidWord& w) {
    // Occurrences per column in time order.
    std::vector<std::vector<int>> col_times(w.strands);   // letter indices
    for (size_t t = 0; t < w.letters.size(); ++t) col_times[w.letters[t].col].push_back(static_cast<int>(t));

    struct Loop {
        int col, t_a, t_b, s_a, s_b;
    };
    std::vector<Loop> loops;
    for (int col = 1; col < w.strands; ++col) {
        const auto& ts = col_times[col];
        if (ts.empty()) throw internal_error("empty braid column (split closure)");
        for (size_t j = 0; j + 1 < ts.size(); ++j)
            loops.push_back({col, ts[j], ts[j + 1], w.letters[ts[j]].sign, w.letters[ts[j + 1]].sign});
    }

    const int g2 = static_cast<int>(loops.size());
    SeifertMatrix m;
    m.crossings = static_cast<int>(w.letters.size());
    m.circles = w.strands;
    m.v.assign(g2, std::vector<long long>(g2, 0));

    for (int i = 0; i < g2; ++i) m.v[i][i] = -(loops[i].s_a + loops[i].s_b) / 2;

    for (int i = 0; i < g2; ++i) {
        for (int j = 0; j < g2; ++j) {
            if (i == j) continue;
            const auto& a = loops[i];
            const auto& b = loops[j];
            if (a.col == b.col && a.t_b == b.t_a) {
                // Consecutive loops sharing the middle band.
                const int s = w.letters[a.t_b].sign;
                m.v[i][j] = (s - 1) / 2;
                m.v[j][i] = (s + 1) / 2;
            } else if (b.col == a.col + 1) {
                if (a.t_a < b.t_a && b.t_a < a.t_b && a.t_b < b.t_b) {
                    m.v[i][j] = 0;
                    m.v[j][i] = -1;
                } else if (b.t_a < a.t_a && a.t_a < b.t_b && b.t_b < a.t_b) {
                    m.v[i][j] = 0;
                    m.v[j][i] = +1;
                }
            }
        }
    }
    return m;
}

SeifertMatrix seifert_matrix(const LinkDiagram& knot) {
    if (knot.ncomps() != 1) throw argument_error("seifert_matrix expects a knot diagram");
    if (knot.ncross == 0) return SeifertMatrix{{}, 0, 1};
    return seifert_matrix_of_braid(braid_from_diagram(knot));
}

ConwayPolynomial conway_from_seifert(const SeifertMatrix& m) {
    const int n = m.size();
    // Surface rank must be even for a knot.
    if (n % 2 != 0) throw internal_error("odd Seifert matrix size for a knot");
    std::vector<std::vector<Laurent>> a(n, std::vector<Laurent>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[i][j] = Laurent::monomial(Int(static_cast<long>(m.v[i][j])), 1) -
                      Laurent::monomial(Int(static_cast<long>(m.v[j][i])), -1);
    auto poly = rewrite_in_z(laurent_det(std::move(a)));
    if (poly.coeff(0) != 1) throw internal_error("conway normalization failed: nabla(0) != 1");
    for (int k = 1; k <= poly.degree(); k += 2)
        if (poly.coeff(k) != 0) throw internal_error("odd conway coefficient for a knot");
    return poly;
}

int conway_a2(const LinkDiagram& knot) {
    if (knot.ncomps() != 1) throw argument_error("conway_a2 expects a knot diagram");
    const auto via_seifert = (knot.ncross == 0) ? ConwayPolynomial{{1}} : conway_from_seifert(seifert_matrix(knot));
    const auto via_skein = conway_skein(knot);
    if (!(via_seifert == via_skein))
        throw invariant_violation("Seifert and skein Conway polynomials disagree: " + via_seifert.str() +
                                  " vs " + via_skein.str() + " on " + knot.gauss_text());
    return static_cast<int>(via_seifert.coeff(2));
}

} // namespace cgr
