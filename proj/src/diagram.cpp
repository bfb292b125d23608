#include "cgr/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cgr {

std::pair<LinkDiagram::Spot, LinkDiagram::Spot> LinkDiagram::find_crossing(int cid) const {
    Spot over, under;
    for (int c = 0; c < ncomps(); ++c)
        for (int p = 0; p < static_cast<int>(comps[c].size()); ++p)
            if (comps[c][p].cid == cid) {
                if (comps[c][p].over)
                    over = {c, p};
                else
                    under = {c, p};
            }
    if (over.comp < 0 || under.comp < 0) throw argument_error("unknown crossing id");
    return {over, under};
}

std::string LinkDiagram::gauss_text() const {
    std::string s;
    for (int c = 0; c < ncomps(); ++c) {
        if (c) s += '\n';
        for (size_t p = 0; p < comps[c].size(); ++p) {
            if (p) s += ' ';
            const auto& e = comps[c][p];
            s += e.over ? 'O' : 'U';
            s += std::to_string(e.cid + 1);
            s += e.sign > 0 ? '+' : '-';
        }
        if (comps[c].empty()) s += "(empty)";
    }
    return s;
}

namespace {

// Encode starting from a fixed component and rotation, renumbering crossings
// by first appearance and picking remaining components greedily.
std::string encode_from(const LinkDiagram& d, int c0, int r0) {
    const int nc = d.ncomps();
    std::vector<bool> used(nc, false);

    std::map<int, int> ren;
    auto enc_entry = [&](const Passage& e, bool commit, const std::map<int, int>& base) {
        std::string s;
        auto it = base.find(e.cid);
        int id = it != base.end() ? it->second : static_cast<int>(base.size());
        s += e.over ? 'O' : 'U';
        s += std::to_string(id);
        s += e.sign > 0 ? '+' : '-';
        (void)commit;
        return s;
    };

    auto encode_comp = [&](int c, int rot, std::map<int, int>& base, bool commit) {
        std::string s = "(";
        const auto& comp = d.comps[c];
        const int len = static_cast<int>(comp.size());
        std::map<int, int> local = base;
        for (int k = 0; k < len; ++k) {
            const auto& e = comp[(rot + k) % len];
            s += enc_entry(e, false, local);
            if (!local.count(e.cid)) local[e.cid] = static_cast<int>(local.size());
        }
        s += ')';
        if (commit) base = std::move(local);
        return s;
    };

    std::string out = encode_comp(c0, r0, ren, true);
    used[c0] = true;
    for (int step = 1; step < nc; ++step) {
        int best = -1, best_rot = 0;
        std::string best_s;
        for (int c = 0; c < nc; ++c) {
            if (used[c]) continue;
            const int len = std::max<int>(1, static_cast<int>(d.comps[c].size()));
            for (int rot = 0; rot < len; ++rot) {
                auto s = encode_comp(c, rot, ren, false);
                if (best < 0 || s < best_s) {
                    best = c;
                    best_rot = rot;
                    best_s = std::move(s);
                }
            }
        }
        out += encode_comp(best, best_rot, ren, true);
        used[best] = true;
    }
    return out;
}

} // namespace

std::string LinkDiagram::canonical_encoding() const {
    std::string best;
    for (int c = 0; c < ncomps(); ++c) {
        const int len = std::max<int>(1, static_cast<int>(comps[c].size()));
        for (int rot = 0; rot < len; ++rot) {
            auto s = encode_from(*this, c, rot);
            if (best.empty() || s < best) best = std::move(s);
        }
    }
    return best;
}

void LinkDiagram::check_valid() const {
    std::map<int, int> over_cnt, under_cnt;
    std::map<int, int> signs;
    for (auto& comp : comps)
        for (auto& e : comp) {
            (e.over ? over_cnt : under_cnt)[e.cid]++;
            auto it = signs.find(e.cid);
            if (it == signs.end())
                signs[e.cid] = e.sign;
            else if (it->second != e.sign)
                throw internal_error("inconsistent crossing sign");
            if (e.sign != 1 && e.sign != -1) throw internal_error("bad crossing sign");
        }
    if (static_cast<int>(signs.size()) != ncross) throw internal_error("crossing count mismatch");
    for (auto& [cid, s] : signs) {
        if (over_cnt[cid] != 1 || under_cnt[cid] != 1)
            throw internal_error("crossing must appear once over and once under");
    }
}

CycleRoute route_for_cycle(const GraphSpec& spec, const Cycle& c) {
    CycleRoute r;
    r.label = c.notation();
    for (auto [a, b] : c.edges()) {
        const int id = spec.edge_id(a, b);
        if (id < 0) throw argument_error("cycle edge not in graph");
        const bool fwd = a < b;
        r.steps.emplace_back(id, fwd);
    }
    return r;
}

namespace {

struct TraversalSeg {
    int comp;       // component index
    int order;      // position of the segment along the traversal
    bool forward;   // stored direction vs traversal direction
};

LinkDiagram diagram_from_routes(const Projection& proj, const std::vector<CycleRoute>& routes) {
    // Map global segment index -> traversal placement.
    std::map<int, TraversalSeg> placed;
    std::vector<int> comp_len(routes.size(), 0);
    for (size_t c = 0; c < routes.size(); ++c) {
        int order = 0;
        for (auto [eid, fwd] : routes[c].steps) {
            const auto& segs = proj.edge_segs[eid];
            if (fwd)
                for (int k = 0; k < static_cast<int>(segs.size()); ++k)
                    placed[segs[k]] = {static_cast<int>(c), order++, true};
            else
                for (int k = static_cast<int>(segs.size()) - 1; k >= 0; --k)
                    placed[segs[k]] = {static_cast<int>(c), order++, false};
        }
        comp_len[c] = order;
    }

    // Collect passages of crossings whose two segments are both on the routes.
    struct Item {
        int comp;
        int order;
        Rat t;     // traversal-adjusted param
        int cid;
        bool over;
        int sign;
    };
    std::vector<Item> items;
    int next_cid = 0;
    for (const auto& cr : proj.crossings) {
        auto io = placed.find(cr.over_seg);
        auto iu = placed.find(cr.under_seg);
        if (io == placed.end() || iu == placed.end()) continue;
        const auto& po = io->second;
        const auto& pu = iu->second;
        int sign = cr.sign;
        if (!po.forward) sign = -sign;
        if (!pu.forward) sign = -sign;
        const Rat to = po.forward ? cr.t_over : Rat(1) - cr.t_over;
        const Rat tu = pu.forward ? cr.t_under : Rat(1) - cr.t_under;
        const int cid = next_cid++;
        items.push_back({po.comp, po.order, to, cid, true, sign});
        items.push_back({pu.comp, pu.order, tu, cid, false, sign});
    }

    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
        if (a.comp != b.comp) return a.comp < b.comp;
        if (a.order != b.order) return a.order < b.order;
        return a.t < b.t;
    });

    LinkDiagram d;
    d.comps.assign(routes.size(), {});
    for (auto& it : items) d.comps[it.comp].push_back({it.cid, it.over, it.sign});

    // Renumber by first appearance for stable output.
    std::map<int, int> ren;
    for (auto& comp : d.comps)
        for (auto& e : comp) {
            if (!ren.count(e.cid)) ren[e.cid] = static_cast<int>(ren.size());
            e.cid = ren[e.cid];
        }
    d.ncross = static_cast<int>(ren.size());
    d.check_valid();
    return d;
}

} // namespace

LinkDiagram diagram_for_cycle(const Projection& proj, const CycleRoute& route) {
    return diagram_from_routes(proj, {route});
}

LinkDiagram diagram_for_pair(const Projection& proj, const CycleRoute& r1, const CycleRoute& r2) {
    return diagram_from_routes(proj, {r1, r2});
}

int inter_component_crossings(const LinkDiagram& d) {
    if (d.ncomps() != 2) throw argument_error("expected a 2-component diagram");
    std::map<int, std::set<int>> comps_of;
    for (int c = 0; c < 2; ++c)
        for (auto& e : d.comps[c]) comps_of[e.cid].insert(c);
    int n = 0;
    for (auto& [cid, cs] : comps_of)
        if (cs.size() == 2) ++n;
    return n;
}

LinkDiagram switch_crossing(const LinkDiagram& d, int cid) {
    auto [over, under] = d.find_crossing(cid);
    LinkDiagram out = d;
    out.comps[over.comp][over.pos].over = false;
    out.comps[under.comp][under.pos].over = true;
    out.comps[over.comp][over.pos].sign = -out.comps[over.comp][over.pos].sign;
    out.comps[under.comp][under.pos].sign = -out.comps[under.comp][under.pos].sign;
    return out;
}

LinkDiagram smooth_crossing(const LinkDiagram& d, int cid) {
    auto [over, under] = d.find_crossing(cid);
    LinkDiagram out;
    out.ncross = d.ncross - 1;

    auto slice = [&](const std::vector<Passage>& comp, int from, int to) {
        // Entries strictly between positions from and to, cyclically.
        std::vector<Passage> r;
        const int len = static_cast<int>(comp.size());
        for (int k = (from + 1) % len; k != to; k = (k + 1) % len) r.push_back(comp[k]);
        return r;
    };

    if (over.comp == under.comp) {
        // Split one component into two.
        const auto& comp = d.comps[over.comp];
        const int p1 = over.pos, p2 = under.pos;
        std::vector<Passage> a = slice(comp, p1, p2);
        std::vector<Passage> b = slice(comp, p2, p1);
        for (int c = 0; c < d.ncomps(); ++c)
            if (c != over.comp) out.comps.push_back(d.comps[c]);
        out.comps.push_back(std::move(a));
        out.comps.push_back(std::move(b));
    } else {
        // Merge two components: after the crossing on one, continue after it on the other.
        const auto& c1 = d.comps[over.comp];
        const auto& c2 = d.comps[under.comp];
        std::vector<Passage> merged;
        const int l1 = static_cast<int>(c1.size()), l2 = static_cast<int>(c2.size());
        for (int k = (over.pos + 1) % l1; k != over.pos; k = (k + 1) % l1) merged.push_back(c1[k]);
        for (int k = (under.pos + 1) % l2; k != under.pos; k = (k + 1) % l2) merged.push_back(c2[k]);
        for (int c = 0; c < d.ncomps(); ++c)
            if (c != over.comp && c != under.comp) out.comps.push_back(d.comps[c]);
        out.comps.push_back(std::move(merged));
    }
    return out;
}

} // namespace cgr
