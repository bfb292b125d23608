#include "cgr/invariants.hpp"

#include <map>

namespace cgr {

int linking_number(const LinkDiagram& d) {
    if (d.ncomps() != 2) throw argument_error("linking_number expects a 2-component diagram");
    std::map<int, std::pair<int, int>> where;   // cid -> (over comp, under comp)
    std::map<int, int> sign_of;
    for (int c = 0; c < 2; ++c)
        for (auto& e : d.comps[c]) {
            if (e.over)
                where[e.cid].first = c;
            else
                where[e.cid].second = c;
            sign_of[e.cid] = e.sign;
        }
    int sum = 0;
    for (auto& [cid, w] : where)
        if (w.first != w.second) sum += sign_of[cid];
    if (sum % 2 != 0) throw internal_error("odd inter-component sign sum");
    return sum / 2;
}

int lk_checked(const LinkDiagram& d) {
    const int lk = linking_number(d);
    if (inter_component_crossings(d) % 2 != 0)
        throw invariant_violation("odd inter-component crossing count");
    const auto nabla = conway_skein(d);
    if (nabla.coeff(1) != lk)
        throw invariant_violation("linking number disagrees with skein z^1 coefficient");
    for (int k = 0; k <= nabla.degree(); k += 2)
        if (nabla.coeff(k) != 0)
            throw invariant_violation("even conway coefficient on a 2-component link");
    return lk;
}

int pipeline_a2(const Projection& proj, const CycleRoute& route) {
    return conway_a2(diagram_for_cycle(proj, route));
}

int pipeline_lk(const Projection& proj, const CycleRoute& r1, const CycleRoute& r2) {
    return lk_checked(diagram_for_pair(proj, r1, r2));
}

int arf(const LinkDiagram& knot) {
    const int a2 = conway_a2(knot);
    return ((a2 % 2) + 2) % 2;
}

namespace {

int orient_factor(const GraphSpec& host, const OrientedEdge& oe, int* edge_id_out) {
    const int id = host.edge_id(oe.from, oe.to);
    if (id < 0) throw argument_error("template edge not in host graph");
    const auto ge = host.edges()[id];
    *edge_id_out = id;
    return (ge.a == oe.from && ge.b == oe.to) ? +1 : -1;
}

template <typename Pairs>
SimonTerms resolve_terms(const GraphSpec& host, const Pairs& pairs) {
    SimonTerms t;
    for (const auto& p : pairs) {
        int ex, ey;
        const int ox = orient_factor(host, p.x, &ex);
        const int oy = orient_factor(host, p.y, &ey);
        auto key = std::minmax(ex, ey);
        t.coeff.push_back({{key.first, key.second}, p.eps * ox * oy});
    }
    return t;
}

} // namespace

SimonTerms simon_terms(const GraphSpec& host, const LabeledK5& k5) {
    return resolve_terms(host, k5.signed_pairs());
}

SimonTerms simon_terms(const GraphSpec& host, const LabeledK33& k33) {
    return resolve_terms(host, k33.signed_pairs());
}

int simon_invariant(const Projection& proj, const SimonTerms& terms) {
    std::map<std::pair<int, int>, int> coeff(terms.coeff.begin(), terms.coeff.end());
    int sum = 0;
    for (const auto& cr : proj.crossings) {
        const int eo = proj.segs[cr.over_seg].edge;
        const int eu = proj.segs[cr.under_seg].edge;
        auto key = std::minmax(eo, eu);
        auto it = coeff.find({key.first, key.second});
        if (it == coeff.end()) continue;
        sum += it->second * cr.sign;
    }
    if (((sum % 2) + 2) % 2 != 1)
        throw invariant_violation("Simon invariant came out even");
    return sum;
}

int simon_invariant(const SpatialEmbedding& e, const Direction& dir) {
    const auto proj = project(e, dir);
    if (e.spec.kind == GraphKind::Complete && e.spec.n == 5)
        return simon_invariant(proj, simon_terms(e.spec, LabeledK5({1, 2, 3, 4, 5})));
    if (e.spec.kind == GraphKind::K33)
        return simon_invariant(proj, simon_terms(e.spec, LabeledK33({1, 2, 3, 4, 5, 6})));
    throw argument_error("Simon invariant is defined for K5 and K3,3 embeddings");
}

namespace {

CycleRoute d4_cycle_route(const D4Graph::FourCycle& c) {
    CycleRoute r;
    r.label = "e" + std::to_string(c.edge_ids[0]) + "e" + std::to_string(c.edge_ids[1]) + "e" +
              std::to_string(c.edge_ids[2]) + "e" + std::to_string(c.edge_ids[3]);
    for (int k = 0; k < 4; ++k) r.steps.emplace_back(c.edge_ids[k] - 1, true);
    return r;
}

CycleRoute d4_two_cycle_route(const D4Graph::TwoCycle& c) {
    CycleRoute r;
    r.label = "e" + std::to_string(c.edge_ids[0]) + "e" + std::to_string(c.edge_ids[1]);
    r.steps.emplace_back(c.edge_ids[0] - 1, true);
    r.steps.emplace_back(c.edge_ids[1] - 1, false);
    return r;
}

} // namespace

long long alpha_omega(const SpatialEmbedding& e, std::uint64_t proj_seed) {
    const auto dir = random_generic_direction(e, proj_seed);
    const auto proj = project(e, dir);
    long long alpha = 0;

    if (e.spec.kind == GraphKind::D4) {
        for (const auto& c : D4Graph::four_cycles())
            alpha += static_cast<long long>(c.omega) * pipeline_a2(proj, d4_cycle_route(c));
        return alpha;   // 2-cycles carry weight 0
    }

    SimpleGraph g;
    std::map<int, int> weight;
    if (e.spec.kind == GraphKind::Complete && e.spec.n == 5) {
        g = complete_graph(5);
        weight = {{5, +1}, {4, -1}, {3, 0}};
    } else if (e.spec.kind == GraphKind::K33) {
        std::vector<std::pair<int, int>> es;
        for (auto& ge : e.spec.edges()) es.emplace_back(ge.a, ge.b);
        g = SimpleGraph(6, std::move(es));
        weight = {{6, +1}, {4, -1}};
    } else {
        throw argument_error("alpha invariant is defined for K5, K3,3 and D4");
    }

    for (auto& [len, w] : weight) {
        if (w == 0) continue;
        for (const auto& c : cycles_of_length(g, len))
            alpha += static_cast<long long>(w) * pipeline_a2(proj, route_for_cycle(e.spec, c));
    }
    return alpha;
}

std::pair<int, int> d4_pair_linking(const SpatialEmbedding& e, std::uint64_t proj_seed) {
    if (e.spec.kind != GraphKind::D4) throw argument_error("expected a D4 embedding");
    const auto dir = random_generic_direction(e, proj_seed);
    const auto proj = project(e, dir);
    auto tc = D4Graph::two_cycles();
    const int lk1 = pipeline_lk(proj, d4_two_cycle_route(tc[0]), d4_two_cycle_route(tc[2]));
    const int lk2 = pipeline_lk(proj, d4_two_cycle_route(tc[1]), d4_two_cycle_route(tc[3]));
    return {lk1, lk2};
}

KnotClass classify_knot(int a2, int stick_bound) {
    if (stick_bound > 7) throw argument_error("classification table covers stick bounds <= 7");
    if (a2 == 0) return KnotClass::Unknot;
    if (a2 == 1 && stick_bound >= 6) return KnotClass::Trefoil;
    if (a2 == -1 && stick_bound >= 7) return KnotClass::FigureEight;
    throw invariant_violation("a2 = " + std::to_string(a2) + " impossible with " +
                              std::to_string(stick_bound) + " sticks");
}

LinkClass classify_link(int lk, int stick_bound) {
    if (stick_bound > 7) throw argument_error("classification table covers stick bounds <= 7");
    const int a = lk < 0 ? -lk : lk;
    if (a == 0) return LinkClass::Trivial;
    if (a == 1 && stick_bound >= 6) return LinkClass::Hopf;
    if (a == 2 && stick_bound >= 7) return LinkClass::Torus24;
    throw invariant_violation("lk = " + std::to_string(lk) + " impossible with " +
                              std::to_string(stick_bound) + " sticks");
}

} // namespace cgr
