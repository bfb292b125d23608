#include "cgr/theorems.hpp"

#include <algorithm>

#include "cgr/parallel.hpp"

namespace cgr {

long long InvariantReport::sum_a2(int len) const {
    auto it = cycle_a2.find(len);
    if (it == cycle_a2.end()) return 0;
    long long s = 0;
    for (auto& [c, a2] : it->second) s += a2;
    return s;
}

long long InvariantReport::sum_lk2_33() const {
    long long s = 0;
    for (auto& [p, lk] : pairs_33) s += static_cast<long long>(lk) * lk;
    return s;
}

long long InvariantReport::sum_lk2_43() const {
    long long s = 0;
    for (auto& [p, lk] : pairs_43) s += static_cast<long long>(lk) * lk;
    return s;
}

long long InvariantReport::sum_lk_33() const {
    long long s = 0;
    for (auto& [p, lk] : pairs_33) s += lk;
    return s;
}

int InvariantReport::odd_lk_count_33() const {
    int n = 0;
    for (auto& [p, lk] : pairs_33) n += (lk % 2 != 0);
    return n;
}

int InvariantReport::odd_lk_count_43() const {
    int n = 0;
    for (auto& [p, lk] : pairs_43) n += (lk % 2 != 0);
    return n;
}

InvariantReport invariant_report(const SpatialEmbedding& e, std::uint64_t proj_seed) {
    if (e.spec.kind != GraphKind::Complete || (e.spec.n != 6 && e.spec.n != 7))
        throw argument_error("invariant_report expects a K6 or K7 embedding");
    const int n = e.spec.n;
    const auto g = complete_graph(n);
    const auto dir = random_generic_direction(e, proj_seed);
    const auto proj = project(e, dir);

    InvariantReport r;
    r.spec = e.spec;
    r.rectilinear = e.rectilinear();
    r.embedding_hash = e.content_hash();
    r.proj_seed = proj_seed;

    for (int len = 4; len <= n; ++len) {
        const auto cycles = cycles_of_length(g, len);
        std::vector<int> a2(cycles.size());
        parallel_for(static_cast<int>(cycles.size()),
                     [&](int i) { a2[i] = pipeline_a2(proj, route_for_cycle(e.spec, cycles[i])); });
        auto& table = r.cycle_a2[len];
        for (size_t i = 0; i < cycles.size(); ++i) table.emplace_back(cycles[i], a2[i]);
    }

    auto fill_pairs = [&](int k, int l, std::vector<std::pair<CyclePair, int>>& out) {
        const auto pairs = disjoint_cycle_pairs(g, k, l);
        std::vector<int> lk(pairs.size());
        parallel_for(static_cast<int>(pairs.size()), [&](int i) {
            lk[i] = pipeline_lk(proj, route_for_cycle(e.spec, pairs[i].first),
                                route_for_cycle(e.spec, pairs[i].second));
        });
        for (size_t i = 0; i < pairs.size(); ++i) out.emplace_back(pairs[i], lk[i]);
    };
    fill_pairs(3, 3, r.pairs_33);
    if (n == 7) fill_pairs(4, 3, r.pairs_43);
    return r;
}

namespace {

IdentityReport make_identity(std::string name, long long lhs, long long rhs,
                             std::map<std::string, long long> breakdown) {
    IdentityReport rep;
    rep.identity = std::move(name);
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.holds = lhs == rhs;
    rep.breakdown = std::move(breakdown);
    return rep;
}

void expect_k6(const InvariantReport& r) {
    if (r.spec.n != 6) throw argument_error("expected a K6 report");
}

void expect_k7(const InvariantReport& r) {
    if (r.spec.n != 7) throw argument_error("expected a K7 report");
}

} // namespace

IdentityReport verify_main1(const InvariantReport& r) {
    expect_k6(r);
    const long long s6 = r.sum_a2(6), s5 = r.sum_a2(5), l33 = r.sum_lk2_33();
    return make_identity("main1", 2 * (s6 - s5), l33 - 1,
                         {{"sum_a2_gamma6", s6}, {"sum_a2_gamma5", s5}, {"sum_lk2_gamma33", l33}});
}

IdentityReport verify_main2(const InvariantReport& r) {
    expect_k7(r);
    const long long s7 = r.sum_a2(7), s6 = r.sum_a2(6), s5 = r.sum_a2(5), l43 = r.sum_lk2_43();
    return make_identity("main2", 7 * s7 - 6 * s6 - 2 * s5, 2 * l43 - 21,
                         {{"sum_a2_gamma7", s7},
                          {"sum_a2_gamma6", s6},
                          {"sum_a2_gamma5", s5},
                          {"sum_lk2_gamma43", l43}});
}

std::pair<IdentityReport, IdentityReport> verify_main3(const InvariantReport& r) {
    expect_k7(r);
    const long long s7 = r.sum_a2(7), s6 = r.sum_a2(6), s5 = r.sum_a2(5);
    const long long l43 = r.sum_lk2_43(), l33 = r.sum_lk2_33();
    auto eq5 = make_identity("main3-eq5", 14 * (s7 - s6), 4 * l43 - l33 - 35,
                             {{"sum_a2_gamma7", s7}, {"sum_a2_gamma6", s6},
                              {"sum_lk2_gamma43", l43}, {"sum_lk2_gamma33", l33}});
    auto eq6 = make_identity("main3-eq6", 7 * (s7 - 2 * s5), 2 * l43 + 3 * l33 - 42,
                             {{"sum_a2_gamma7", s7}, {"sum_a2_gamma5", s5},
                              {"sum_lk2_gamma43", l43}, {"sum_lk2_gamma33", l33}});
    // 3*(eq5) + (eq6) must reproduce 7*(main2) as integer algebra.
    const auto m2 = verify_main2(r);
    if (3 * eq5.lhs + eq6.lhs != 7 * m2.lhs || 3 * eq5.rhs + eq6.rhs != 7 * m2.rhs)
        throw invariant_violation("main3 equations do not recombine to main2");
    return {eq5, eq6};
}

IdentityReport verify_lemma33(const InvariantReport& r) {
    expect_k7(r);
    const long long s6 = r.sum_a2(6), s5 = r.sum_a2(5), l33 = r.sum_lk2_33();
    return make_identity("lemma33", 2 * (s6 - 2 * s5), l33 - 7,
                         {{"sum_a2_gamma6", s6}, {"sum_a2_gamma5", s5}, {"sum_lk2_gamma33", l33}});
}

IdentityReport verify_cg1(const InvariantReport& r) {
    expect_k6(r);
    const long long s = r.sum_lk_33();
    return make_identity("cg1-mod2", ((s % 2) + 2) % 2, 1, {{"sum_lk_gamma33", s}});
}

IdentityReport verify_cg2(const InvariantReport& r) {
    expect_k7(r);
    const long long s = r.sum_a2(7);
    return make_identity("cg2-mod2", ((s % 2) + 2) % 2, 1, {{"sum_a2_gamma7", s}});
}

FmBoundsReport verify_fm_bounds(const InvariantReport& r) {
    expect_k7(r);
    FmBoundsReport f;
    f.odd_33 = r.odd_lk_count_33();
    f.odd_43 = r.odd_lk_count_43();
    f.lk2_33 = r.sum_lk2_33();
    f.lk2_43 = r.sum_lk2_43();
    f.holds = f.odd_33 >= 7 && f.odd_43 >= 14 && f.lk2_33 >= 7 && f.lk2_43 >= 14;
    return f;
}

IdentityReport verify_simon_lemma(const SpatialEmbedding& e, std::uint64_t proj_seed) {
    if (e.spec.kind != GraphKind::Complete || e.spec.n != 6)
        throw argument_error("the Simon lemma concerns K6 embeddings");
    const auto dir = random_generic_direction(e, proj_seed);
    const auto proj = project(e, dir);

    long long sum_h = 0, sum_g = 0;
    for (const auto& h : k33_subgraphs_of_k6()) {
        const long long L = simon_invariant(proj, simon_terms(e.spec, h));
        sum_h += L * L;
    }
    for (const auto& g5 : k5_subgraphs_of_k6()) {
        const long long L = simon_invariant(proj, simon_terms(e.spec, g5));
        sum_g += L * L;
    }
    const auto g = complete_graph(6);
    long long lk2 = 0;
    for (const auto& pr : disjoint_cycle_pairs(g, 3, 3)) {
        const long long lk =
            pipeline_lk(proj, route_for_cycle(e.spec, pr.first), route_for_cycle(e.spec, pr.second));
        lk2 += lk * lk;
    }
    return make_identity("simon-lemma", sum_h - sum_g, 4 * lk2,
                         {{"sum_simon2_k33", sum_h}, {"sum_simon2_k5", sum_g}, {"sum_lk2_gamma33", lk2}});
}

IdentityReport verify_homology_invariants(const SpatialEmbedding& e, std::uint64_t proj_seed) {
    if (e.spec.kind == GraphKind::D4) {
        const long long alpha = alpha_omega(e, proj_seed);
        const auto [lk1, lk2] = d4_pair_linking(e, proj_seed);
        const long long prod = static_cast<long long>(lk1) * lk2;
        return make_identity("homo2-d4", alpha < 0 ? -alpha : alpha, prod < 0 ? -prod : prod,
                             {{"alpha", alpha}, {"lk_lambda", lk1}, {"lk_lambda_prime", lk2}});
    }
    if ((e.spec.kind == GraphKind::Complete && e.spec.n == 5) || e.spec.kind == GraphKind::K33) {
        const auto dir = random_generic_direction(e, proj_seed);
        const long long L = simon_invariant(e, dir);
        const long long alpha = alpha_omega(e, proj_seed);
        return make_identity("homo2-simon", L * L, 8 * alpha + 1, {{"simon", L}, {"alpha", alpha}});
    }
    throw argument_error("homology invariant checks cover K5, K3,3 and D4");
}

CensusReport census_k6(const InvariantReport& r) {
    expect_k6(r);
    if (!r.rectilinear) throw argument_error("census requires a rectilinear embedding");
    CensusReport c;
    long long sum6 = 0;
    for (auto& [cy, a2] : r.cycle_a2.at(6)) {
        (void)cy;
        if (classify_knot(a2, 6) == KnotClass::Trefoil) ++c.n6_trefoil;
        sum6 += a2;
    }
    for (auto& [cy, a2] : r.cycle_a2.at(5)) {
        (void)cy;
        if (classify_knot(a2, 5) != KnotClass::Unknot) throw invariant_violation("knotted 5-cycle in K6");
    }
    for (auto& [cy, a2] : r.cycle_a2.at(4)) {
        (void)cy;
        if (classify_knot(a2, 4) != KnotClass::Unknot) throw invariant_violation("knotted 4-cycle in K6");
    }
    long long lk2 = 0;
    for (auto& [p, lk] : r.pairs_33) {
        (void)p;
        if (classify_link(lk, 6) == LinkClass::Hopf) ++c.n33_hopf;
        lk2 += static_cast<long long>(lk) * lk;
    }
    if (c.n6_trefoil != sum6) throw invariant_violation("trefoil count differs from a2 sum");
    if (c.n33_hopf != lk2) throw invariant_violation("Hopf count differs from lk^2 sum");

    const bool case01 = c.n6_trefoil == 0 && c.n33_hopf == 1;
    const bool case13 = c.n6_trefoil == 1 && c.n33_hopf == 3;
    c.k6_case = "(" + std::to_string(c.n6_trefoil) + "," + std::to_string(c.n33_hopf) + ")";
    const bool bicond = (c.n6_trefoil == 0) == (c.n33_hopf == 1) && (c.n6_trefoil >= 1) == (c.n33_hopf == 3);
    c.holds = (case01 || case13) && bicond;
    c.detail = "trefoils and Hopf links in a rectilinear K6";
    if (!c.holds) throw invariant_violation("K6 census outside {(0,1),(1,3)}: " + c.k6_case);
    return c;
}

CensusReport census_k7(const InvariantReport& r) {
    expect_k7(r);
    if (!r.rectilinear) throw argument_error("census requires a rectilinear embedding");
    CensusReport c;
    for (auto& [cy, a2] : r.cycle_a2.at(7)) {
        (void)cy;
        switch (classify_knot(a2, 7)) {
            case KnotClass::Trefoil: ++c.n7_trefoil; break;
            case KnotClass::FigureEight: ++c.n7_figure_eight; break;
            case KnotClass::Unknot: break;
        }
        c.sum_a2_gamma7 += a2;
    }
    for (auto& [cy, a2] : r.cycle_a2.at(6)) {
        (void)cy;
        classify_knot(a2, 6);
    }
    for (auto& [cy, a2] : r.cycle_a2.at(5)) {
        (void)cy;
        if (classify_knot(a2, 5) != KnotClass::Unknot) throw invariant_violation("knotted 5-cycle in K7");
    }
    for (auto& [p, lk] : r.pairs_33) {
        (void)p;
        if (classify_link(lk, 6) == LinkClass::Hopf) ++c.n33_hopf;
    }
    for (auto& [p, lk] : r.pairs_43) {
        (void)p;
        switch (classify_link(lk, 7)) {
            case LinkClass::Hopf: ++c.n43_hopf; break;
            case LinkClass::Torus24: ++c.n43_torus24; break;
            case LinkClass::Trivial: break;
        }
    }

    if (c.sum_a2_gamma7 < 1 || c.sum_a2_gamma7 % 2 == 0)
        throw invariant_violation("sum of a2 over 7-cycles not a positive odd integer");

    const bool is_one = c.sum_a2_gamma7 == 1;
    const bool exact21 = c.n43_torus24 == 0 && c.n43_hopf == 14 && c.n33_hopf == 7;
    if (is_one != exact21)
        throw invariant_violation("minimal-sum census biconditional failed");
    c.holds = true;
    c.k6_case.clear();
    c.detail = is_one ? "minimal: exactly 21 Hopf links" : "sum_a2_gamma7 > 1";
    return c;
}

long long sum_a2_gamma7(const SpatialEmbedding& e, std::uint64_t proj_seed) {
    if (e.spec.kind != GraphKind::Complete || e.spec.n != 7)
        throw argument_error("expected a K7 embedding");
    const auto dir = random_generic_direction(e, proj_seed);
    const auto proj = project(e, dir);
    const auto cycles = cycles_of_length(complete_graph(7), 7);
    std::vector<int> a2(cycles.size());
    parallel_for(static_cast<int>(cycles.size()),
                 [&](int i) { a2[i] = pipeline_a2(proj, route_for_cycle(e.spec, cycles[i])); });
    long long s = 0;
    for (int v : a2) s += v;
    return s;
}

std::optional<SpatialEmbedding> search_minimal_k7(std::uint64_t seed, int budget, long span) {
    if (budget < 1) throw argument_error("search budget must be >= 1");
    for (int trial = 0; trial < budget; ++trial) {
        auto e = random_rectilinear(GraphSpec::complete(7), seed + static_cast<std::uint64_t>(trial), span);
        if (sum_a2_gamma7(e, seed) == 1) return e;
    }
    return std::nullopt;
}

} // namespace cgr
