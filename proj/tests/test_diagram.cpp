#include "doctest.h"

#include "cgr/diagram.hpp"
#include "cgr/embedding.hpp"
#include "cgr/seifert.hpp"

using namespace cgr;

namespace {

LinkDiagram trefoil() {
    LinkDiagram d;
    d.ncross = 3;
    d.comps = {{{0, true, 1}, {1, false, 1}, {2, true, 1}, {0, false, 1}, {1, true, 1}, {2, false, 1}}};
    d.check_valid();
    return d;
}

} // namespace

TEST_CASE("triangle diagrams have no crossings") {
    const auto e = moment_curve_embedding(6);
    const auto proj = project(e, random_generic_direction(e, 0));
    for (auto& c : cycles_of_length(complete_graph(6), 3)) {
        const auto d = diagram_for_cycle(proj, route_for_cycle(e.spec, c));
        CHECK(d.ncross == 0);
        CHECK(d.ncomps() == 1);
    }
}

TEST_CASE("gauss text matches the documented format") {
    CHECK(trefoil().gauss_text() == "O1+ U2+ O3+ U1+ O2+ U3+");
}

TEST_CASE("pair diagrams tag components and keep crossing parity") {
    const auto e = random_rectilinear(GraphSpec::complete(6), 11, 200);
    const auto proj = project(e, random_generic_direction(e, 2));
    for (auto& p : disjoint_cycle_pairs(complete_graph(6), 3, 3)) {
        const auto d = diagram_for_pair(proj, route_for_cycle(e.spec, p.first),
                                        route_for_cycle(e.spec, p.second));
        CHECK(d.ncomps() == 2);
        CHECK(inter_component_crossings(d) % 2 == 0);
        d.check_valid();
    }
}

TEST_CASE("switch is an involution that negates the sign") {
    const auto d = trefoil();
    const auto s = switch_crossing(d, 1);
    CHECK(s.ncross == d.ncross);
    const auto [over, under] = s.find_crossing(1);
    CHECK(s.comps[over.comp][over.pos].sign == -1);
    const auto ss = switch_crossing(s, 1);
    CHECK(ss.gauss_text() == d.gauss_text());
    CHECK_THROWS_AS(switch_crossing(d, 9), argument_error);
}

TEST_CASE("smooth changes component count by one and drops a crossing") {
    const auto d = trefoil();
    const auto s = smooth_crossing(d, 0);
    CHECK(s.ncross == 2);
    CHECK(s.ncomps() == 2);
    const auto m = smooth_crossing(s, 1);   // inter-component crossing merges back
    CHECK(m.ncomps() == 1);
    CHECK(m.ncross == 1);
    CHECK_THROWS_AS(smooth_crossing(d, 7), argument_error);
}

TEST_CASE("canonical encoding ignores rotation and component order") {
    auto d = trefoil();
    auto rotated = d;
    std::rotate(rotated.comps[0].begin(), rotated.comps[0].begin() + 2, rotated.comps[0].end());
    CHECK(d.canonical_encoding() == rotated.canonical_encoding());

    LinkDiagram two;
    two.ncross = 2;
    two.comps = {{{0, true, 1}, {1, true, 1}}, {{0, false, 1}, {1, false, 1}}};
    two.check_valid();
    auto swapped = two;
    std::swap(swapped.comps[0], swapped.comps[1]);
    CHECK(two.canonical_encoding() == swapped.canonical_encoding());
}

TEST_CASE("short cycles of rectilinear embeddings are unknots") {
    const auto e = random_rectilinear(GraphSpec::complete(7), 19, 500);
    const auto proj = project(e, random_generic_direction(e, 1));
    const auto g = complete_graph(7);
    for (int len : {4, 5}) {
        for (auto& c : cycles_of_length(g, len)) {
            const auto d = diagram_for_cycle(proj, route_for_cycle(e.spec, c));
            CHECK(conway_a2(d) == 0);
        }
    }
}
