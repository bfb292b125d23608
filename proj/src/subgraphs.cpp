#include "cgr/subgraphs.hpp"

#include <algorithm>
#include <set>

namespace cgr {

namespace {

bool edges_disjoint(const OrientedEdge& a, const OrientedEdge& b) {
    return a.from != b.from && a.from != b.to && a.to != b.from && a.to != b.to;
}

} // namespace

LabeledK5::LabeledK5(std::array<int, 5> vertex_map) : map_(vertex_map) {
    std::set<int> uniq(map_.begin(), map_.end());
    if (uniq.size() != 5) throw argument_error("LabeledK5: vertex map not injective");
    for (int i = 0; i < 5; ++i) {
        e_[i] = {map_[i], map_[(i + 1) % 5]};
        d_[i] = {map_[i], map_[(i + 2) % 5]};
    }
}

std::vector<LabeledK5::SignedPair> LabeledK5::signed_pairs() const {
    std::vector<SignedPair> out;
    out.reserve(15);
    // Disjoint pentagon pairs: e_i with e_{i+2}.
    for (int i = 0; i < 5; ++i) out.push_back({e_[i], e_[(i + 2) % 5], +1});
    // Disjoint diagonal pairs: d_i with d_{i+1}.
    for (int i = 0; i < 5; ++i) out.push_back({d_[i], d_[(i + 1) % 5], -1});
    // Each e_i is disjoint from exactly d_{i+2}.
    for (int i = 0; i < 5; ++i) out.push_back({e_[i], d_[(i + 2) % 5], -1});
    for (auto& p : out)
        if (!edges_disjoint(p.x, p.y)) throw internal_error("K5 pair table broken");
    return out;
}

std::vector<Cycle> LabeledK5::all_cycles() const {
    SimpleGraph k5(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
    std::vector<Cycle> out;
    for (int k = 3; k <= 5; ++k)
        for (const auto& c : cycles_of_length(k5, k)) {
            std::vector<int> mapped;
            for (int v : c.vertices()) mapped.push_back(map_[v - 1]);
            out.emplace_back(std::move(mapped));
        }
    return out;
}

LabeledK33::LabeledK33(std::array<int, 6> vertex_map) : map_(vertex_map) {
    std::set<int> uniq(map_.begin(), map_.end());
    if (uniq.size() != 6) throw argument_error("LabeledK33: vertex map not injective");
    for (int i = 0; i < 6; ++i) c_[i] = {map_[i], map_[(i + 1) % 6]};
    // Long diagonals run from the odd-position part to the even-position part:
    // b1 = 1->4, b2 = 5->2, b3 = 3->6 in template positions.
    b_[0] = {map_[0], map_[3]};
    b_[1] = {map_[4], map_[1]};
    b_[2] = {map_[2], map_[5]};
}

std::vector<LabeledK33::SignedPair> LabeledK33::signed_pairs() const {
    std::vector<SignedPair> out;
    out.reserve(18);
    // Hexagon pairs: c_i disjoint from c_{i+2}, c_{i+3}, c_{i+4}; list each once.
    for (int i = 0; i < 6; ++i) {
        out.push_back({c_[i], c_[(i + 2) % 6], +1});
        if (i < 3) out.push_back({c_[i], c_[(i + 3) % 6], +1});
    }
    // Long-diagonal pairs.
    out.push_back({b_[0], b_[1], +1});
    out.push_back({b_[0], b_[2], +1});
    out.push_back({b_[1], b_[2], +1});
    // c_i is disjoint only from the diagonal parallel to it as a line,
    // b_{(i+2) mod 3}. With the orientations above the sign alternates with
    // the parity of i (1-based): -1 when c_i leaves the odd part, +1
    // otherwise. This is the unique table, up to global sign, satisfying
    // L^2 = 8*alpha + 1 on all embeddings.
    for (int i = 0; i < 6; ++i) out.push_back({c_[i], b_[(i + 2) % 3], i % 2 == 0 ? -1 : +1});
    for (auto& p : out)
        if (!edges_disjoint(p.x, p.y)) throw internal_error("K33 pair table broken");
    return out;
}

std::vector<Cycle> LabeledK33::all_cycles() const {
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j)
            if ((i + j) % 2 == 1) es.emplace_back(i, j);
    SimpleGraph k33(6, std::move(es));
    std::vector<Cycle> out;
    for (int k : {4, 6})
        for (const auto& c : cycles_of_length(k33, k)) {
            std::vector<int> mapped;
            for (int v : c.vertices()) mapped.push_back(map_[v - 1]);
            out.emplace_back(std::move(mapped));
        }
    return out;
}

std::vector<LabeledK5> k5_subgraphs_of_k6() {
    std::vector<LabeledK5> out;
    for (int del = 1; del <= 6; ++del) {
        std::array<int, 5> m{};
        int k = 0;
        for (int v = 1; v <= 6; ++v)
            if (v != del) m[k++] = v;
        out.emplace_back(m);
    }
    return out;
}

std::vector<LabeledK33> k33_subgraphs_of_k6() {
    std::vector<LabeledK33> out;
    // Unordered bipartitions {A, B} of {1..6} with |A| = 3; fix 1 in A.
    std::vector<std::array<int, 3>> parts;
    for (int a = 2; a <= 6; ++a)
        for (int b = a + 1; b <= 6; ++b) parts.push_back({1, a, b});
    std::sort(parts.begin(), parts.end());
    for (auto& A : parts) {
        std::array<int, 3> B{};
        int k = 0;
        for (int v = 2; v <= 6; ++v)
            if (std::find(A.begin(), A.end(), v) == A.end()) B[k++] = v;
        // Template parts alternate around the hexagon: odd positions from A,
        // even positions from B (template edge iff i+j odd).
        out.emplace_back(std::array<int, 6>{A[0], B[0], A[1], B[1], A[2], B[2]});
    }
    return out;
}

std::pair<int, int> D4Graph::edge_ends(int i) {
    switch ((i + 1) / 2) {
        case 1: return {1, 2};
        case 2: return {2, 3};
        case 3: return {3, 4};
        case 4: return {4, 1};
    }
    throw argument_error("D4 edge index out of range");
}

std::vector<D4Graph::FourCycle> D4Graph::four_cycles() {
    std::vector<FourCycle> out;
    for (int a : {1, 2})
        for (int b : {3, 4})
            for (int c : {5, 6})
                for (int d : {7, 8}) {
                    int s = a + b + c + d;
                    out.push_back({{a, b, c, d}, s % 2 == 0 ? +1 : -1});
                }
    return out;
}

std::vector<D4Graph::TwoCycle> D4Graph::two_cycles() {
    return {{{1, 2}}, {{3, 4}}, {{5, 6}}, {{7, 8}}};
}

} // namespace cgr
