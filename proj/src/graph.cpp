#include "cgr/graph.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace cgr {

SimpleGraph::SimpleGraph(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), edges_(std::move(edges)) {
    for (auto& [a, b] : edges_) {
        if (a == b) throw argument_error("loop edge");
        if (a > b) std::swap(a, b);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw argument_error("multi-edge in simple graph");
    std::set<int> vs;
    for (auto& [a, b] : edges_) {
        vs.insert(a);
        vs.insert(b);
    }
    vertices_.assign(vs.begin(), vs.end());
}

bool SimpleGraph::has_vertex(int v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool SimpleGraph::has_edge(int a, int b) const { return edge_id(a, b) >= 0; }

int SimpleGraph::edge_id(int a, int b) const {
    if (a > b) std::swap(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(a, b));
    if (it == edges_.end() || *it != std::make_pair(a, b)) return -1;
    return static_cast<int>(it - edges_.begin());
}

SimpleGraph complete_graph(int n) {
    if (n < 3 || n > 12) throw argument_error("complete_graph: n must be in 3..12");
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) es.emplace_back(i, j);
    return SimpleGraph(n, std::move(es));
}

SimpleGraph vertex_deleted(const SimpleGraph& g, int v) {
    if (!g.has_vertex(v)) throw argument_error("vertex_deleted: unknown vertex");
    std::vector<std::pair<int, int>> es;
    for (auto& [a, b] : g.edges())
        if (a != v && b != v) es.emplace_back(a, b);
    return SimpleGraph(g.n() - 1, std::move(es));
}

Cycle::Cycle(std::vector<int> vertices) : verts_(std::move(vertices)) {
    const int k = static_cast<int>(verts_.size());
    if (k < 2) throw argument_error("cycle too short");
    std::set<int> uniq(verts_.begin(), verts_.end());
    if (static_cast<int>(uniq.size()) != k) throw argument_error("repeated vertex in cycle");

    // Rotate the minimum vertex to the front, then pick the smaller direction.
    auto mn = std::min_element(verts_.begin(), verts_.end());
    std::rotate(verts_.begin(), mn, verts_.end());
    std::vector<int> rev(verts_.size());
    rev[0] = verts_[0];
    for (int i = 1; i < k; ++i) rev[i] = verts_[k - i];
    if (rev < verts_) verts_ = std::move(rev);
}

std::vector<std::pair<int, int>> Cycle::edges() const {
    std::vector<std::pair<int, int>> es;
    const int k = length();
    es.reserve(k);
    for (int i = 0; i < k; ++i) es.emplace_back(verts_[i], verts_[(i + 1) % k]);
    return es;
}

bool Cycle::contains_vertex(int v) const {
    return std::find(verts_.begin(), verts_.end(), v) != verts_.end();
}

bool Cycle::disjoint_from(const Cycle& o) const {
    for (int v : verts_)
        if (o.contains_vertex(v)) return false;
    return true;
}

std::string Cycle::notation() const {
    std::string s = "[";
    bool wide = false;
    for (int v : verts_) wide = wide || v > 9;
    for (size_t i = 0; i < verts_.size(); ++i) {
        if (wide && i) s += ',';
        s += std::to_string(verts_[i]);
    }
    return s + "]";
}

bool Cycle::operator<(const Cycle& o) const {
    if (length() != o.length()) return length() < o.length();
    return verts_ < o.verts_;
}

CyclePair::CyclePair(Cycle a, Cycle b) {
    if (!a.disjoint_from(b)) throw argument_error("cycle pair not disjoint");
    if (b < a) {
        first = std::move(a);
        second = std::move(b);
    } else {
        first = std::move(b);
        second = std::move(a);
    }
}

bool CyclePair::operator<(const CyclePair& o) const {
    if (!(first == o.first)) return first < o.first;
    return second < o.second;
}

std::vector<Cycle> cycles_of_length(const SimpleGraph& g, int k) {
    if (k < 3 || k > g.n()) throw argument_error("cycles_of_length: k out of range");
    std::vector<Cycle> out;
    std::vector<int> path;
    std::set<int> used;

    // DFS from each start vertex; the start stays minimal along the path and the
    // second vertex is kept below the last to skip the reflected copy.
    std::function<void()> extend = [&]() {
        if (static_cast<int>(path.size()) == k) {
            if (g.has_edge(path.back(), path.front()) && path[1] < path.back())
                out.emplace_back(path);
            return;
        }
        for (int v : g.vertices()) {
            if (v <= path.front() || used.count(v)) continue;
            if (!g.has_edge(path.back(), v)) continue;
            path.push_back(v);
            used.insert(v);
            extend();
            path.pop_back();
            used.erase(v);
        }
    };

    for (int s : g.vertices()) {
        path = {s};
        used = {s};
        extend();
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CyclePair> disjoint_cycle_pairs(const SimpleGraph& g, int k, int l) {
    if (k + l > g.n()) throw argument_error("disjoint_cycle_pairs: k + l exceeds n");
    auto ks = cycles_of_length(g, k);
    auto ls = (k == l) ? ks : cycles_of_length(g, l);
    std::vector<CyclePair> out;
    for (size_t i = 0; i < ks.size(); ++i) {
        const size_t j0 = (k == l) ? i + 1 : 0;
        for (size_t j = j0; j < ls.size(); ++j)
            if (ks[i].disjoint_from(ls[j])) out.emplace_back(ks[i], ls[j]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace cgr
