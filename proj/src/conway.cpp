#include "cgr/conway.hpp"

#include <functional>
#include <map>
#include <set>
#include <unordered_map>

namespace cgr {

int ConwayPolynomial::degree() const {
    for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k)
        if (c[k] != 0) return k;
    return -1;
}

void ConwayPolynomial::trim() { c.resize(degree() + 1); }

bool ConwayPolynomial::operator==(const ConwayPolynomial& o) const {
    ConwayPolynomial a = *this, b = o;
    a.trim();
    b.trim();
    return a.c == b.c;
}

std::string ConwayPolynomial::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = 0; k <= degree(); ++k) {
        if (c[k] == 0) continue;
        if (!s.empty()) s += c[k] > 0 ? " + " : " - ";
        else if (c[k] < 0) s += "-";
        const long long a = c[k] > 0 ? c[k] : -c[k];
        if (a != 1 || k == 0) s += std::to_string(a);
        if (k >= 1) s += "z";
        if (k >= 2) s += "^" + std::to_string(k);
    }
    return s;
}

ConwayPolynomial operator+(const ConwayPolynomial& a, const ConwayPolynomial& b) {
    ConwayPolynomial r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t k = 0; k < r.c.size(); ++k) r.c[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
    r.trim();
    return r;
}

ConwayPolynomial operator-(const ConwayPolynomial& a, const ConwayPolynomial& b) {
    ConwayPolynomial r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t k = 0; k < r.c.size(); ++k) r.c[k] = a.coeff(static_cast<int>(k)) - b.coeff(static_cast<int>(k));
    r.trim();
    return r;
}

ConwayPolynomial shift_z(const ConwayPolynomial& a) {
    ConwayPolynomial r;
    r.c.assign(a.c.size() + 1, 0);
    for (size_t k = 0; k < a.c.size(); ++k) r.c[k + 1] = a.c[k];
    r.trim();
    return r;
}

namespace {

// Split diagrams have vanishing Conway polynomial: check whether the
// components form one piece under shared crossings.
bool is_split(const LinkDiagram& d) {
    const int nc = d.ncomps();
    if (nc <= 1) return false;
    std::map<int, std::vector<int>> by_cid;
    for (int c = 0; c < nc; ++c)
        for (auto& e : d.comps[c]) by_cid[e.cid].push_back(c);
    std::vector<int> parent(nc);
    for (int i = 0; i < nc; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (auto& [cid, cs] : by_cid)
        if (cs.size() == 2) parent[find(cs[0])] = find(cs[1]);
    for (int i = 1; i < nc; ++i)
        if (find(i) != find(0)) return true;
    return false;
}

// First crossing met on its under-strand before being met over, scanning
// components in order from position 0. Returns -1 when descending.
int first_non_descending(const LinkDiagram& d) {
    std::set<int> seen;
    for (auto& comp : d.comps)
        for (auto& e : comp) {
            if (seen.count(e.cid)) continue;
            if (!e.over) return e.cid;
            seen.insert(e.cid);
        }
    return -1;
}

struct SkeinCtx {
    std::unordered_map<std::string, ConwayPolynomial> memo;
    long nodes = 0;
};

ConwayPolynomial skein_rec(const LinkDiagram& d, SkeinCtx& ctx) {
    if (++ctx.nodes > 1000000) throw internal_error("conway_skein: recursion budget exceeded");

    if (d.ncross == 0) return d.ncomps() == 1 ? ConwayPolynomial{{1}} : ConwayPolynomial{};
    if (is_split(d)) return {};

    const std::string key = d.canonical_encoding();
    auto it = ctx.memo.find(key);
    if (it != ctx.memo.end()) return it->second;

    ConwayPolynomial result;
    const int pivot = first_non_descending(d);
    if (pivot < 0) {
        result = d.ncomps() == 1 ? ConwayPolynomial{{1}} : ConwayPolynomial{};
    } else {
        auto [over, under] = d.find_crossing(pivot);
        const int s = d.comps[over.comp][over.pos].sign;
        const auto switched = skein_rec(switch_crossing(d, pivot), ctx);
        const auto smoothed = skein_rec(smooth_crossing(d, pivot), ctx);
        // nabla(L+) = nabla(L-) + z nabla(L0); nabla(L-) = nabla(L+) - z nabla(L0).
        result = (s > 0) ? switched + shift_z(smoothed) : switched - shift_z(smoothed);
    }
    ctx.memo.emplace(std::move(key), result);
    return result;
}

} // namespace

ConwayPolynomial conway_skein(const LinkDiagram& d) {
    if (d.ncomps() < 1) throw argument_error("empty diagram");
    SkeinCtx ctx;
    return skein_rec(d, ctx);
}

} // namespace cgr
