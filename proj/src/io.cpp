#include "cgr/io.hpp"

#include <fstream>
#include <sstream>

namespace cgr {

namespace {

Json rat_to_json(const Rat& q) {
    return to_string(q);
}

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(Int(static_cast<long>(j.get<long long>())));
    if (j.is_string()) return parse_rat(j.get<std::string>());
    throw io_error("expected rational as integer or \"p/q\" string");
}

Json point_to_json(const Vec3& p) {
    return Json::array({rat_to_json(p.x), rat_to_json(p.y), rat_to_json(p.z)});
}

Vec3 point_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 3) throw io_error("point must be a 3-element array");
    return {rat_from_json(j[0]), rat_from_json(j[1]), rat_from_json(j[2])};
}

std::string edge_key(const GraphSpec& spec, int eid) {
    if (spec.kind == GraphKind::D4) return "e" + std::to_string(eid + 1);
    const auto ge = spec.edges()[eid];
    return std::to_string(ge.a) + "-" + std::to_string(ge.b);
}

int edge_from_key(const GraphSpec& spec, const std::string& key) {
    if (spec.kind == GraphKind::D4) {
        if (key.size() >= 2 && key[0] == 'e') {
            const int i = std::stoi(key.substr(1));
            if (i >= 1 && i <= 8) return i - 1;
        }
        throw io_error("bad D4 edge key: " + key);
    }
    const auto dash = key.find('-');
    if (dash == std::string::npos) throw io_error("bad edge key: " + key);
    const int a = std::stoi(key.substr(0, dash));
    const int b = std::stoi(key.substr(dash + 1));
    const int id = spec.edge_id(a, b);
    if (id < 0) throw io_error("edge not in graph: " + key);
    return id;
}

} // namespace

Json embedding_to_json(const SpatialEmbedding& e) {
    Json j;
    j["graph"] = e.spec.name();
    Json verts = Json::object();
    for (int v = 1; v <= e.spec.n; ++v) verts[std::to_string(v)] = point_to_json(e.pos(v));
    j["vertices"] = verts;
    Json paths = Json::object();
    for (size_t eid = 0; eid < e.edge_path.size(); ++eid) {
        if (e.edge_path[eid].empty()) continue;
        Json pts = Json::array();
        for (auto& p : e.edge_path[eid]) pts.push_back(point_to_json(p));
        paths[edge_key(e.spec, static_cast<int>(eid))] = pts;
    }
    if (!paths.empty()) j["edge_paths"] = paths;
    return j;
}

SpatialEmbedding embedding_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("graph") || !j.contains("vertices"))
        throw io_error("embedding file needs \"graph\" and \"vertices\"");
    SpatialEmbedding e;
    e.spec = GraphSpec::from_name(j.at("graph").get<std::string>());
    e.vertex_pos.resize(e.spec.n);
    const auto& verts = j.at("vertices");
    if (!verts.is_object() || static_cast<int>(verts.size()) != e.spec.n)
        throw io_error("vertex table must list every vertex exactly once");
    for (int v = 1; v <= e.spec.n; ++v) {
        const std::string key = std::to_string(v);
        if (!verts.contains(key)) throw io_error("missing vertex " + key);
        e.vertex_pos[v - 1] = point_from_json(verts.at(key));
    }
    e.edge_path.assign(e.spec.edges().size(), {});
    if (j.contains("edge_paths")) {
        for (auto& [key, val] : j.at("edge_paths").items()) {
            const int eid = edge_from_key(e.spec, key);
            std::vector<Vec3> pts;
            for (auto& p : val) pts.push_back(point_from_json(p));
            e.edge_path[eid] = std::move(pts);
        }
    }
    return e;
}

Json identity_to_json(const IdentityReport& r) {
    Json j;
    j["identity"] = r.identity;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["holds"] = r.holds;
    Json b = Json::object();
    for (auto& [k, v] : r.breakdown) b[k] = v;
    j["breakdown"] = b;
    return j;
}

Json census_to_json(const CensusReport& r, const GraphSpec& spec) {
    Json j;
    j["graph"] = spec.name();
    j["holds"] = r.holds;
    j["detail"] = r.detail;
    if (spec.n == 6) {
        j["n6_trefoil"] = r.n6_trefoil;
        j["n33_hopf"] = r.n33_hopf;
        j["case"] = r.k6_case;
    } else {
        j["n33_hopf"] = r.n33_hopf;
        j["n43_hopf"] = r.n43_hopf;
        j["n43_torus24"] = r.n43_torus24;
        j["n7_trefoil"] = r.n7_trefoil;
        j["n7_figure_eight"] = r.n7_figure_eight;
        j["sum_a2_gamma7"] = r.sum_a2_gamma7;
    }
    return j;
}

Json fm_bounds_to_json(const FmBoundsReport& r) {
    Json j;
    j["identity"] = "fm-bounds";
    j["odd_lk_gamma33"] = r.odd_33;
    j["odd_lk_gamma43"] = r.odd_43;
    j["sum_lk2_gamma33"] = r.lk2_33;
    j["sum_lk2_gamma43"] = r.lk2_43;
    j["holds"] = r.holds;
    return j;
}

Json invariant_report_to_json(const InvariantReport& r) {
    Json j;
    j["graph"] = r.spec.name();
    j["rectilinear"] = r.rectilinear;
    j["embedding_hash"] = r.embedding_hash;
    j["proj_seed"] = r.proj_seed;
    Json cyc = Json::object();
    for (auto& [len, table] : r.cycle_a2) {
        Json rows = Json::array();
        for (auto& [c, a2] : table) rows.push_back(Json{{"cycle", c.notation()}, {"a2", a2}});
        cyc["gamma" + std::to_string(len)] = rows;
    }
    j["cycles"] = cyc;
    auto pair_rows = [](const std::vector<std::pair<CyclePair, int>>& ps) {
        Json rows = Json::array();
        for (auto& [p, lk] : ps) rows.push_back(Json{{"pair", p.notation()}, {"lk", lk}});
        return rows;
    };
    j["pairs_33"] = pair_rows(r.pairs_33);
    if (r.spec.n == 7) j["pairs_43"] = pair_rows(r.pairs_43);
    return j;
}

std::string invariant_report_csv(const InvariantReport& r) {
    std::ostringstream out;
    out << "kind,object,value\n";
    for (auto& [len, table] : r.cycle_a2)
        for (auto& [c, a2] : table) out << "a2," << c.notation() << "," << a2 << "\n";
    for (auto& [p, lk] : r.pairs_33) out << "lk," << p.notation() << "," << lk << "\n";
    for (auto& [p, lk] : r.pairs_43) out << "lk," << p.notation() << "," << lk << "\n";
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot write " + path);
    out << content;
    if (!out) throw io_error("write failed: " + path);
}

} // namespace cgr
