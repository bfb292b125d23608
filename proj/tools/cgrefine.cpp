// Command-line front end: generate embeddings, verify the integral identities,
// run the rectilinear censuses, batch seeded trials, search for minimal K7.
//
// Exit codes: 0 success, 1 I/O or internal error, 2 usage error,
// 3 mathematical-identity violation.

#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cgr/io.hpp"
#include "cgr/parallel.hpp"

using namespace cgr;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IdentityFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
}

SpatialEmbedding generate(const std::string& graph, const std::string& source, std::uint64_t seed,
                          long span) {
    GraphSpec spec;
    try {
        spec = GraphSpec::from_name(graph);
    } catch (const argument_error& e) {
        throw UsageError(e.what());
    }
    if (spec.kind == GraphKind::Complete && (spec.n < 5 || spec.n > 7) )
        throw UsageError("gen supports K5, K6, K7, K33 and D4");
    if (source == "moment") {
        if (spec.kind == GraphKind::D4) return moment_curve_d4();
        if (spec.kind == GraphKind::K33) return moment_curve_k33();
        return moment_curve_embedding(spec.n);
    }
    if (source == "random") {
        if (spec.kind == GraphKind::D4) return random_d4(seed, span);
        return random_rectilinear(spec, seed, span);
    }
    throw UsageError("--source must be moment or random");
}

SpatialEmbedding load_checked(const std::string& path) {
    Json j;
    try {
        j = Json::parse(read_file(path));
    } catch (const Json::exception& e) {
        throw io_error("bad JSON in " + path + ": " + e.what());
    }
    auto e = embedding_from_json(j);
    const auto rep = validate_embedding(e);
    if (!rep.ok) {
        std::string msg = "file does not describe an embedding:";
        for (auto& v : rep.violations) msg += "\n  " + v.kind + ": " + v.witness;
        throw io_error(msg);
    }
    return e;
}

// All identity verifiers applicable to one embedding. Returns reports; any
// non-holding identity raises IdentityFailure after printing it.
Json verify_one(const SpatialEmbedding& e, std::uint64_t proj_seed) {
    Json out = Json::object();
    Json reports = Json::array();
    bool all_hold = true;
    auto add = [&](const IdentityReport& r) {
        reports.push_back(identity_to_json(r));
        all_hold = all_hold && r.holds;
    };

    if (e.spec.kind == GraphKind::Complete && e.spec.n == 6) {
        const auto r = invariant_report(e, proj_seed);
        add(verify_main1(r));
        add(verify_cg1(r));
        add(verify_simon_lemma(e, proj_seed));
    } else if (e.spec.kind == GraphKind::Complete && e.spec.n == 7) {
        const auto r = invariant_report(e, proj_seed);
        add(verify_main2(r));
        const auto [eq5, eq6] = verify_main3(r);
        add(eq5);
        add(eq6);
        add(verify_lemma33(r));
        add(verify_cg2(r));
        const auto fm = verify_fm_bounds(r);
        reports.push_back(fm_bounds_to_json(fm));
        all_hold = all_hold && fm.holds;
    } else {
        add(verify_homology_invariants(e, proj_seed));
    }
    out["graph"] = e.spec.name();
    out["proj_seed"] = proj_seed;
    out["identities"] = reports;
    out["all_hold"] = all_hold;
    if (!all_hold) throw IdentityFailure(out.dump(2));
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"Knot and link invariants of spatial complete graphs, with exact verification of the refined integral identities"};
    app.require_subcommand(1);

    std::string graph = "K6", source = "moment", out_path, format = "json", file;
    std::uint64_t seed = 0, proj_seed = 0;
    long span = 1000;
    int trials = 1, budget = 5000;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "output file (default stdout)");
        cmd->add_option("--format", format, "json|csv|text")->check(CLI::IsMember({"json", "csv", "text"}));
        cmd->add_option("--proj-seed", proj_seed, "projection direction seed");
    };

    auto* gen = app.add_subcommand("gen", "generate an embedding file");
    gen->add_option("--graph", graph, "K5|K33|K6|K7|D4")->required();
    gen->add_option("--source", source, "moment|random");
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("--span", span, "lattice span");
    add_common(gen);

    auto* verify = app.add_subcommand("verify", "verify all applicable identities");
    verify->add_option("file", file, "embedding JSON")->required();
    add_common(verify);

    auto* census = app.add_subcommand("census", "rectilinear K6/K7 knot and link census");
    census->add_option("file", file, "embedding JSON")->required();
    add_common(census);

    auto* batch = app.add_subcommand("batch", "gen+verify+census over a seed range");
    batch->add_option("--graph", graph, "K5|K33|K6|K7|D4")->required();
    batch->add_option("--trials", trials, "number of seeded trials")->required();
    batch->add_option("--seed", seed, "first seed");
    batch->add_option("--span", span, "lattice span");
    add_common(batch);

    auto* search = app.add_subcommand("search", "find a rectilinear K7 with minimal a2 sum");
    search->add_option("--budget", budget, "trial budget");
    search->add_option("--seed", seed, "search seed");
    search->add_option("--span", span, "lattice span (default 30)");
    search->get_option("--span")->default_val(30);
    add_common(search);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (gen->parsed()) {
        auto e = generate(graph, source, seed, span);
        const auto rep = validate_embedding(e);
        emit(embedding_to_json(e).dump(2) + "\n", out_path);
        std::cerr << "validated: " << (rep.ok ? "ok" : "FAILED") << ", " << e.spec.name()
                  << (e.rectilinear() ? ", rectilinear" : ", polyline") << "\n";
        return 0;
    }

    if (verify->parsed()) {
        auto e = load_checked(file);
        auto out = verify_one(e, proj_seed);
        if (format == "csv" && e.spec.kind == GraphKind::Complete && (e.spec.n == 6 || e.spec.n == 7)) {
            emit(invariant_report_csv(invariant_report(e, proj_seed)), out_path);
        } else {
            emit(out.dump(2) + "\n", out_path);
        }
        return 0;
    }

    if (census->parsed()) {
        auto e = load_checked(file);
        if (e.spec.kind != GraphKind::Complete || (e.spec.n != 6 && e.spec.n != 7))
            throw UsageError("census expects a K6 or K7 embedding");
        if (!e.rectilinear()) throw UsageError("census requires a rectilinear embedding");
        const auto r = invariant_report(e, proj_seed);
        const auto c = e.spec.n == 6 ? census_k6(r) : census_k7(r);
        if (format == "csv") {
            emit(invariant_report_csv(r), out_path);
        } else {
            emit(census_to_json(c, e.spec).dump(2) + "\n", out_path);
        }
        if (e.spec.n == 6) std::cerr << "case " << c.k6_case << "\n";
        return 0;
    }

    if (batch->parsed()) {
        if (trials < 1) throw UsageError("--trials must be >= 1");
        GraphSpec spec;
        try {
            spec = GraphSpec::from_name(graph);
        } catch (const argument_error& e) {
            throw UsageError(e.what());
        }
        Json agg = Json::object();
        agg["graph"] = spec.name();
        agg["trials"] = trials;
        agg["first_seed"] = seed;
        Json failures = Json::array();
        std::map<std::string, int> case_freq;
        long long minimal_count = 0;
        for (int t = 0; t < trials; ++t) {
            const std::uint64_t s = seed + static_cast<std::uint64_t>(t);
            SpatialEmbedding e;
            try {
                e = (spec.kind == GraphKind::D4) ? random_d4(s, span) : random_rectilinear(spec, s, span);
            } catch (const argument_error& ex) {
                throw UsageError(ex.what());
            }
            try {
                verify_one(e, proj_seed);
                if (spec.kind == GraphKind::Complete && (spec.n == 6 || spec.n == 7)) {
                    const auto r = invariant_report(e, proj_seed);
                    const auto c = spec.n == 6 ? census_k6(r) : census_k7(r);
                    if (spec.n == 6)
                        case_freq[c.k6_case]++;
                    else if (c.sum_a2_gamma7 == 1)
                        ++minimal_count;
                }
            } catch (const std::exception& ex) {
                failures.push_back(Json{{"seed", s}, {"error", ex.what()}});
            }
        }
        Json cases = Json::object();
        for (auto& [k, v] : case_freq) cases[k] = v;
        agg["case_frequencies"] = cases;
        agg["minimal_k7_count"] = minimal_count;
        agg["failures"] = failures;
        emit(agg.dump(2) + "\n", out_path);
        if (!failures.empty()) throw IdentityFailure("batch recorded failures");
        return 0;
    }

    if (search->parsed()) {
        if (budget < 1) throw UsageError("--budget must be >= 1");
        auto found = search_minimal_k7(seed, budget, span);
        if (!found) {
            std::cerr << "not found within budget\n";
            Json j;
            j["found"] = false;
            emit(j.dump(2) + "\n", out_path);
            return 0;
        }
        const auto r = invariant_report(*found, proj_seed);
        const auto c = census_k7(r);
        Json j;
        j["found"] = true;
        j["embedding"] = embedding_to_json(*found);
        j["census"] = census_to_json(c, found->spec);
        emit(j.dump(2) + "\n", out_path);
        return 0;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const argument_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const IdentityFailure& e) {
        std::cerr << "identity violation:\n" << e.what() << "\n";
        return 3;
    } catch (const invariant_violation& e) {
        std::cerr << "identity violation: " << e.what() << "\n";
        return 3;
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
