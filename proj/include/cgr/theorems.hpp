#pragma once

#include <map>
#include <optional>
#include <string>

#include "cgr/invariants.hpp"

namespace cgr {

// Per-cycle a2 and per-pair lk tables for one K6 or K7 embedding and one
// seeded projection direction. All invariants are dual-route checked as they
// are computed.
struct InvariantReport {
    GraphSpec spec;
    bool rectilinear = true;
    std::uint64_t embedding_hash = 0;
    std::uint64_t proj_seed = 0;

    std::map<int, std::vector<std::pair<Cycle, int>>> cycle_a2;      // by length, 4..n
    std::vector<std::pair<CyclePair, int>> pairs_33;                 // Gamma_{3,3}
    std::vector<std::pair<CyclePair, int>> pairs_43;                 // Gamma_{4,3}, K7 only

    long long sum_a2(int len) const;
    long long sum_lk2_33() const;
    long long sum_lk2_43() const;
    long long sum_lk_33() const;
    int odd_lk_count_33() const;
    int odd_lk_count_43() const;
};

InvariantReport invariant_report(const SpatialEmbedding& e, std::uint64_t proj_seed);

struct IdentityReport {
    std::string identity;
    long long lhs = 0, rhs = 0;
    bool holds = false;
    std::map<std::string, long long> breakdown;
};

// 2(sum a2 over 6-cycles - sum a2 over 5-cycles) = sum lk^2 over Gamma_{3,3} - 1.
IdentityReport verify_main1(const InvariantReport& r);
// 7 S7 - 6 S6 - 2 S5 = 2 L43 - 21.
IdentityReport verify_main2(const InvariantReport& r);
// 14(S7 - S6) = 4 L43 - L33 - 35 and 7(S7 - 2 S5) = 2 L43 + 3 L33 - 42;
// their combination 3*(first) + (second) recovers 7*(main2), checked.
std::pair<IdentityReport, IdentityReport> verify_main3(const InvariantReport& r);
// 2(S6 - 2 S5) = L33 - 7 on K7.
IdentityReport verify_lemma33(const InvariantReport& r);
// Mod-2 reductions of the two classical statements.
IdentityReport verify_cg1(const InvariantReport& r);   // K6: sum lk odd
IdentityReport verify_cg2(const InvariantReport& r);   // K7: sum a2 over 7-cycles odd

// At least 7 odd-lk pairs in Gamma_{3,3} and 14 in Gamma_{4,3} of K7.
struct FmBoundsReport {
    int odd_33 = 0, odd_43 = 0;
    long long lk2_33 = 0, lk2_43 = 0;
    bool holds = false;
};
FmBoundsReport verify_fm_bounds(const InvariantReport& r);

// Sum of Simon^2 over the ten K3,3 subgraphs minus the six K5 subgraphs
// equals 4 * sum lk^2 over the triangle pairs, for any K6 embedding.
IdentityReport verify_simon_lemma(const SpatialEmbedding& e, std::uint64_t proj_seed);

// L^2 = 8 alpha + 1 for K5 / K3,3; |alpha| = |lk lk'| for D4.
IdentityReport verify_homology_invariants(const SpatialEmbedding& e, std::uint64_t proj_seed);

struct CensusReport {
    // K6 fields
    long long n6_trefoil = 0;
    long long n33_hopf = 0;
    std::string k6_case;   // "(0,1)" or "(1,3)"
    // K7 fields
    long long n43_hopf = 0;
    long long n43_torus24 = 0;
    long long n7_trefoil = 0;
    long long n7_figure_eight = 0;
    long long sum_a2_gamma7 = 0;
    bool holds = false;
    std::string detail;
};

// Rectilinear censuses; classification violations and theorem-breaking counts
// throw invariant_violation.
CensusReport census_k6(const InvariantReport& r);
CensusReport census_k7(const InvariantReport& r);

// Seeded random search for a rectilinear K7 with sum a2 over 7-cycles = 1.
std::optional<SpatialEmbedding> search_minimal_k7(std::uint64_t seed, int budget, long span = 30);

// Sum of a2 over the 7-cycles only (the search predicate).
long long sum_a2_gamma7(const SpatialEmbedding& e, std::uint64_t proj_seed);

} // namespace cgr
