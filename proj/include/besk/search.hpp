#pragma once

#include "besk/configs.hpp"
#include "besk/hypergraph.hpp"
#include "besk/rational.hpp"

#include <cstdint>

namespace besk {

struct extremal_record {
    std::int32_t n = 0, r = 0, s = 0, k = 0;
    std::int32_t value = 0;   // exact maximum, or a verified lower bound
    hyper_graph witness;      // value edges, avoids every (s,k)-configuration
    std::uint64_t nodes_explored = 0;
    bool exact = false;
};

// Exact maximum number of edges of an n-vertex r-graph in which no k edges
// span at most s vertices.
//
// Orderly generation: graphs are grown edge by edge; a child G+e survives
// only if e maps to the canonical deletion edge of G+e (so each isomorphism
// class is produced from exactly one parent) and the extension passes the
// incremental configuration check. Exact when the frontier empties within
// the node budget; otherwise the best witness is polished by local search
// and reported as a lower bound.
extremal_record search_extremal(std::int32_t n, std::int32_t r, std::int32_t s, std::int32_t k,
                                budget bud = {}, int threads = 1);

// Maximal linear r-graph (every vertex pair in at most one edge) built by
// seeded random insertion followed by a lexicographic completion sweep.
// Deterministic per seed.
hyper_graph greedy_packing(std::int32_t n, std::int32_t r, std::uint64_t seed);

// |F| / (2 |P_{<= floor(k/2)}(F)|) as an exact rational; requires f to pass
// the freeness check first.
rational lower_bound_ratio(const hyper_graph& f, std::int32_t k, budget bud = {});

struct generator_options {
    std::int32_t max_consecutive_rejections = 200;
    budget check_budget = {};
};

// Random free graph: seeded edge proposals accepted iff the incremental
// configuration check passes; stops at target_edges or when proposals keep
// failing. The output is free by construction.
hyper_graph random_free_graph(std::int32_t n, std::int32_t r, std::int32_t k,
                              std::int32_t target_edges, std::uint64_t seed,
                              generator_options opts = {});

struct construction_report {
    hyper_graph graph;
    rational density_ratio; // |G| / (n^2 / (r^2 - r))
    freeness_report freeness;
    rational bound_ratio; // lower_bound_ratio of the construction
};

// Packing pipeline: greedy_packing, then edge-by-edge re-verification that
// drops any edge whose insertion would create a forbidden configuration,
// then a full freeness recheck.
construction_report construct_packing(std::int32_t n, std::int32_t r, std::int32_t k,
                                      std::uint64_t seed, budget bud = {});

} // namespace besk
