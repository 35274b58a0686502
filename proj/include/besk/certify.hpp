#pragma once

#include "besk/merging.hpp"
#include "besk/rational.hpp"

#include <string>
#include <vector>

namespace besk {

// Weight of a pair inside one cluster: 1 when the cluster 1-claims it,
// 2/(k-2) when it 2-claims but does not 1-claim it, 0 otherwise.
enum class weight_class : std::uint8_t { zero, full, two_over_km2 };

rational weight_value(weight_class w, std::int32_t k);

struct cluster_weights {
    std::int32_t part_id = 0;
    std::vector<std::int32_t> edges;
    // nonzero pair weights only, sorted by pair
    std::vector<std::pair<vertex_pair, weight_class>> pair_weights;
    rational total; // w(F)
};

struct weight_certificate {
    std::int32_t r = 0, k = 0, n = 0;
    std::vector<cluster_weights> clusters;
    // global totals w(xy), nonzero entries only, sorted by pair
    std::vector<std::pair<vertex_pair, rational>> pair_totals;
};

// Weights over the 2-cluster partition, claim sets truncated at level 2.
// Requires even k >= 4 and a free input (the partition's precondition).
weight_certificate assign_weights(const hyper_graph& g, std::int32_t k, const partition& m2);

struct cert_report {
    bool pair_lemma_ok = false;    // every w(xy) <= 1
    bool cluster_lemma_ok = false; // every w(F) >= C(r,2)|F|
    bool r_threshold_ok = false;   // 2(r-2)^2 >= 3k-8
    rational bound;                // C(n,2)/C(r,2), lowest terms
    std::int64_t bound_num = 0;    // C(n,2) as written
    std::int64_t bound_den = 1;    // C(r,2) as written
    bool holds = false;            // |G| <= bound
    std::vector<std::string> findings;
};

// Recomputes the certificate from g (deterministic pipeline) and compares;
// a mismatch is an error. All comparisons are exact rationals.
cert_report verify_certificate(const hyper_graph& g, std::int32_t k,
                               const weight_certificate& cert);

struct pair_audit_report {
    std::uint64_t pairs_checked = 0;
    std::uint64_t unclaimed_pairs_with_two_claims = 0; // triggers of the (k-2)/2 cap
    std::uint64_t sum_set_checks = 0;
    std::vector<std::string> findings;
    bool ok() const { return findings.empty(); }
};

// For every pair with no 1-claiming cluster, at most (k-2)/2 clusters may
// 2-claim it; and no pair's per-cluster claim sets may sum to exactly k.
pair_audit_report pair_interaction_audit(const hyper_graph& g, std::int32_t k,
                                         const partition& m2, budget bud = {});

} // namespace besk
