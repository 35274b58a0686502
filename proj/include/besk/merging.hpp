#pragma once

#include "besk/claims.hpp"
#include "besk/configs.hpp"
#include "besk/hypergraph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace besk {

enum class partition_stage { trivial, one_clusters, two_clusters, partial };

// Disjoint cover of the edge set. Parts are sorted edge-index lists, ordered
// by their smallest edge; a part's id is that smallest edge index, which is
// stable under merging (the union keeps the smaller id).
struct partition {
    const hyper_graph* graph = nullptr;
    partition_stage stage = partition_stage::trivial;
    std::vector<std::vector<std::int32_t>> parts;

    std::int32_t part_id(std::size_t i) const { return parts[i].front(); }
    std::optional<std::size_t> find_part(std::int32_t id) const;
};

struct merge_event {
    enum class kind : std::uint8_t { connect, absorb }; // 1|1 vs 1|2
    std::int32_t part_a = 0; // smaller id; the union keeps this id
    std::int32_t part_b = 0;
    vertex_pair via;
    kind mode = kind::connect;
    // absorb events record the orientation: which side 1-claims the pair and
    // which side 2-claims it
    std::int32_t one_side = -1;
    std::int32_t two_side = -1;
};

// Self-contained replay record: applying events to start_parts reproduces
// the final partition.
struct merge_log {
    partition_stage from_stage = partition_stage::trivial;
    std::vector<std::vector<std::int32_t>> start_parts;
    std::vector<merge_event> events;
};

partition replay_log(const hyper_graph& g, const merge_log& log, partition_stage final_stage);

// Maximal connected components under the share-at-least-two-vertices edge
// relation. Deterministic; the log records one connect event per union step,
// discovered in lexicographic pair order.
std::pair<partition, merge_log> merge_1(const hyper_graph& g);

struct merge_options {
    // caller vouches that is_family_free(g, k) already succeeded
    bool assume_free_checked = false;
    // randomize the merge order (for order-invariance experiments); the
    // default picks the lexicographically minimal (part, part, pair) triple
    std::optional<std::uint64_t> random_order_seed;
};

// Exhaustive 1|2-merging starting from the 1-clusters: while some part
// 1-claims a pair that another part 2-claims, merge them. Freeness of g is
// required (checked unless the caller vouches); it keeps every level-1 and
// level-2 claim inside a single 1-cluster, so part claim sets merge by
// union.
std::pair<partition, merge_log> merge_12(const hyper_graph& g, std::int32_t k,
                                         const partition& m1, merge_options opts = {});

// Ordering X_1..X_s of f \ f0 such that f0 plus any prefix stays connected.
std::vector<std::int32_t> trimming_order(const edge_subset& f, const edge_subset& f0);

struct cluster_stats_t {
    std::vector<std::int32_t> composition; // 1-cluster sizes in merge order
    std::int32_t merging_number = 0;       // m(F)
    std::int32_t size = 0;                 // |F|
};

cluster_stats_t cluster_stats(const merge_log& m2_log, std::int32_t part_id);

// The 1-clusters a final part was merged from, in start_parts order.
std::vector<std::vector<std::int32_t>> one_clusters_of(const merge_log& m2_log,
                                                       std::int32_t part_id);

// Pair keys 1-claimed and 2-claimed by an edge set whose pairwise edge
// intersections are at most 2 (guaranteed by freeness): level 1 is the
// in-edge pairs, level 2 the pairs inside some diamond's span.
struct level_pair_sets {
    std::vector<std::uint64_t> ones; // sorted
    std::vector<std::uint64_t> twos; // sorted
};
level_pair_sets level_pairs(const hyper_graph& g, const std::vector<std::int32_t>& edges);

// Witness that a (k+1)-edge sub-cluster bounded by two flexible diamonds
// exists around a requested 1-cluster.
struct property_p_witness {
    std::vector<std::vector<std::int32_t>> ordered_clusters;
    std::vector<std::int32_t> h_edges;
    diamond first_diamond;
    diamond last_diamond;
    vertex_pair first_pair; // 2-claimed by T_1, 1-claimed by T_2
    vertex_pair last_pair;  // 2-claimed by T_l, 1-claimed by T_{l-1}
};

struct property_p_result {
    bool budget_exceeded = false;
    std::optional<property_p_witness> witness;
};

inline constexpr std::size_t property_p_cluster_cap = 12;

// Searches merge orderings of the part's 1-clusters for a sequence
// T_1..T_l with total size k+1, the requested cluster among them, T_1 and
// T_l flexible diamonds in the union, each claiming (at level 2 but not 1)
// a pair 1-claimed by its neighbour cluster. Exact up to the cluster cap.
property_p_result check_property_p(const hyper_graph& g, std::int32_t k,
                                   const std::vector<std::vector<std::int32_t>>& one_clusters,
                                   std::int32_t requested_cluster, budget bud = {});

// Every 1-cluster of the part admits a witness.
property_p_result has_property_p(const hyper_graph& g, std::int32_t k,
                                 const std::vector<std::vector<std::int32_t>>& one_clusters,
                                 budget bud = {});

enum class verify_mode { trusted, audit };

struct structure_report {
    std::int32_t part_id = 0;
    std::int32_t size = 0;
    std::int32_t merging_number = 0;
    std::vector<std::int32_t> composition;
    bool one_cluster_sizes_ok = true; // every composition entry <= k-1
    bool size_not_k = true;           // |F| != k
    bool size_bound_applies = false;  // |F| >= k+1
    bool size_bound_ok = true;        // then |F| >= 2m(F) - k + 3
    std::int64_t p1_count = 0;
    std::int64_t p1_expected = 0;
    bool p1_exact = true;
    std::int64_t p12_count = 0;
    std::int64_t p12_bound = 0;
    bool p12_bound_ok = true;

    bool all_ok() const {
        return one_cluster_sizes_ok && size_not_k && size_bound_ok && p1_exact && p12_bound_ok;
    }
};

// Checks the structural laws of a final 2-cluster. In trusted mode a failed
// check throws (the input was certified free, so a failure is a bug); in
// audit mode failures are returned as report flags.
structure_report verify_structure(const hyper_graph& g, std::int32_t k, const merge_log& m2_log,
                                  std::int32_t part_id, verify_mode mode = verify_mode::audit);

// Bitmask of sums attainable by picking one claim value per part (0 is
// always available), truncated at max_sum.
std::uint32_t claim_sum_set(const hyper_graph& g, const partition& parts, vertex_pair uv,
                            std::int32_t max_sum, budget bud = {});

} // namespace besk
