#pragma once

#include "besk/hypergraph.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace besk {

// One member of a forbidden family: k edges on at most s vertices.
struct family_member {
    std::int32_t s = 0;
    std::int32_t k = 0;
    friend bool operator==(const family_member&, const family_member&) = default;
};

struct config_witness {
    std::vector<std::int32_t> edge_indices;
    std::int32_t span = 0;
    family_member family;
};

struct config_search_result {
    verdict verd = verdict::free;
    std::optional<config_witness> witness;
    std::uint64_t nodes = 0;
    bool found() const { return verd == verdict::violated; }
};

struct freeness_report {
    verdict verd = verdict::free;
    std::optional<config_witness> violation;
    std::uint64_t nodes = 0;
    bool free() const { return verd == verdict::free; }
};

// Forbidden family behind k-sparseness: the ((r-2)k+2, k) member plus the
// tight ((r-2)l+1, l) members for every l in [2, k-1].
std::vector<family_member> forbidden_family(std::int32_t r, std::int32_t k);

// Exact search for k distinct edges spanning at most s vertices.
//
// Branch and bound over lexicographic edge subsets. Prunes on partial-union
// span (complete: every prefix of a witness spans at most s) and on the
// pairwise-intersection budget: any witness satisfies
//   sum over pairs |e_i ∩ e_j|  >=  k*r - s,
// while each remaining pair contributes at most the graph's maximum pairwise
// overlap. Candidate edges are pulled from vertex- or pair-incidence lists
// once the bounds force a minimum overlap with the partial union.
config_search_result contains_config(const hyper_graph& g, std::int32_t s, std::int32_t k,
                                     budget bud = {});
config_search_result contains_config(const edge_subset& f, std::int32_t s, std::int32_t k,
                                     budget bud = {});

// Enumerates every k-subset of the universe with span <= s, in lexicographic
// order. Returning false from the callback stops the walk. Returns unknown
// if the node budget was hit before the walk finished.
using config_sink = std::function<bool(const std::vector<std::int32_t>&, const vertex_set&)>;
config_search_result for_each_config(const hyper_graph& g,
                                     const std::vector<std::int32_t>& universe, std::int32_t s,
                                     std::int32_t k, std::int32_t forced_edge, budget bud,
                                     const config_sink& sink);

// As above, but with a fixed extra edge that is not part of the graph: the
// subset consists of the virtual edge plus k-1 universe edges. The sink sees
// index -1 for the virtual edge. This checks prospective insertions without
// rebuilding the graph.
config_search_result for_each_config_virtual(const hyper_graph& g,
                                             const std::vector<std::int32_t>& universe,
                                             std::int32_t s, std::int32_t k,
                                             const std::vector<std::int32_t>& virtual_edge,
                                             budget bud, const config_sink& sink);

// True iff the graph avoids every member of forbidden_family(r, k). Members
// are checked in increasing l order; small configurations are the cheapest
// and the most common violations.
freeness_report is_family_free(const hyper_graph& g, std::int32_t k, budget bud = {});

// Freeness of g + new_edge assuming g itself is already free: only subsets
// through the new edge are enumerated. The report (and any witness indices)
// refer to the extended graph.
freeness_report incremental_free_check(const hyper_graph& g,
                                       const std::vector<std::int32_t>& new_edge, std::int32_t k,
                                       budget bud = {});

} // namespace besk
