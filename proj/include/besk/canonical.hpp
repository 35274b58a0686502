#pragma once

#include "besk/hypergraph.hpp"

#include <string>

namespace besk {

inline constexpr std::int32_t canonical_max_vertices = 16;

// Canonical label of a graph with n <= 16: two graphs receive equal labels
// iff they are isomorphic (same n and r required). Deterministic.
//
// Computed as the minimum relabeled edge list over the discrete colorings
// reached by iterated partition refinement with individualization. The
// refinement only consumes colors and counts, never vertex ids, so the leaf
// set is equivariant under isomorphism and the minimum is canonical.
std::string canonical_form(const hyper_graph& g);

struct canonical_result {
    std::string label;
    std::vector<std::int32_t> labeling; // old vertex -> canonical position
};

// Label plus one labeling realizing it (the labeling itself is not unique
// when the graph has automorphisms).
canonical_result canonical_labeling(const hyper_graph& g);

} // namespace besk
