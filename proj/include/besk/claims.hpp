#pragma once

#include "besk/configs.hpp"
#include "besk/hypergraph.hpp"

#include <optional>
#include <vector>

namespace besk {

// Hard cap on claim levels; enumeration cost grows as C(|F|, i).
inline constexpr std::int32_t max_claim_level = 16;

// C_F(xy) truncated at i_max: the set of i with some i edges of F spanning,
// together with {x,y}, at most (r-2)i + 2 vertices. 0 is always a member.
// Levels whose search hit the node budget are flagged unknown instead of
// being guessed either way.
struct claim_set {
    vertex_pair pair;
    std::uint32_t members = 1; // bit i set <=> i is claimed; bit 0 always set
    std::uint32_t unknown = 0; // bit i set <=> budget prevented deciding level i
    std::int32_t i_max = 0;

    bool has(std::int32_t i) const { return i <= i_max && ((members >> i) & 1); }
    bool decided(std::int32_t i) const { return i <= i_max && !((unknown >> i) & 1); }
    bool any_unknown() const { return unknown != 0; }
    std::vector<std::int32_t> to_list() const;
};

claim_set compute_claim_set(const edge_subset& f, vertex_pair xy, std::int32_t i_max,
                            budget bud = {});

enum class pair_family_kind {
    claimed_by_set, // P_A: pairs with A ⊆ C_F(xy)
    claimed_at,     // P_i
    two_not_one,    // pairs with 2 ∈ C and 1 ∉ C, inside C(V(F),2)
    claimed_up_to,  // P_{<=t}: pairs xy in C(V(F),2) with C_F(xy) ∩ [1..t] nonempty
};

struct pair_family {
    pair_family_kind kind;
    std::vector<std::int32_t> params;
    std::vector<vertex_pair> pairs; // sorted
    bool truncated = false;         // some membership was budget-undecided
};

// Pairs range over C(V(F),2) unless an ambient vertex list is supplied
// (allowed for claimed_by_set / claimed_at only).
pair_family compute_pair_family(const edge_subset& f, pair_family_kind kind,
                                const std::vector<std::int32_t>& params, std::int32_t i_max,
                                const std::optional<std::vector<std::int32_t>>& ambient = {},
                                budget bud = {});

// Two edges meeting in exactly two vertices.
struct diamond {
    std::int32_t e1 = 0;
    std::int32_t e2 = 0;
    vertex_pair core;
};

std::vector<diamond> diamonds(const edge_subset& f);

// A diamond D ⊆ F is flexible when each of its edges meets V(F \ D) in
// exactly one vertex and those two attach vertices are distinct, so that
// |V(D) ∩ V(F \ D)| = 2.
bool is_flexible_diamond(const edge_subset& f, const diamond& d);

} // namespace besk
