#pragma once

#include "besk/common.hpp"

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace besk {

// Fixed-capacity vertex bitset. Span and union costs scale with n/64, which
// dominates the configuration search and the claim enumeration.
class vertex_set {
public:
    vertex_set() = default;
    explicit vertex_set(std::int32_t n) : n_(n), words_((n + 63) / 64, 0) {}

    std::int32_t capacity() const { return n_; }

    void add(std::int32_t v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    bool contains(std::int32_t v) const { return (words_[v >> 6] >> (v & 63)) & 1; }

    void clear() { for (auto& w : words_) w = 0; }

    void unite(const vertex_set& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    }

    int popcount() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    // |this ∪ o| without materializing the union.
    int union_count(const vertex_set& o) const {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] | o.words_[i]);
        return c;
    }

    // |this ∩ o|
    int intersect_count(const vertex_set& o) const {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }

    bool subset_of(const vertex_set& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    std::vector<std::int32_t> to_list() const {
        std::vector<std::int32_t> out;
        for (std::int32_t v = 0; v < n_; ++v)
            if (contains(v)) out.push_back(v);
        return out;
    }

    friend bool operator==(const vertex_set&, const vertex_set&) = default;

private:
    std::int32_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

// Immutable r-uniform hypergraph on vertices 0..n-1. Edges are strictly
// sorted r-sets kept in lexicographic order; duplicate edges are rejected.
// All queries are read-only, so a graph can be shared across workers.
class hyper_graph {
public:
    hyper_graph() = default;
    hyper_graph(std::int32_t n, std::int32_t r, std::vector<std::vector<std::int32_t>> edges);

    std::int32_t vertex_count() const { return n_; }
    std::int32_t uniformity() const { return r_; }
    std::int32_t edge_count() const { return static_cast<std::int32_t>(masks_.size()); }

    std::span<const std::int32_t> edge(std::int32_t i) const {
        return {edges_flat_.data() + static_cast<std::size_t>(i) * r_, static_cast<std::size_t>(r_)};
    }
    const vertex_set& edge_mask(std::int32_t i) const { return masks_[i]; }

    std::vector<std::vector<std::int32_t>> edge_lists() const;

    // Edge indices containing both u and v (sorted ascending), possibly empty.
    std::span<const std::int32_t> pair_edges(std::int32_t u, std::int32_t v) const;
    // Pairs covered by at least one edge, as sorted keys, with their edge lists.
    std::span<const std::uint64_t> covered_pair_keys() const { return pair_keys_; }
    std::span<const std::int32_t> pair_edges_at(std::size_t pair_pos) const {
        return {pair_edges_.data() + pair_off_[pair_pos],
                pair_edges_.data() + pair_off_[pair_pos + 1]};
    }
    // Edge indices containing v.
    std::span<const std::int32_t> vertex_edges(std::int32_t v) const {
        return {inc_edges_.data() + inc_off_[v], inc_edges_.data() + inc_off_[v + 1]};
    }

    bool has_edge(const std::vector<std::int32_t>& sorted_edge) const;

    // Largest pairwise edge intersection, i.e. max |e ∩ f| over distinct
    // edges. Exact when cheap to compute, otherwise a safe upper bound.
    int max_pair_overlap() const { return max_overlap_; }

    hyper_graph with_edge(std::vector<std::int32_t> sorted_edge) const;
    hyper_graph without_edge(std::int32_t index) const;

    friend bool operator==(const hyper_graph& a, const hyper_graph& b) {
        return a.n_ == b.n_ && a.r_ == b.r_ && a.edges_flat_ == b.edges_flat_;
    }

private:
    void build_indexes();

    std::int32_t n_ = 0;
    std::int32_t r_ = 2;
    std::vector<std::int32_t> edges_flat_;
    std::vector<vertex_set> masks_;
    int max_overlap_ = 0;

    // pair -> edges (CSR over sorted pair keys)
    std::vector<std::uint64_t> pair_keys_;
    std::vector<std::int32_t> pair_off_;
    std::vector<std::int32_t> pair_edges_;
    // vertex -> edges (CSR)
    std::vector<std::int32_t> inc_off_;
    std::vector<std::int32_t> inc_edges_;

    std::size_t edges_size() const { return edges_flat_.size() / r_; }
};

// Subset of a graph's edges, the carrier for subgraphs F ⊆ G.
struct edge_subset {
    const hyper_graph* graph = nullptr;
    std::vector<std::int32_t> indices; // sorted ascending

    edge_subset() = default;
    edge_subset(const hyper_graph& g, std::vector<std::int32_t> idx);

    static edge_subset whole(const hyper_graph& g);

    std::int32_t size() const { return static_cast<std::int32_t>(indices.size()); }
    vertex_set vertices() const;
    // |V(F)|; 0 for the empty subset.
    int span() const;
};

// .hg text format: optional '#' comment lines, a header "r n m", then m lines
// of r strictly increasing vertex ids. Serialization is bit-exact: sorted
// edges, single spaces, trailing newline, no comments.
hyper_graph parse_hypergraph(const std::string& text);
std::string serialize_hypergraph(const hyper_graph& g);

} // namespace besk
