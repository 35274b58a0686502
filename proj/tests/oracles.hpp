// Naive reference implementations used as oracles. Everything here walks
// plain subsets or permutations with no pruning beyond feasibility, so the
// library's pruned searches can be checked against them.
#pragma once

#include "besk/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using besk::hyper_graph;

inline int subset_span(const hyper_graph& g, const std::vector<std::int32_t>& idx) {
    std::set<std::int32_t> verts;
    for (auto i : idx)
        for (auto v : g.edge(i)) verts.insert(v);
    return static_cast<int>(verts.size());
}

// all k-subsets, lexicographically; first subset spanning <= s
inline std::optional<std::vector<std::int32_t>> naive_contains_config(const hyper_graph& g,
                                                                      std::int32_t s,
                                                                      std::int32_t k) {
    const std::int32_t m = g.edge_count();
    if (k > m) return std::nullopt;
    std::vector<std::int32_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        if (subset_span(g, idx) <= s) return idx;
        // next combination
        std::int32_t i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) return std::nullopt;
        ++idx[i];
        for (std::int32_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

inline bool naive_is_free(const hyper_graph& g, std::int32_t k) {
    const std::int32_t r = g.uniformity();
    for (std::int32_t l = 2; l < k; ++l)
        if (naive_contains_config(g, (r - 2) * l + 1, l)) return false;
    return !naive_contains_config(g, (r - 2) * k + 2, k).has_value();
}

// claim levels of a pair over an edge-index universe
inline std::set<std::int32_t> naive_claim_set(const hyper_graph& g,
                                              const std::vector<std::int32_t>& universe,
                                              std::int32_t x, std::int32_t y,
                                              std::int32_t i_max) {
    std::set<std::int32_t> out{0};
    const std::int32_t r = g.uniformity();
    const auto m = static_cast<std::int32_t>(universe.size());
    for (std::int32_t i = 1; i <= std::min(i_max, m); ++i) {
        std::vector<std::int32_t> idx(i);
        std::iota(idx.begin(), idx.end(), 0);
        bool found = false;
        while (!found) {
            std::set<std::int32_t> verts{x, y};
            for (auto p : idx)
                for (auto v : g.edge(universe[p])) verts.insert(v);
            if (static_cast<std::int32_t>(verts.size()) <= (r - 2) * i + 2) found = true;
            std::int32_t t = i - 1;
            while (t >= 0 && idx[t] == m - i + t) --t;
            if (t < 0) break;
            ++idx[t];
            for (std::int32_t j = t + 1; j < i; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (found) out.insert(i);
    }
    return out;
}

// isomorphism by brute force over all vertex permutations (small n only)
inline bool naive_isomorphic(const hyper_graph& a, const hyper_graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.uniformity() != b.uniformity() ||
        a.edge_count() != b.edge_count())
        return false;
    const std::int32_t n = a.vertex_count();
    auto b_edges = b.edge_lists();
    std::sort(b_edges.begin(), b_edges.end());
    std::vector<std::int32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<std::vector<std::int32_t>> mapped;
        for (std::int32_t i = 0; i < a.edge_count(); ++i) {
            std::vector<std::int32_t> e;
            for (auto v : a.edge(i)) e.push_back(perm[v]);
            std::sort(e.begin(), e.end());
            mapped.push_back(std::move(e));
        }
        std::sort(mapped.begin(), mapped.end());
        if (mapped == b_edges) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// exact extremal count by depth-first search over lex-increasing edge sets;
// freeness is re-established naively at every node
inline std::int32_t naive_extremal(std::int32_t n, std::int32_t r, std::int32_t s,
                                   std::int32_t k) {
    std::vector<std::vector<std::int32_t>> all;
    std::vector<std::int32_t> cur;
    auto gen = [&](auto&& self, std::int32_t from) -> void {
        if (static_cast<std::int32_t>(cur.size()) == r) {
            all.push_back(cur);
            return;
        }
        for (std::int32_t v = from; v <= n - (r - static_cast<std::int32_t>(cur.size())); ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    gen(gen, 0);

    std::int32_t best = 0;
    std::vector<std::vector<std::int32_t>> chosen;
    auto ok = [&]() {
        hyper_graph g(n, r, chosen);
        return !naive_contains_config(g, s, k).has_value();
    };
    auto dfs = [&](auto&& self, std::size_t from) -> void {
        best = std::max(best, static_cast<std::int32_t>(chosen.size()));
        for (std::size_t i = from; i < all.size(); ++i) {
            chosen.push_back(all[i]);
            if (ok()) self(self, i + 1);
            chosen.pop_back();
        }
    };
    dfs(dfs, 0);
    return best;
}

// plain random r-graph, not necessarily free
inline hyper_graph random_graph(std::int32_t n, std::int32_t r, std::int32_t m,
                                std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::set<std::vector<std::int32_t>> edges;
    std::int32_t guard = 0;
    while (static_cast<std::int32_t>(edges.size()) < m && ++guard < 10000) {
        std::vector<std::int32_t> e;
        while (static_cast<std::int32_t>(e.size()) < r) {
            auto v = static_cast<std::int32_t>(rng() % n);
            if (std::find(e.begin(), e.end(), v) == e.end()) e.push_back(v);
        }
        std::sort(e.begin(), e.end());
        edges.insert(e);
    }
    return hyper_graph(n, r, {edges.begin(), edges.end()});
}

// the 7-point projective plane as a triple system
inline hyper_graph fano_plane() {
    return hyper_graph(7, 3,
                       {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6},
                        {2, 4, 5}});
}

} // namespace oracle
