#include "besk/search.hpp"

#include "besk/canonical.hpp"
#include "besk/claims.hpp"
#include "besk/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <random>
#include <set>

namespace besk {

namespace {

std::vector<std::vector<std::int32_t>> all_r_sets(std::int32_t n, std::int32_t r) {
    std::vector<std::vector<std::int32_t>> out;
    std::vector<std::int32_t> cur;
    auto rec = [&](auto&& self, std::int32_t from) -> void {
        if (static_cast<std::int32_t>(cur.size()) == r) {
            out.push_back(cur);
            return;
        }
        for (std::int32_t v = from; v <= n - (r - static_cast<std::int32_t>(cur.size())); ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// Does g + e contain k edges through e spanning at most s vertices? The
// search forbids only the (s, k) family; the check runs against g with e as
// a virtual edge.
verdict extension_verdict(const hyper_graph& g, const std::vector<std::int32_t>& e,
                          std::int32_t s, std::int32_t k, budget bud, std::uint64_t& nodes) {
    auto res = for_each_config_virtual(
        g, edge_subset::whole(g).indices, s, k, e, bud,
        [](const std::vector<std::int32_t>&, const vertex_set&) { return false; });
    nodes += res.nodes;
    return res.verd;
}

struct child_candidate {
    hyper_graph graph;
    std::string label;
};

// The canonical deletion edge: the edge mapping to the lexicographically
// largest mask under a canonical labeling. Acceptance compares canonical
// forms of deletions, so the choice is isomorphism-invariant even though the
// labeling itself is not unique.
std::int32_t canonical_deletion_edge(const hyper_graph& h, const canonical_result& canon) {
    std::int32_t best_edge = -1;
    std::uint32_t best_mask = 0;
    for (std::int32_t i = 0; i < h.edge_count(); ++i) {
        std::uint32_t mask = 0;
        for (auto v : h.edge(i)) mask |= std::uint32_t{1} << canon.labeling[v];
        if (best_edge < 0 || mask > best_mask) {
            best_edge = i;
            best_mask = mask;
        }
    }
    return best_edge;
}

} // namespace

extremal_record search_extremal(std::int32_t n, std::int32_t r, std::int32_t s, std::int32_t k,
                                budget bud, int threads) {
    if (n < r) throw error(errc::invalid_argument, "need n >= r");
    if (n > canonical_max_vertices)
        throw error(errc::too_large, "exact search relies on canonical forms (n <= 16)");
    if (k < 1 || s < r) throw error(errc::invalid_argument, "need k >= 1 and s >= r");

    extremal_record rec;
    rec.n = n;
    rec.r = r;
    rec.s = s;
    rec.k = k;

    const auto candidates = all_r_sets(n, r);
    hyper_graph empty(n, r, {});
    std::vector<hyper_graph> frontier{empty};
    rec.witness = empty;
    rec.value = 0;
    rec.exact = true;

    bool budget_hit = false;
    while (!frontier.empty()) {
        // expand the whole level; children are deduplicated per parent and
        // the canonical-parent test removes cross-parent duplicates
        std::vector<std::vector<child_candidate>> per_parent(frontier.size());
        std::vector<std::uint64_t> per_parent_nodes(frontier.size(), 0);
        std::atomic<bool> level_unknown{false};

        parallel_for(static_cast<std::int64_t>(frontier.size()), threads, [&](std::int64_t pi) {
            const auto& parent = frontier[pi];
            std::set<std::string> seen;
            for (const auto& e : candidates) {
                if (parent.has_edge(e)) continue;
                auto v = extension_verdict(parent, e, s, k, bud, per_parent_nodes[pi]);
                if (v == verdict::unknown) {
                    level_unknown = true;
                    continue;
                }
                if (v == verdict::violated) continue;

                auto ext = parent.with_edge(e);
                std::int32_t forced = -1;
                for (std::int32_t i = 0; i < ext.edge_count(); ++i) {
                    auto ev = ext.edge(i);
                    if (std::equal(ev.begin(), ev.end(), e.begin(), e.end())) forced = i;
                }
                auto canon = canonical_labeling(ext);
                auto del = canonical_deletion_edge(ext, canon);
                bool accept = del == forced;
                if (!accept)
                    accept = canonical_form(ext.without_edge(forced)) ==
                             canonical_form(ext.without_edge(del));
                if (!accept) continue;
                if (seen.insert(canon.label).second)
                    per_parent[pi].push_back({std::move(ext), std::move(canon.label)});
            }
        });

        for (auto c : per_parent_nodes) rec.nodes_explored += c;
        if (level_unknown) rec.exact = false;

        std::vector<child_candidate> level;
        for (auto& chunk : per_parent)
            for (auto& c : chunk) level.push_back(std::move(c));
        if (level.empty()) break;

        // deterministic representative: smallest canonical label at the level
        std::size_t best = 0;
        for (std::size_t i = 1; i < level.size(); ++i)
            if (level[i].label < level[best].label) best = i;
        rec.value = level[best].graph.edge_count();
        rec.witness = level[best].graph;

        if (rec.nodes_explored > bud.max_nodes) {
            budget_hit = true;
            break;
        }
        frontier.clear();
        for (auto& c : level) frontier.push_back(std::move(c.graph));
    }

    if (budget_hit) {
        rec.exact = false;
        // local polish: keep greedily adding any edge that still passes
        bool grew = true;
        while (grew) {
            grew = false;
            for (const auto& e : candidates) {
                if (rec.witness.has_edge(e)) continue;
                std::uint64_t nodes = 0;
                if (extension_verdict(rec.witness, e, s, k, bud, nodes) == verdict::free) {
                    rec.witness = rec.witness.with_edge(e);
                    rec.value = rec.witness.edge_count();
                    grew = true;
                    break;
                }
            }
        }
    }
    return rec;
}

hyper_graph greedy_packing(std::int32_t n, std::int32_t r, std::uint64_t seed) {
    if (n < r) throw error(errc::invalid_argument, "need n >= r");
    std::mt19937_64 rng(seed);
    std::vector<char> pair_used(static_cast<std::size_t>(n) * n, 0);
    auto used = [&](std::int32_t a, std::int32_t b) -> char& {
        return pair_used[static_cast<std::size_t>(a) * n + b];
    };
    std::vector<std::vector<std::int32_t>> edges;

    auto try_insert = [&](const std::vector<std::int32_t>& e) {
        for (std::size_t a = 0; a < e.size(); ++a)
            for (std::size_t b = a + 1; b < e.size(); ++b)
                if (used(e[a], e[b])) return false;
        for (std::size_t a = 0; a < e.size(); ++a)
            for (std::size_t b = a + 1; b < e.size(); ++b)
                used(e[a], e[b]) = used(e[b], e[a]) = 1;
        edges.push_back(e);
        return true;
    };

    // random phase: distinct-vertex proposals until progress stalls
    const std::int32_t stall_cap = 5 * n;
    std::int32_t stall = 0;
    std::vector<std::int32_t> pick(r);
    while (stall < stall_cap) {
        std::vector<char> taken(n, 0);
        for (std::int32_t i = 0; i < r; ++i) {
            std::int32_t v;
            do {
                v = static_cast<std::int32_t>(rng() % n);
            } while (taken[v]);
            taken[v] = 1;
            pick[i] = v;
        }
        std::sort(pick.begin(), pick.end());
        if (try_insert(pick)) stall = 0;
        else ++stall;
    }

    // completion sweep: lexicographic scan with prefix pruning makes the
    // packing maximal
    std::vector<std::int32_t> prefix;
    auto sweep = [&](auto&& self, std::int32_t from) -> void {
        if (static_cast<std::int32_t>(prefix.size()) == r) {
            try_insert(prefix);
            return;
        }
        for (std::int32_t v = from; v <= n - (r - static_cast<std::int32_t>(prefix.size()));
             ++v) {
            bool ok = true;
            for (auto p : prefix)
                if (used(p, v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            prefix.push_back(v);
            self(self, v + 1);
            prefix.pop_back();
        }
    };
    sweep(sweep, 0);

    return hyper_graph(n, r, std::move(edges));
}

rational lower_bound_ratio(const hyper_graph& f, std::int32_t k, budget bud) {
    if (f.edge_count() == 0)
        throw error(errc::invalid_argument, "the ratio is undefined for an empty graph");
    auto rep = is_family_free(f, k, bud);
    if (rep.verd == verdict::violated)
        throw error(errc::not_free, "lower-bound ratio requires a free graph");
    if (rep.verd == verdict::unknown)
        throw error(errc::not_free, "could not verify freeness within the node budget");

    const std::int32_t t = k / 2;
    auto fam = compute_pair_family(edge_subset::whole(f), pair_family_kind::claimed_up_to, {t},
                                   t, {}, bud);
    if (fam.pairs.empty())
        throw error(errc::invalid_argument, "no claimed pairs; ratio undefined");
    return rational(f.edge_count(), 2 * static_cast<std::int64_t>(fam.pairs.size()));
}

hyper_graph random_free_graph(std::int32_t n, std::int32_t r, std::int32_t k,
                              std::int32_t target_edges, std::uint64_t seed,
                              generator_options opts) {
    if (n < r) throw error(errc::invalid_argument, "need n >= r");
    std::mt19937_64 rng(seed);
    hyper_graph g(n, r, {});
    std::int32_t rejections = 0;
    std::vector<std::int32_t> pick(r);
    while (g.edge_count() < target_edges && rejections < opts.max_consecutive_rejections) {
        std::vector<char> taken(n, 0);
        for (std::int32_t i = 0; i < r; ++i) {
            std::int32_t v;
            do {
                v = static_cast<std::int32_t>(rng() % n);
            } while (taken[v]);
            taken[v] = 1;
            pick[i] = v;
        }
        std::sort(pick.begin(), pick.end());
        if (g.has_edge(pick)) {
            ++rejections;
            continue;
        }
        auto rep = incremental_free_check(g, pick, k, opts.check_budget);
        if (rep.verd == verdict::free) {
            g = g.with_edge(pick);
            rejections = 0;
        } else {
            ++rejections; // unknown counts as a rejection, never as an accept
        }
    }
    return g;
}

namespace {

// Greedy hitting set over the packing's forbidden configurations: delete the
// edge in the most live configurations until none remain. Subgraphs inherit
// freeness, so hitting every configuration of the packing frees the
// survivor. Returns the deleted edges; empty optional when the enumeration
// hit the node budget.
std::optional<std::vector<std::int32_t>> hitting_set_repair(const hyper_graph& base,
                                                            std::int32_t k, budget bud) {
    std::vector<std::vector<std::int32_t>> configs;
    for (auto fam : forbidden_family(base.uniformity(), k)) {
        auto res = for_each_config(base, edge_subset::whole(base).indices, fam.s, fam.k, -1,
                                   bud, [&](const std::vector<std::int32_t>& idx,
                                            const vertex_set&) {
                                       configs.push_back(idx);
                                       return true;
                                   });
        if (res.verd == verdict::unknown) return std::nullopt;
    }
    std::vector<std::int64_t> count(base.edge_count(), 0);
    std::vector<std::vector<std::int32_t>> by_edge(base.edge_count());
    for (std::size_t c = 0; c < configs.size(); ++c)
        for (auto e : configs[c]) {
            ++count[e];
            by_edge[e].push_back(static_cast<std::int32_t>(c));
        }
    std::vector<char> dead_edge(base.edge_count(), 0);
    std::vector<char> dead_cfg(configs.size(), 0);
    std::vector<std::int32_t> deleted;
    std::size_t live = configs.size();
    while (live > 0) {
        std::int32_t best = -1;
        for (std::int32_t e = 0; e < base.edge_count(); ++e)
            if (!dead_edge[e] && count[e] > 0 && (best < 0 || count[e] > count[best])) best = e;
        dead_edge[best] = 1;
        deleted.push_back(best);
        for (auto c : by_edge[best]) {
            if (dead_cfg[c]) continue;
            dead_cfg[c] = 1;
            --live;
            for (auto e : configs[c]) --count[e];
        }
    }
    return deleted;
}

} // namespace

construction_report construct_packing(std::int32_t n, std::int32_t r, std::int32_t k,
                                      std::uint64_t seed, budget bud) {
    auto base = greedy_packing(n, r, seed);
    hyper_graph g(n, r, {});
    std::vector<std::int32_t> dropped;

    if (auto deleted = hitting_set_repair(base, k, bud)) {
        std::vector<char> dead(base.edge_count(), 0);
        for (auto e : *deleted) dead[e] = 1;
        std::vector<std::vector<std::int32_t>> kept;
        for (std::int32_t i = 0; i < base.edge_count(); ++i) {
            if (dead[i]) {
                dropped.push_back(i);
                continue;
            }
            auto e = base.edge(i);
            kept.emplace_back(e.begin(), e.end());
        }
        g = hyper_graph(n, r, std::move(kept));
    } else {
        // enumeration over budget: fall back to insertion-order repair
        for (std::int32_t i = 0; i < base.edge_count(); ++i) {
            auto e = base.edge(i);
            std::vector<std::int32_t> ev(e.begin(), e.end());
            if (incremental_free_check(g, ev, k, bud).verd == verdict::free)
                g = g.with_edge(std::move(ev));
            else
                dropped.push_back(i);
        }
    }

    // deletions can unblock other deleted edges; reinstate to a fixpoint
    bool grew = true;
    while (grew && !dropped.empty()) {
        grew = false;
        std::vector<std::int32_t> still_out;
        for (auto i : dropped) {
            auto e = base.edge(i);
            std::vector<std::int32_t> ev(e.begin(), e.end());
            if (incremental_free_check(g, ev, k, bud).verd == verdict::free) {
                g = g.with_edge(std::move(ev));
                grew = true;
            } else {
                still_out.push_back(i);
            }
        }
        dropped = std::move(still_out);
    }

    construction_report out;
    out.freeness = is_family_free(g, k, bud);
    out.density_ratio = rational(static_cast<std::int64_t>(g.edge_count()) *
                                     (static_cast<std::int64_t>(r) * r - r),
                                 static_cast<std::int64_t>(n) * n);
    out.bound_ratio = lower_bound_ratio(g, k, bud);
    out.graph = std::move(g);
    return out;
}

} // namespace besk
