#include "besk/configs.hpp"

#include <algorithm>

namespace besk {

std::vector<family_member> forbidden_family(std::int32_t r, std::int32_t k) {
    std::vector<family_member> fam;
    for (std::int32_t l = 2; l < k; ++l) fam.push_back({(r - 2) * l + 1, l});
    fam.push_back({(r - 2) * k + 2, k});
    return fam;
}

namespace {

// Shared state for one subset walk. The first slot may hold a "virtual"
// edge that is not part of the graph; checks of prospective insertions run
// against the existing graph without rebuilding it.
struct config_walk {
    const hyper_graph* g;
    const std::vector<std::int32_t>* universe;
    std::vector<char> in_universe;
    std::int32_t s;
    std::int32_t k;
    std::int32_t mu; // max pairwise overlap, caps future intersection gains
    std::uint64_t node_cap;
    std::uint64_t nodes = 0;
    const config_sink* sink;
    bool stopped = false;   // sink requested stop
    bool exhausted = false; // budget hit

    std::vector<const vertex_set*> chosen_masks;
    std::vector<std::int32_t> chosen_ids;        // -1 for the virtual edge
    std::vector<vertex_set> union_stack;         // union_stack[t] = union of first t
    std::vector<std::int32_t> stamp;
    std::int32_t stamp_cur = 0;
    std::vector<std::vector<std::int32_t>> cand_stack;

    config_walk(const hyper_graph& graph, const std::vector<std::int32_t>& uni, std::int32_t s_,
                std::int32_t k_, budget bud, const config_sink& cb)
        : g(&graph), universe(&uni), s(s_), k(k_), mu(graph.max_pair_overlap()),
          node_cap(bud.max_nodes), sink(&cb) {
        in_universe.assign(graph.edge_count(), 0);
        for (auto i : uni) in_universe[i] = 1;
        union_stack.assign(static_cast<std::size_t>(k) + 1, vertex_set(graph.vertex_count()));
        stamp.assign(graph.edge_count(), -1);
        cand_stack.assign(static_cast<std::size_t>(k) + 1, {});
        chosen_masks.reserve(k);
        chosen_ids.reserve(k);
    }

    // Pairwise-intersection total of the chosen edges plus a cap on what the
    // remaining d edges can contribute; prune when it cannot reach kr - s.
    bool budget_reachable(std::int64_t sigma, std::int32_t t, std::int32_t d) const {
        std::int64_t cap = sigma + static_cast<std::int64_t>(d) * t * mu +
                           static_cast<std::int64_t>(d) * (d - 1) / 2 * mu;
        return cap >= static_cast<std::int64_t>(k) * g->uniformity() - s;
    }

    std::int64_t overlap_with_chosen(const vertex_set& em) const {
        std::int64_t ov = 0;
        for (auto* cm : chosen_masks) ov += em.intersect_count(*cm);
        return ov;
    }

    // Candidates with index > last, inside the universe, meeting the current
    // union in at least need_ov vertices. Sources: the whole universe,
    // vertex incidence lists, or pair incidence lists, by rising need_ov.
    void collect_candidates(std::vector<std::int32_t>& out, std::int32_t last,
                            std::int32_t need_ov) {
        out.clear();
        if (need_ov <= 0 || chosen_masks.empty()) {
            auto it = std::upper_bound(universe->begin(), universe->end(), last);
            for (; it != universe->end(); ++it)
                if (in_universe[*it]) out.push_back(*it);
            if (!chosen_masks.empty()) order_most_overlapping_first(out);
            return;
        }
        const auto& u = union_stack[chosen_masks.size()];
        ++stamp_cur;
        auto push = [&](std::int32_t e) {
            if (e > last && in_universe[e] && stamp[e] != stamp_cur) {
                stamp[e] = stamp_cur;
                out.push_back(e);
            }
        };
        auto verts = u.to_list();
        if (need_ov == 1) {
            for (auto v : verts)
                for (auto e : g->vertex_edges(v)) push(e);
        } else {
            for (std::size_t a = 0; a < verts.size(); ++a)
                for (std::size_t b = a + 1; b < verts.size(); ++b)
                    for (auto e : g->pair_edges(verts[a], verts[b])) push(e);
        }
        order_most_overlapping_first(out);
    }

    // witnesses are dense, so early span growth finds them sooner; ties fall
    // back to index order, which keeps the walk deterministic
    std::vector<std::pair<std::int32_t, std::int32_t>> order_buf;
    void order_most_overlapping_first(std::vector<std::int32_t>& out) {
        const auto& u = union_stack[chosen_masks.size()];
        order_buf.clear();
        for (auto e : out) order_buf.emplace_back(-u.intersect_count(g->edge_mask(e)), e);
        std::sort(order_buf.begin(), order_buf.end());
        for (std::size_t i = 0; i < order_buf.size(); ++i) out[i] = order_buf[i].second;
    }

    bool descend(std::int32_t last, std::int64_t sigma) {
        if (stopped || exhausted) return false;
        if (++nodes > node_cap) {
            exhausted = true;
            return false;
        }
        const auto t = static_cast<std::int32_t>(chosen_masks.size());
        if (t == k) {
            if (!(*sink)(chosen_ids, union_stack[t])) stopped = true;
            return !stopped;
        }
        const std::int32_t d = k - t;
        if (!budget_reachable(sigma, t, d)) return true;

        const auto& u = union_stack[t];
        const std::int32_t span = t == 0 ? 0 : u.popcount();
        const std::int32_t need_ov = g->uniformity() - (s - span);
        auto& cands = cand_stack[t];
        collect_candidates(cands, last, need_ov);

        // minimum contribution the next edge must make to the pairwise total
        std::int64_t ovp_min = static_cast<std::int64_t>(k) * g->uniformity() - s - sigma -
                               static_cast<std::int64_t>(d - 1) * (t + 1) * mu -
                               static_cast<std::int64_t>(d - 1) * (d - 2) / 2 * mu;

        for (auto e : cands) {
            const auto& em = g->edge_mask(e);
            if (t > 0 && u.union_count(em) > s) continue;
            std::int64_t ovp = overlap_with_chosen(em);
            if (ovp < ovp_min) continue;
            chosen_masks.push_back(&em);
            chosen_ids.push_back(e);
            union_stack[t + 1] = u;
            union_stack[t + 1].unite(em);
            bool keep_going = descend(e, sigma + ovp);
            chosen_masks.pop_back();
            chosen_ids.pop_back();
            if (!keep_going) return false;
        }
        return true;
    }

    // seed = a real edge index, or a mask of an edge outside the graph
    void run() { descend(-1, 0); }

    void run_forced(std::int32_t forced) {
        if (!in_universe[forced]) return;
        const auto& fm = g->edge_mask(forced);
        if (fm.popcount() > s) return;
        chosen_masks.push_back(&fm);
        chosen_ids.push_back(forced);
        union_stack[1] = union_stack[0];
        union_stack[1].unite(fm);
        in_universe[forced] = 0; // not a candidate for the remaining slots
        descend(-1, 0);
    }

    void run_virtual(const vertex_set& vmask) {
        if (vmask.popcount() > s) return;
        chosen_masks.push_back(&vmask);
        chosen_ids.push_back(-1);
        union_stack[1] = union_stack[0];
        union_stack[1].unite(vmask);
        descend(-1, 0);
    }
};

config_search_result finish(config_walk& walk) {
    config_search_result res;
    res.nodes = walk.nodes;
    if (walk.stopped)
        res.verd = verdict::violated;
    else if (walk.exhausted)
        res.verd = verdict::unknown;
    else
        res.verd = verdict::free;
    return res;
}

} // namespace

config_search_result for_each_config(const hyper_graph& g,
                                     const std::vector<std::int32_t>& universe, std::int32_t s,
                                     std::int32_t k, std::int32_t forced_edge, budget bud,
                                     const config_sink& sink) {
    if (k < 1) throw error(errc::invalid_argument, "configuration size must be at least 1");
    if (static_cast<std::int32_t>(universe.size()) < k || s < g.uniformity()) {
        config_search_result res;
        res.verd = verdict::free;
        return res;
    }
    config_walk walk(g, universe, s, k, bud, sink);
    if (forced_edge >= 0) walk.run_forced(forced_edge);
    else walk.run();
    return finish(walk);
}

config_search_result for_each_config_virtual(const hyper_graph& g,
                                             const std::vector<std::int32_t>& universe,
                                             std::int32_t s, std::int32_t k,
                                             const std::vector<std::int32_t>& virtual_edge,
                                             budget bud, const config_sink& sink) {
    if (k < 1) throw error(errc::invalid_argument, "configuration size must be at least 1");
    config_search_result res;
    if (static_cast<std::int32_t>(universe.size()) < k - 1 || s < g.uniformity()) {
        res.verd = verdict::free;
        return res;
    }
    vertex_set vmask(g.vertex_count());
    for (auto v : virtual_edge) vmask.add(v);
    config_walk walk(g, universe, s, k, bud, sink);
    // the virtual edge can overlap existing edges in up to r-1 vertices
    // regardless of the graph's own maximum, so widen the pruning cap
    walk.mu = std::max(walk.mu, std::min<std::int32_t>(g.uniformity() - 1, vmask.popcount()));
    walk.run_virtual(vmask);
    return finish(walk);
}

namespace {

config_search_result first_config(const hyper_graph& g, const std::vector<std::int32_t>& universe,
                                  std::int32_t s, std::int32_t k, std::int32_t forced,
                                  budget bud) {
    std::optional<config_witness> found;
    auto sink = [&](const std::vector<std::int32_t>& idx, const vertex_set& u) {
        found = config_witness{idx, u.popcount(), {s, k}};
        return false;
    };
    auto res = for_each_config(g, universe, s, k, forced, bud, sink);
    res.witness = std::move(found);
    return res;
}

} // namespace

config_search_result contains_config(const hyper_graph& g, std::int32_t s, std::int32_t k,
                                     budget bud) {
    if (s < g.uniformity()) throw error(errc::invalid_argument, "s must be at least r");
    return first_config(g, edge_subset::whole(g).indices, s, k, -1, bud);
}

config_search_result contains_config(const edge_subset& f, std::int32_t s, std::int32_t k,
                                     budget bud) {
    if (s < f.graph->uniformity()) throw error(errc::invalid_argument, "s must be at least r");
    return first_config(*f.graph, f.indices, s, k, -1, bud);
}

freeness_report is_family_free(const hyper_graph& g, std::int32_t k, budget bud) {
    if (k < 2) throw error(errc::invalid_argument, "freeness is defined for k >= 2");
    freeness_report rep;
    auto universe = edge_subset::whole(g).indices;
    bool any_unknown = false;
    for (auto fam : forbidden_family(g.uniformity(), k)) {
        budget rem{bud.max_nodes > rep.nodes ? bud.max_nodes - rep.nodes : 0};
        auto res = first_config(g, universe, fam.s, fam.k, -1, rem);
        rep.nodes += res.nodes;
        if (res.verd == verdict::violated) {
            rep.verd = verdict::violated;
            rep.violation = std::move(res.witness);
            return rep;
        }
        if (res.verd == verdict::unknown) any_unknown = true;
    }
    rep.verd = any_unknown ? verdict::unknown : verdict::free;
    return rep;
}

freeness_report incremental_free_check(const hyper_graph& g,
                                       const std::vector<std::int32_t>& new_edge, std::int32_t k,
                                       budget bud) {
    auto sorted = new_edge;
    std::sort(sorted.begin(), sorted.end());
    if (static_cast<std::int32_t>(sorted.size()) != g.uniformity() ||
        std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw error(errc::wrong_arity, "new edge must have r distinct vertices");
    if (sorted.front() < 0 || sorted.back() >= g.vertex_count())
        throw error(errc::vertex_out_of_range, "new edge vertex outside [0, n)");
    if (g.has_edge(sorted))
        throw error(errc::invalid_argument, "incremental check requires a fresh edge");

    // index the new edge would get in the extended graph's lex order; used
    // to report witnesses in that graph's numbering
    std::int32_t insert_pos = 0;
    {
        std::int32_t lo = 0, hi = g.edge_count();
        while (lo < hi) {
            std::int32_t mid = lo + (hi - lo) / 2;
            auto e = g.edge(mid);
            if (std::lexicographical_compare(e.begin(), e.end(), sorted.begin(), sorted.end()))
                lo = mid + 1;
            else
                hi = mid;
        }
        insert_pos = lo;
    }
    auto to_ext = [&](std::int32_t i) { return i < insert_pos ? i : i + 1; };

    freeness_report rep;
    auto universe = edge_subset::whole(g).indices;
    bool any_unknown = false;
    for (auto fam : forbidden_family(g.uniformity(), k)) {
        budget rem{bud.max_nodes > rep.nodes ? bud.max_nodes - rep.nodes : 0};
        std::optional<config_witness> found;
        auto sink = [&](const std::vector<std::int32_t>& idx, const vertex_set& u) {
            config_witness w;
            for (auto i : idx) w.edge_indices.push_back(i < 0 ? insert_pos : to_ext(i));
            std::sort(w.edge_indices.begin(), w.edge_indices.end());
            w.span = u.popcount();
            w.family = fam;
            found = std::move(w);
            return false;
        };
        auto res = for_each_config_virtual(g, universe, fam.s, fam.k, sorted, rem, sink);
        rep.nodes += res.nodes;
        if (res.verd == verdict::violated) {
            rep.verd = verdict::violated;
            rep.violation = std::move(found);
            return rep;
        }
        if (res.verd == verdict::unknown) any_unknown = true;
    }
    rep.verd = any_unknown ? verdict::unknown : verdict::free;
    return rep;
}

} // namespace besk
