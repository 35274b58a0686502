#include "besk/merging.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace besk {

namespace {

struct union_find {
    std::vector<std::int32_t> parent;
    explicit union_find(std::int32_t n) : parent(n) {
        for (std::int32_t i = 0; i < n; ++i) parent[i] = i;
    }
    std::int32_t find(std::int32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    // keeps the smaller root as representative
    bool unite(std::int32_t a, std::int32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent[b] = a;
        return true;
    }
};

std::vector<std::vector<std::int32_t>> groups_of(union_find& uf, std::int32_t n) {
    std::map<std::int32_t, std::vector<std::int32_t>> by_root;
    for (std::int32_t i = 0; i < n; ++i) by_root[uf.find(i)].push_back(i);
    std::vector<std::vector<std::int32_t>> parts;
    parts.reserve(by_root.size());
    for (auto& [root, members] : by_root) parts.push_back(std::move(members));
    return parts;
}

} // namespace

std::optional<std::size_t> partition::find_part(std::int32_t id) const {
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i].front() == id) return i;
    return std::nullopt;
}

partition replay_log(const hyper_graph& g, const merge_log& log, partition_stage final_stage) {
    std::map<std::int32_t, std::vector<std::int32_t>> live;
    for (const auto& p : log.start_parts) live[p.front()] = p;
    for (const auto& ev : log.events) {
        auto a = live.find(ev.part_a);
        auto b = live.find(ev.part_b);
        if (a == live.end() || b == live.end())
            throw error(errc::unknown_part, "merge log references a missing part");
        auto merged = a->second;
        merged.insert(merged.end(), b->second.begin(), b->second.end());
        std::sort(merged.begin(), merged.end());
        live.erase(b);
        live[ev.part_a] = std::move(merged);
    }
    partition out;
    out.graph = &g;
    out.stage = final_stage;
    for (auto& [id, part] : live) out.parts.push_back(std::move(part));
    return out;
}

std::pair<partition, merge_log> merge_1(const hyper_graph& g) {
    const std::int32_t m = g.edge_count();
    merge_log log;
    log.from_stage = partition_stage::trivial;
    log.start_parts.resize(m);
    for (std::int32_t i = 0; i < m; ++i) log.start_parts[i] = {i};

    union_find uf(m);
    // Edges sharing >= 2 vertices share a pair, so walking the pair index in
    // lexicographic key order finds every union deterministically.
    auto keys = g.covered_pair_keys();
    for (std::size_t p = 0; p < keys.size(); ++p) {
        auto list = g.pair_edges_at(p);
        for (std::size_t i = 1; i < list.size(); ++i) {
            std::int32_t ra = uf.find(list[0]);
            std::int32_t rb = uf.find(list[i]);
            if (ra == rb) continue;
            if (ra > rb) std::swap(ra, rb);
            log.events.push_back(
                {ra, rb, pair_from_key(keys[p]), merge_event::kind::connect, ra, rb});
            uf.unite(ra, rb);
        }
    }

    partition out;
    out.graph = &g;
    out.stage = partition_stage::one_clusters;
    out.parts = groups_of(uf, m);
    return {std::move(out), std::move(log)};
}

level_pair_sets level_pairs(const hyper_graph& g, const std::vector<std::int32_t>& edges) {
    level_pair_sets out;
    for (auto ei : edges) {
        auto e = g.edge(ei);
        for (std::size_t a = 0; a < e.size(); ++a)
            for (std::size_t b = a + 1; b < e.size(); ++b)
                out.ones.push_back(pair_key(e[a], e[b]));
    }
    for (std::size_t a = 0; a < edges.size(); ++a)
        for (std::size_t b = a + 1; b < edges.size(); ++b) {
            const auto& ma = g.edge_mask(edges[a]);
            const auto& mb = g.edge_mask(edges[b]);
            int inter = ma.intersect_count(mb);
            if (inter < 2) continue;
            if (inter > 2)
                throw error(errc::not_free,
                            "two edges share more than two vertices; the graph is not free");
            vertex_set u = ma;
            u.unite(mb);
            auto verts = u.to_list();
            for (std::size_t x = 0; x < verts.size(); ++x)
                for (std::size_t y = x + 1; y < verts.size(); ++y)
                    out.twos.push_back(pair_key(verts[x], verts[y]));
        }
    auto dedupe = [](std::vector<std::uint64_t>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    dedupe(out.ones);
    dedupe(out.twos);
    return out;
}

namespace {

struct merge12_state {
    const hyper_graph* g;
    // per live part id
    std::map<std::int32_t, std::vector<std::int32_t>> parts;
    std::map<std::int32_t, level_pair_sets> claims;
    // pair key -> part ids claiming it at each level
    struct pair_entry {
        std::vector<std::int32_t> ones;
        std::vector<std::int32_t> twos;
    };
    std::map<std::uint64_t, pair_entry> by_pair;
    // candidate (smaller id, larger id, pair key) triples
    std::set<std::tuple<std::int32_t, std::int32_t, std::uint64_t>> candidates;

    void add_triples_for(std::uint64_t key) {
        const auto& e = by_pair[key];
        for (auto i : e.ones)
            for (auto j : e.twos) {
                if (i == j) continue;
                candidates.emplace(std::min(i, j), std::max(i, j), key);
            }
    }

    void remove_triples_for(std::uint64_t key) {
        const auto& e = by_pair[key];
        for (auto i : e.ones)
            for (auto j : e.twos) {
                if (i == j) continue;
                candidates.erase({std::min(i, j), std::max(i, j), key});
            }
    }

    // substitutes `to` for `from` where `from` actually appears
    static void replace_id(std::vector<std::int32_t>& v, std::int32_t from, std::int32_t to) {
        auto it = std::lower_bound(v.begin(), v.end(), from);
        if (it == v.end() || *it != from) return;
        v.erase(it);
        auto at = std::lower_bound(v.begin(), v.end(), to);
        if (at == v.end() || *at != to) v.insert(at, to);
    }

    void merge(std::int32_t a, std::int32_t b) {
        // union the edge lists and the claim sets; levels 1 and 2 never span
        // distinct 1-clusters, so no recomputation is needed
        auto& pa = parts[a];
        auto& pb = parts[b];
        pa.insert(pa.end(), pb.begin(), pb.end());
        std::sort(pa.begin(), pa.end());
        parts.erase(b);

        auto& ca = claims[a];
        auto& cb = claims[b];
        std::vector<std::uint64_t> touched;
        for (auto k : ca.ones) touched.push_back(k);
        for (auto k : ca.twos) touched.push_back(k);
        for (auto k : cb.ones) touched.push_back(k);
        for (auto k : cb.twos) touched.push_back(k);
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());

        for (auto k : touched) remove_triples_for(k);
        auto unite = [](std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src) {
            dst.insert(dst.end(), src.begin(), src.end());
            std::sort(dst.begin(), dst.end());
            dst.erase(std::unique(dst.begin(), dst.end()), dst.end());
        };
        unite(ca.ones, cb.ones);
        unite(ca.twos, cb.twos);
        claims.erase(b);
        for (auto k : touched) {
            auto& e = by_pair[k];
            replace_id(e.ones, b, a);
            replace_id(e.twos, b, a);
        }
        for (auto k : touched) add_triples_for(k);
    }
};

} // namespace

std::pair<partition, merge_log> merge_12(const hyper_graph& g, std::int32_t k,
                                         const partition& m1, merge_options opts) {
    if (m1.stage != partition_stage::one_clusters || m1.graph != &g)
        throw error(errc::not_m1_input, "merge_12 expects the 1-cluster partition of g");
    {
        auto fresh = merge_1(g).first;
        if (fresh.parts != m1.parts)
            throw error(errc::not_m1_input, "partition does not match merge_1(g)");
    }
    if (!opts.assume_free_checked) {
        auto rep = is_family_free(g, k);
        if (rep.verd == verdict::violated)
            throw error(errc::not_free, "graph contains a forbidden configuration");
        if (rep.verd == verdict::unknown)
            throw error(errc::not_free, "could not verify freeness within the node budget");
    }

    merge12_state st;
    st.g = &g;
    for (const auto& part : m1.parts) {
        auto id = part.front();
        st.parts[id] = part;
        st.claims[id] = level_pairs(g, part);
        for (auto key : st.claims[id].ones) st.by_pair[key].ones.push_back(id);
        for (auto key : st.claims[id].twos) st.by_pair[key].twos.push_back(id);
    }
    for (auto& [key, entry] : st.by_pair) {
        std::sort(entry.ones.begin(), entry.ones.end());
        std::sort(entry.twos.begin(), entry.twos.end());
        st.add_triples_for(key);
    }

    merge_log log;
    log.from_stage = partition_stage::one_clusters;
    log.start_parts = m1.parts;

    std::optional<std::mt19937_64> rng;
    if (opts.random_order_seed) rng.emplace(*opts.random_order_seed);

    while (!st.candidates.empty()) {
        auto it = st.candidates.begin();
        if (rng) {
            auto skip = (*rng)() % st.candidates.size();
            std::advance(it, static_cast<std::ptrdiff_t>(skip));
        }
        auto [a, b, key] = *it;
        const auto& entry = st.by_pair[key];
        bool a_one = std::binary_search(entry.ones.begin(), entry.ones.end(), a);
        bool a_two = std::binary_search(entry.twos.begin(), entry.twos.end(), a);
        bool b_one = std::binary_search(entry.ones.begin(), entry.ones.end(), b);
        bool b_two = std::binary_search(entry.twos.begin(), entry.twos.end(), b);
        merge_event ev;
        ev.part_a = a;
        ev.part_b = b;
        ev.via = pair_from_key(key);
        ev.mode = merge_event::kind::absorb;
        if (a_one && b_two) {
            ev.one_side = a;
            ev.two_side = b;
        } else if (b_one && a_two) {
            ev.one_side = b;
            ev.two_side = a;
        } else {
            throw error(errc::check_failed, "stale merge candidate");
        }
        log.events.push_back(ev);
        st.merge(a, b);
    }

    partition out;
    out.graph = &g;
    out.stage = partition_stage::two_clusters;
    for (auto& [id, part] : st.parts) out.parts.push_back(part);
    return {std::move(out), std::move(log)};
}

namespace {

bool edges_connected(const hyper_graph& g, const std::vector<std::int32_t>& edges) {
    if (edges.empty()) return false;
    union_find uf(static_cast<std::int32_t>(edges.size()));
    for (std::size_t a = 0; a < edges.size(); ++a)
        for (std::size_t b = a + 1; b < edges.size(); ++b)
            if (g.edge_mask(edges[a]).intersect_count(g.edge_mask(edges[b])) >= 2)
                uf.unite(static_cast<std::int32_t>(a), static_cast<std::int32_t>(b));
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (uf.find(static_cast<std::int32_t>(i)) != uf.find(0)) return false;
    return true;
}

} // namespace

std::vector<std::int32_t> trimming_order(const edge_subset& f, const edge_subset& f0) {
    const hyper_graph& g = *f.graph;
    if (f0.graph != f.graph)
        throw error(errc::invalid_argument, "subsets must share a parent graph");
    if (f0.indices.empty())
        throw error(errc::invalid_argument, "the seed subgraph must be nonempty");
    if (!std::includes(f.indices.begin(), f.indices.end(), f0.indices.begin(), f0.indices.end()))
        throw error(errc::invalid_argument, "the seed subgraph must lie inside f");
    if (!edges_connected(g, f.indices) || !edges_connected(g, f0.indices))
        throw error(errc::not_connected, "trimming requires connected subgraphs");

    std::vector<char> covered(g.edge_count(), 0);
    for (auto i : f0.indices) covered[i] = 1;
    std::vector<std::int32_t> pending;
    for (auto i : f.indices)
        if (!covered[i]) pending.push_back(i);

    std::vector<std::int32_t> order;
    std::vector<std::int32_t> covered_list(f0.indices);
    while (!pending.empty()) {
        std::int32_t pick = -1;
        for (auto cand : pending) {
            for (auto ce : covered_list)
                if (g.edge_mask(cand).intersect_count(g.edge_mask(ce)) >= 2) {
                    pick = cand;
                    break;
                }
            if (pick >= 0) break;
        }
        if (pick < 0) throw error(errc::not_connected, "no extension keeps the union connected");
        order.push_back(pick);
        covered_list.push_back(pick);
        pending.erase(std::find(pending.begin(), pending.end(), pick));
    }
    return order;
}

cluster_stats_t cluster_stats(const merge_log& m2_log, std::int32_t part_id) {
    if (m2_log.from_stage != partition_stage::one_clusters)
        throw error(errc::invalid_argument, "cluster stats expect a 1|2 merge log");
    std::map<std::int32_t, std::vector<std::int32_t>> comp;
    for (const auto& p : m2_log.start_parts)
        comp[p.front()] = {static_cast<std::int32_t>(p.size())};
    for (const auto& ev : m2_log.events) {
        auto a = comp.find(ev.part_a);
        auto b = comp.find(ev.part_b);
        if (a == comp.end() || b == comp.end())
            throw error(errc::unknown_part, "merge log references a missing part");
        a->second.insert(a->second.end(), b->second.begin(), b->second.end());
        comp.erase(b);
    }
    auto it = comp.find(part_id);
    if (it == comp.end()) throw error(errc::unknown_part, "no final part with this id");
    cluster_stats_t out;
    out.composition = it->second;
    out.merging_number = static_cast<std::int32_t>(out.composition.size());
    for (auto e : out.composition) out.size += e;
    return out;
}

std::vector<std::vector<std::int32_t>> one_clusters_of(const merge_log& m2_log,
                                                       std::int32_t part_id) {
    std::map<std::int32_t, std::vector<std::int32_t>> members;
    for (const auto& p : m2_log.start_parts) members[p.front()] = {p.front()};
    for (const auto& ev : m2_log.events) {
        auto& a = members[ev.part_a];
        auto& b = members[ev.part_b];
        a.insert(a.end(), b.begin(), b.end());
        members.erase(ev.part_b);
    }
    auto it = members.find(part_id);
    if (it == members.end()) throw error(errc::unknown_part, "no final part with this id");
    std::vector<std::vector<std::int32_t>> out;
    for (auto id : it->second)
        for (const auto& p : m2_log.start_parts)
            if (p.front() == id) out.push_back(p);
    return out;
}

namespace {

bool intersects(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j]) ++i;
        else ++j;
    }
    return false;
}

std::optional<std::uint64_t> first_common(const std::vector<std::uint64_t>& a,
                                          const std::vector<std::uint64_t>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return a[i];
        if (a[i] < b[j]) ++i;
        else ++j;
    }
    return std::nullopt;
}

struct property_p_search {
    const hyper_graph* g;
    std::int32_t k;
    const std::vector<std::vector<std::int32_t>>* clusters;
    std::vector<level_pair_sets> cluster_claims;
    std::vector<std::int32_t> sizes;
    std::int32_t requested;
    std::uint64_t node_cap;
    std::uint64_t nodes = 0;
    bool exhausted = false;

    std::vector<std::size_t> seq;
    std::vector<char> used;
    level_pair_sets union_claims; // claims of the union of seq, levels merge by union
    std::optional<property_p_witness> found;

    bool mergeable(const level_pair_sets& h, std::size_t t) const {
        return intersects(h.ones, cluster_claims[t].twos) ||
               intersects(h.twos, cluster_claims[t].ones);
    }

    std::optional<diamond> as_diamond(std::size_t ci) const {
        const auto& edges = (*clusters)[ci];
        if (edges.size() != 2) return std::nullopt;
        if (g->edge_mask(edges[0]).intersect_count(g->edge_mask(edges[1])) != 2)
            return std::nullopt;
        std::int32_t c1 = -1, c2 = -1;
        for (auto v : g->edge(edges[0]))
            if (g->edge_mask(edges[1]).contains(v)) (c1 < 0 ? c1 : c2) = v;
        return diamond{edges[0], edges[1], vertex_pair(c1, c2)};
    }

    // the pair witnessing "T_a 1bar2-claims a pair 1-claimed by T_b"
    std::optional<vertex_pair> boundary_pair(std::size_t a, std::size_t b) const {
        std::vector<std::uint64_t> twos_not_ones;
        const auto& ca = cluster_claims[a];
        std::set_difference(ca.twos.begin(), ca.twos.end(), ca.ones.begin(), ca.ones.end(),
                            std::back_inserter(twos_not_ones));
        auto key = first_common(twos_not_ones, cluster_claims[b].ones);
        if (!key) return std::nullopt;
        return pair_from_key(*key);
    }

    void try_accept() {
        if (seq.size() < 2) return;
        const std::size_t first = seq.front();
        const std::size_t last = seq.back();
        auto d1 = as_diamond(first);
        auto dl = as_diamond(last);
        if (!d1 || !dl) return;
        auto p1 = boundary_pair(first, seq[1]);
        auto pl = boundary_pair(last, seq[seq.size() - 2]);
        if (!p1 || !pl) return;

        std::vector<std::int32_t> h_edges;
        for (auto ci : seq)
            h_edges.insert(h_edges.end(), (*clusters)[ci].begin(), (*clusters)[ci].end());
        std::sort(h_edges.begin(), h_edges.end());
        edge_subset h(*g, h_edges);
        if (!is_flexible_diamond(h, *d1) || !is_flexible_diamond(h, *dl)) return;

        // |V(T_1) ∩ V(T_2 ∪ .. ∪ T_l)| = 2 and symmetrically for T_l
        auto attach_count = [&](std::size_t boundary) {
            vertex_set rest(g->vertex_count());
            for (auto ci : seq) {
                if (ci == boundary) continue;
                for (auto ei : (*clusters)[ci]) rest.unite(g->edge_mask(ei));
            }
            vertex_set own(g->vertex_count());
            for (auto ei : (*clusters)[boundary]) own.unite(g->edge_mask(ei));
            return own.intersect_count(rest);
        };
        if (attach_count(first) != 2 || attach_count(last) != 2) return;

        property_p_witness w;
        for (auto ci : seq) w.ordered_clusters.push_back((*clusters)[ci]);
        w.h_edges = std::move(h_edges);
        w.first_diamond = *d1;
        w.last_diamond = *dl;
        w.first_pair = *p1;
        w.last_pair = *pl;
        found = std::move(w);
    }

    void descend(std::int32_t total) {
        if (found || exhausted) return;
        if (++nodes > node_cap) {
            exhausted = true;
            return;
        }
        if (total == k + 1) {
            bool has_requested = false;
            for (auto ci : seq)
                if (static_cast<std::int32_t>(ci) == requested) has_requested = true;
            if (has_requested) try_accept();
            return;
        }
        for (std::size_t t = 0; t < clusters->size() && !found && !exhausted; ++t) {
            if (used[t]) continue;
            if (total + sizes[t] > k + 1) continue;
            if (seq.empty()) {
                if (!as_diamond(t)) continue; // T_1 must be a diamond
            } else if (!mergeable(union_claims, t)) {
                continue;
            }
            auto saved = union_claims;
            auto unite = [](std::vector<std::uint64_t>& dst,
                            const std::vector<std::uint64_t>& src) {
                dst.insert(dst.end(), src.begin(), src.end());
                std::sort(dst.begin(), dst.end());
                dst.erase(std::unique(dst.begin(), dst.end()), dst.end());
            };
            unite(union_claims.ones, cluster_claims[t].ones);
            unite(union_claims.twos, cluster_claims[t].twos);
            used[t] = 1;
            seq.push_back(t);
            descend(total + sizes[t]);
            seq.pop_back();
            used[t] = 0;
            union_claims = std::move(saved);
        }
    }
};

} // namespace

property_p_result check_property_p(const hyper_graph& g, std::int32_t k,
                                   const std::vector<std::vector<std::int32_t>>& one_clusters,
                                   std::int32_t requested_cluster, budget bud) {
    property_p_result res;
    if (requested_cluster < 0 ||
        requested_cluster >= static_cast<std::int32_t>(one_clusters.size()))
        throw error(errc::unknown_part, "requested 1-cluster index out of range");
    if (one_clusters.size() > property_p_cluster_cap) {
        res.budget_exceeded = true;
        return res;
    }
    std::int32_t total = 0;
    for (const auto& c : one_clusters) total += static_cast<std::int32_t>(c.size());
    if (total < k + 1) return res; // |H| = k+1 is unreachable

    property_p_search s;
    s.g = &g;
    s.k = k;
    s.clusters = &one_clusters;
    s.requested = requested_cluster;
    s.node_cap = bud.max_nodes;
    s.used.assign(one_clusters.size(), 0);
    for (const auto& c : one_clusters) {
        s.cluster_claims.push_back(level_pairs(g, c));
        s.sizes.push_back(static_cast<std::int32_t>(c.size()));
    }
    s.descend(0);
    res.budget_exceeded = s.exhausted && !s.found;
    res.witness = std::move(s.found);
    return res;
}

property_p_result has_property_p(const hyper_graph& g, std::int32_t k,
                                 const std::vector<std::vector<std::int32_t>>& one_clusters,
                                 budget bud) {
    property_p_result last;
    for (std::size_t t = 0; t < one_clusters.size(); ++t) {
        auto res = check_property_p(g, k, one_clusters, static_cast<std::int32_t>(t), bud);
        if (res.budget_exceeded || !res.witness) {
            res.witness.reset();
            return res;
        }
        last = std::move(res);
    }
    return last;
}

structure_report verify_structure(const hyper_graph& g, std::int32_t k, const merge_log& m2_log,
                                  std::int32_t part_id, verify_mode mode) {
    auto stats = cluster_stats(m2_log, part_id);
    auto clusters = one_clusters_of(m2_log, part_id);
    std::vector<std::int32_t> edges;
    for (const auto& c : clusters) edges.insert(edges.end(), c.begin(), c.end());
    std::sort(edges.begin(), edges.end());
    edge_subset f(g, edges);

    structure_report rep;
    rep.part_id = part_id;
    rep.size = stats.size;
    rep.merging_number = stats.merging_number;
    rep.composition = stats.composition;

    for (auto e : rep.composition)
        if (e > k - 1) rep.one_cluster_sizes_ok = false;
    rep.size_not_k = rep.size != k;
    rep.size_bound_applies = rep.size >= k + 1;
    if (rep.size_bound_applies)
        rep.size_bound_ok = rep.size >= 2 * rep.merging_number - k + 3;

    const std::int64_t pairs_per_edge =
        static_cast<std::int64_t>(g.uniformity()) * (g.uniformity() - 1) / 2;
    rep.p1_expected = 0;
    for (auto e : rep.composition) rep.p1_expected += e * pairs_per_edge - e + 1;
    auto p1 = compute_pair_family(f, pair_family_kind::claimed_at, {1}, 1);
    rep.p1_count = static_cast<std::int64_t>(p1.pairs.size());
    rep.p1_exact = rep.p1_count == rep.p1_expected;

    const std::int64_t rm2 = static_cast<std::int64_t>(g.uniformity() - 2) * (g.uniformity() - 2);
    rep.p12_bound = 1 - rep.merging_number;
    for (auto e : rep.composition) rep.p12_bound += (e - 1) * rm2;
    auto p12 = compute_pair_family(f, pair_family_kind::two_not_one, {}, 2);
    rep.p12_count = static_cast<std::int64_t>(p12.pairs.size());
    rep.p12_bound_ok = rep.p12_count >= rep.p12_bound;

    if (mode == verify_mode::trusted && !rep.all_ok())
        throw error(errc::check_failed,
                    "structural law violated on a certified-free input (part " +
                        std::to_string(part_id) + ")");
    return rep;
}

std::uint32_t claim_sum_set(const hyper_graph& g, const partition& parts, vertex_pair uv,
                            std::int32_t max_sum, budget bud) {
    if (max_sum < 0 || max_sum > 31)
        throw error(errc::invalid_argument, "sum-set truncation must be within [0, 31]");
    const std::uint32_t full = max_sum == 31 ? 0xffffffffu : ((1u << (max_sum + 1)) - 1);
    std::uint32_t sums = 1; // empty selection
    for (const auto& part : parts.parts) {
        // claims at levels 1..k force both endpoints inside V(part) when the
        // graph is free, so distant parts contribute only {0}
        const auto verts = edge_subset(*parts.graph, part).vertices();
        if (!verts.contains(uv.u) || !verts.contains(uv.v)) continue;
        edge_subset f(g, part);
        auto cs = compute_claim_set(
            f, uv, std::min<std::int32_t>(max_sum, static_cast<std::int32_t>(part.size())), bud);
        std::uint32_t next = 0;
        for (std::int32_t i = 0; i <= cs.i_max; ++i)
            if (cs.has(i)) next |= (sums << i);
        sums = next & full;
    }
    return sums;
}

} // namespace besk
