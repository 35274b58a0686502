#include "besk/claims.hpp"

#include <algorithm>

namespace besk {

std::vector<std::int32_t> claim_set::to_list() const {
    std::vector<std::int32_t> out;
    for (std::int32_t i = 0; i <= i_max; ++i)
        if ((members >> i) & 1) out.push_back(i);
    return out;
}

namespace {

// Is there an i-subset of f whose union with {x,y} spans at most bound?
// Lexicographic branch and bound; a partial union exceeding the bound prunes,
// and that is complete because unions only grow along a subset's prefixes.
verdict claimed_at_level(const edge_subset& f, const vertex_set& seed, std::int32_t i,
                         std::int32_t bound, std::uint64_t node_cap, std::uint64_t& nodes) {
    const hyper_graph& g = *f.graph;
    const auto& idx = f.indices;
    if (static_cast<std::int32_t>(idx.size()) < i) return verdict::free;
    if (seed.popcount() > bound) return verdict::free;

    bool exhausted = false;
    auto rec = [&](auto&& self, const vertex_set& u, std::size_t from, std::int32_t left) -> bool {
        if (++nodes > node_cap) {
            exhausted = true;
            return false;
        }
        if (left == 0) return true;
        for (std::size_t p = from; p + left <= idx.size(); ++p) {
            const auto& em = g.edge_mask(idx[p]);
            if (u.union_count(em) > bound) continue;
            vertex_set nu = u;
            nu.unite(em);
            if (self(self, nu, p + 1, left - 1)) return true;
            if (exhausted) return false;
        }
        return false;
    };
    if (rec(rec, seed, 0, i)) return verdict::violated;
    return exhausted ? verdict::unknown : verdict::free;
}

} // namespace

claim_set compute_claim_set(const edge_subset& f, vertex_pair xy, std::int32_t i_max,
                            budget bud) {
    if (i_max < 0 || i_max > max_claim_level)
        throw error(errc::invalid_argument, "claim level out of range");
    const hyper_graph& g = *f.graph;
    claim_set cs;
    cs.pair = xy;
    cs.i_max = i_max;

    vertex_set seed(g.vertex_count());
    seed.add(xy.u);
    seed.add(xy.v);

    std::uint64_t nodes = 0;
    const std::int32_t r = g.uniformity();
    const std::int32_t top = std::min<std::int32_t>(i_max, f.size());
    for (std::int32_t i = 1; i <= top; ++i) {
        auto v = claimed_at_level(f, seed, i, (r - 2) * i + 2, bud.max_nodes, nodes);
        if (v == verdict::violated)
            cs.members |= std::uint32_t{1} << i;
        else if (v == verdict::unknown)
            cs.unknown |= std::uint32_t{1} << i;
    }
    return cs;
}

namespace {

// sorted pair universe over a vertex list
std::vector<vertex_pair> all_pairs(std::vector<std::int32_t> verts) {
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::vector<vertex_pair> out;
    if (verts.size() >= 2) out.reserve(verts.size() * (verts.size() - 1) / 2);
    for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b)
            out.emplace_back(verts[a], verts[b]);
    return out;
}

// Marks, for each i in [1, t], the pairs i-claimed by f. Works per witness:
// an i-subset with span (r-2)i+2 - slack claims every pair missing at most
// `slack` vertices from its union, so enumeration over configurations
// replaces a per-pair search. Universe of pairs: C(V(F), 2).
struct level_marks {
    std::vector<std::vector<char>> at; // at[i][pair-pos]
    bool truncated = false;
};

level_marks mark_levels(const edge_subset& f, std::int32_t t,
                        const std::vector<vertex_pair>& pairs, budget bud) {
    const hyper_graph& g = *f.graph;
    const std::int32_t r = g.uniformity();
    level_marks marks;
    marks.at.assign(t + 1, std::vector<char>(pairs.size(), 0));

    // pairs is sorted, and pair_key order matches vertex_pair order
    auto mark = [&](std::vector<char>& row, vertex_pair xy) {
        auto it = std::lower_bound(pairs.begin(), pairs.end(), xy);
        if (it != pairs.end() && *it == xy) row[it - pairs.begin()] = 1;
    };

    for (std::int32_t i = 1; i <= std::min<std::int32_t>(t, f.size()); ++i) {
        const std::int32_t bound = (r - 2) * i + 2;
        auto& row = marks.at[i];
        auto sink = [&](const std::vector<std::int32_t>&, const vertex_set& u) {
            const int slack = bound - u.popcount();
            if (slack == 0) {
                // the witness claims exactly the pairs inside its union
                auto verts = u.to_list();
                for (std::size_t a = 0; a < verts.size(); ++a)
                    for (std::size_t b = a + 1; b < verts.size(); ++b)
                        mark(row, vertex_pair(verts[a], verts[b]));
                return true;
            }
            for (std::size_t p = 0; p < pairs.size(); ++p) {
                if (row[p]) continue;
                int outside = (u.contains(pairs[p].u) ? 0 : 1) + (u.contains(pairs[p].v) ? 0 : 1);
                if (outside <= slack) row[p] = 1;
            }
            return true;
        };
        auto res = for_each_config(g, f.indices, bound, i, -1, bud, sink);
        if (res.verd == verdict::unknown) marks.truncated = true;
    }
    return marks;
}

} // namespace

pair_family compute_pair_family(const edge_subset& f, pair_family_kind kind,
                                const std::vector<std::int32_t>& params, std::int32_t i_max,
                                const std::optional<std::vector<std::int32_t>>& ambient,
                                budget bud) {
    pair_family fam;
    fam.kind = kind;
    fam.params = params;

    if (ambient && kind != pair_family_kind::claimed_by_set &&
        kind != pair_family_kind::claimed_at)
        throw error(errc::invalid_argument,
                    "ambient pair universes apply only to P_A-style families");

    const auto universe_pairs = all_pairs(ambient ? *ambient : f.vertices().to_list());

    switch (kind) {
    case pair_family_kind::claimed_by_set:
    case pair_family_kind::claimed_at: {
        std::vector<std::int32_t> levels = params;
        if (kind == pair_family_kind::claimed_at && levels.size() != 1)
            throw error(errc::invalid_argument, "P_i takes exactly one level");
        std::int32_t need_max = 0;
        for (auto l : levels) {
            if (l < 0) throw error(errc::invalid_argument, "claim levels are nonnegative");
            need_max = std::max(need_max, l);
        }
        if (need_max > i_max)
            throw error(errc::invalid_argument, "requested level exceeds i_max");
        for (auto xy : universe_pairs) {
            auto cs = compute_claim_set(f, xy, need_max, bud);
            if (cs.any_unknown()) fam.truncated = true;
            bool all = true;
            for (auto l : levels)
                if (!cs.has(l)) {
                    all = false;
                    break;
                }
            if (all) fam.pairs.push_back(xy);
        }
        break;
    }
    case pair_family_kind::two_not_one: {
        if (2 > i_max) throw error(errc::invalid_argument, "two_not_one needs i_max >= 2");
        auto marks = mark_levels(f, 2, universe_pairs, bud);
        fam.truncated = marks.truncated;
        for (std::size_t p = 0; p < universe_pairs.size(); ++p)
            if (marks.at[2][p] && !marks.at[1][p]) fam.pairs.push_back(universe_pairs[p]);
        break;
    }
    case pair_family_kind::claimed_up_to: {
        if (params.size() != 1 || params[0] < 1)
            throw error(errc::invalid_argument, "P_{<=t} takes one positive t");
        const std::int32_t t = params[0];
        if (t > i_max) throw error(errc::invalid_argument, "requested level exceeds i_max");
        auto marks = mark_levels(f, t, universe_pairs, bud);
        fam.truncated = marks.truncated;
        for (std::size_t p = 0; p < universe_pairs.size(); ++p) {
            bool any = false;
            for (std::int32_t i = 1; i <= t && !any; ++i) any = marks.at[i][p];
            if (any) fam.pairs.push_back(universe_pairs[p]);
        }
        break;
    }
    }
    std::sort(fam.pairs.begin(), fam.pairs.end());
    return fam;
}

std::vector<diamond> diamonds(const edge_subset& f) {
    const hyper_graph& g = *f.graph;
    std::vector<diamond> out;
    for (std::size_t a = 0; a < f.indices.size(); ++a)
        for (std::size_t b = a + 1; b < f.indices.size(); ++b) {
            const auto& ma = g.edge_mask(f.indices[a]);
            const auto& mb = g.edge_mask(f.indices[b]);
            if (ma.intersect_count(mb) != 2) continue;
            std::int32_t c1 = -1, c2 = -1;
            for (auto v : g.edge(f.indices[a]))
                if (mb.contains(v)) (c1 < 0 ? c1 : c2) = v;
            out.push_back({f.indices[a], f.indices[b], vertex_pair(c1, c2)});
        }
    return out;
}

bool is_flexible_diamond(const edge_subset& f, const diamond& d) {
    const hyper_graph& g = *f.graph;
    bool has1 = false, has2 = false;
    std::vector<std::int32_t> rest;
    for (auto i : f.indices) {
        if (i == d.e1) has1 = true;
        else if (i == d.e2) has2 = true;
        else rest.push_back(i);
    }
    if (!has1 || !has2)
        throw error(errc::diamond_not_in_subgraph, "diamond edges must belong to the subgraph");
    if (rest.empty()) return false;

    vertex_set rest_verts = edge_subset(g, rest).vertices();
    std::int32_t a1 = -1, a2 = -1;
    int c1 = 0, c2 = 0;
    for (auto v : g.edge(d.e1))
        if (rest_verts.contains(v)) {
            ++c1;
            a1 = v;
        }
    for (auto v : g.edge(d.e2))
        if (rest_verts.contains(v)) {
            ++c2;
            a2 = v;
        }
    // each edge must attach through exactly one vertex, and the two attach
    // vertices must differ so the diamond meets the rest in two vertices
    return c1 == 1 && c2 == 1 && a1 != a2;
}

} // namespace besk
