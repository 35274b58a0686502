#include "besk/canonical.hpp"

#include <algorithm>
#include <cstring>
#include <map>

namespace besk {

namespace {

using edge_bits = std::uint32_t; // vertex bitmask, n <= 16

struct labeler {
    std::int32_t n;
    std::int32_t r;
    std::vector<edge_bits> edges;              // original edges as bitmasks
    std::vector<std::vector<std::int32_t>> inc; // vertex -> edge indices
    std::vector<edge_bits> best;
    bool have_best = false;
    std::uint64_t leaves = 0;

    static constexpr std::uint64_t leaf_cap = 10'000'000;

    // Refine colors to a fixpoint. A vertex signature is its color plus the
    // sorted list, over incident edges, of the sorted color multiset of the
    // edge's other members. Colors are re-ranked by signature order, which
    // keeps the map equivariant: no vertex ids enter the signature.
    std::vector<int> refine(std::vector<int> color) const {
        for (int round = 0; round < n; ++round) {
            std::vector<std::pair<std::vector<int>, int>> sig(n);
            for (std::int32_t v = 0; v < n; ++v) {
                std::vector<int>& s = sig[v].first;
                s.push_back(color[v]);
                std::vector<std::vector<int>> per_edge;
                per_edge.reserve(inc[v].size());
                for (auto ei : inc[v]) {
                    std::vector<int> others;
                    for (std::int32_t u = 0; u < n; ++u)
                        if (u != v && (edges[ei] >> u & 1)) others.push_back(color[u]);
                    std::sort(others.begin(), others.end());
                    per_edge.push_back(std::move(others));
                }
                std::sort(per_edge.begin(), per_edge.end());
                for (auto& pe : per_edge) {
                    s.push_back(-1); // separator
                    s.insert(s.end(), pe.begin(), pe.end());
                }
                sig[v].second = v;
            }
            auto sorted = sig;
            std::sort(sorted.begin(), sorted.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            std::vector<int> next(n);
            int rank = 0;
            for (std::size_t i = 0; i < sorted.size(); ++i) {
                if (i > 0 && sorted[i].first != sorted[i - 1].first) ++rank;
                next[sorted[i].second] = rank;
            }
            if (next == color) break;
            color = std::move(next);
        }
        return color;
    }

    // Cells grouped by color; returns the vertices of the first cell with
    // more than one member, or empty if the coloring is discrete.
    static std::vector<std::int32_t> first_branch_cell(const std::vector<int>& color) {
        int best_color = -1;
        std::vector<std::int32_t> cell;
        for (int c = 0;; ++c) {
            cell.clear();
            bool any = false;
            for (std::int32_t v = 0; v < static_cast<std::int32_t>(color.size()); ++v)
                if (color[v] == c) {
                    cell.push_back(v);
                    any = true;
                }
            if (!any) return {};
            if (cell.size() > 1) {
                best_color = c;
                break;
            }
        }
        (void)best_color;
        return cell;
    }

    std::vector<int> best_coloring;

    void leaf(const std::vector<int>& color) {
        if (++leaves > leaf_cap)
            throw error(errc::too_large, "canonical form search exceeded its leaf cap");
        std::vector<edge_bits> relabeled(edges.size());
        for (std::size_t i = 0; i < edges.size(); ++i) {
            edge_bits m = 0;
            for (std::int32_t v = 0; v < n; ++v)
                if (edges[i] >> v & 1) m |= edge_bits{1} << color[v];
            relabeled[i] = m;
        }
        std::sort(relabeled.begin(), relabeled.end());
        if (!have_best || relabeled < best) {
            best = std::move(relabeled);
            best_coloring = color;
            have_best = true;
        }
    }

    void descend(std::vector<int> color) {
        color = refine(std::move(color));
        auto cell = first_branch_cell(color);
        if (cell.empty()) {
            leaf(color);
            return;
        }
        int max_color = *std::max_element(color.begin(), color.end());
        for (auto v : cell) {
            auto child = color;
            child[v] = max_color + 1;
            // keep ranks dense for equivariance
            std::vector<int> vals(child.begin(), child.end());
            std::sort(vals.begin(), vals.end());
            vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
            for (auto& c : child)
                c = static_cast<int>(std::lower_bound(vals.begin(), vals.end(), c) - vals.begin());
            descend(std::move(child));
        }
    }
};

} // namespace

canonical_result canonical_labeling(const hyper_graph& g) {
    const std::int32_t n = g.vertex_count();
    const std::int32_t r = g.uniformity();
    const std::int32_t m = g.edge_count();
    if (n > canonical_max_vertices)
        throw error(errc::too_large, "canonical form supports at most 16 vertices");

    std::vector<edge_bits> canon;
    canonical_result res;
    res.labeling.resize(n);
    for (std::int32_t v = 0; v < n; ++v) res.labeling[v] = v;

    if (m > 0) {
        labeler lab;
        lab.n = n;
        lab.r = r;
        lab.edges.resize(m);
        lab.inc.assign(n, {});
        for (std::int32_t i = 0; i < m; ++i) {
            edge_bits e = 0;
            for (auto v : g.edge(i)) {
                e |= edge_bits{1} << v;
                lab.inc[v].push_back(i);
            }
            lab.edges[i] = e;
        }
        lab.descend(std::vector<int>(n, 0));
        canon = std::move(lab.best);
        for (std::int32_t v = 0; v < n; ++v) res.labeling[v] = lab.best_coloring[v];
    }

    std::string out;
    out.reserve(6 + canon.size() * 2);
    out.push_back(static_cast<char>(r));
    out.push_back(static_cast<char>(n));
    out.push_back(static_cast<char>(m & 0xff));
    out.push_back(static_cast<char>(m >> 8));
    for (auto e : canon) {
        out.push_back(static_cast<char>(e & 0xff));
        out.push_back(static_cast<char>((e >> 8) & 0xff));
    }
    res.label = std::move(out);
    return res;
}

std::string canonical_form(const hyper_graph& g) { return canonical_labeling(g).label; }

} // namespace besk
