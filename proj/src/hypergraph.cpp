#include "besk/hypergraph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace besk {

hyper_graph::hyper_graph(std::int32_t n, std::int32_t r,
                         std::vector<std::vector<std::int32_t>> edges)
    : n_(n), r_(r) {
    if (r < 2) throw error(errc::malformed_header, "uniformity must be at least 2");
    if (n < 0) throw error(errc::malformed_header, "vertex count must be nonnegative");
    for (auto& e : edges) {
        std::sort(e.begin(), e.end());
        if (static_cast<std::int32_t>(e.size()) != r ||
            std::adjacent_find(e.begin(), e.end()) != e.end())
            throw error(errc::wrong_arity, "edge must have exactly r distinct vertices");
        if (e.front() < 0 || e.back() >= n)
            throw error(errc::vertex_out_of_range, "edge vertex outside [0, n)");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw error(errc::duplicate_edge, "duplicate edge");
    edges_flat_.reserve(edges.size() * r);
    for (const auto& e : edges)
        edges_flat_.insert(edges_flat_.end(), e.begin(), e.end());
    build_indexes();
}

void hyper_graph::build_indexes() {
    const auto m = static_cast<std::int32_t>(edges_size());
    masks_.assign(m, vertex_set(n_));
    for (std::int32_t i = 0; i < m; ++i)
        for (auto v : edge(i)) masks_[i].add(v);

    // vertex incidence CSR
    inc_off_.assign(n_ + 1, 0);
    for (auto v : edges_flat_) ++inc_off_[v + 1];
    for (std::int32_t v = 0; v < n_; ++v) inc_off_[v + 1] += inc_off_[v];
    inc_edges_.resize(edges_flat_.size());
    {
        std::vector<std::int32_t> cur(inc_off_.begin(), inc_off_.end() - 1);
        for (std::int32_t i = 0; i < m; ++i)
            for (auto v : edge(i)) inc_edges_[cur[v]++] = i;
    }

    // pair index CSR
    std::vector<std::pair<std::uint64_t, std::int32_t>> entries;
    entries.reserve(static_cast<std::size_t>(m) * r_ * (r_ - 1) / 2);
    for (std::int32_t i = 0; i < m; ++i) {
        auto e = edge(i);
        for (std::int32_t a = 0; a < r_; ++a)
            for (std::int32_t b = a + 1; b < r_; ++b)
                entries.emplace_back(pair_key(e[a], e[b]), i);
    }
    std::sort(entries.begin(), entries.end());
    pair_keys_.clear();
    pair_off_.clear();
    pair_edges_.clear();
    pair_edges_.reserve(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i == 0 || entries[i].first != entries[i - 1].first) {
            pair_keys_.push_back(entries[i].first);
            pair_off_.push_back(static_cast<std::int32_t>(pair_edges_.size()));
        }
        pair_edges_.push_back(entries[i].second);
    }
    pair_off_.push_back(static_cast<std::int32_t>(pair_edges_.size()));

    // max pairwise overlap: exact via co-pair lists when some pair repeats,
    // else 0/1 depending on whether any vertex has two incident edges.
    max_overlap_ = 0;
    for (std::int32_t v = 0; v < n_ && max_overlap_ == 0; ++v)
        if (inc_off_[v + 1] - inc_off_[v] >= 2) max_overlap_ = 1;
    for (std::size_t p = 0; p + 1 < pair_off_.size(); ++p) {
        std::int32_t cnt = pair_off_[p + 1] - pair_off_[p];
        if (cnt < 2) continue;
        for (std::int32_t a = pair_off_[p]; a < pair_off_[p + 1]; ++a)
            for (std::int32_t b = a + 1; b < pair_off_[p + 1]; ++b) {
                int ov = masks_[pair_edges_[a]].intersect_count(masks_[pair_edges_[b]]);
                max_overlap_ = std::max(max_overlap_, ov);
            }
    }
}

std::vector<std::vector<std::int32_t>> hyper_graph::edge_lists() const {
    std::vector<std::vector<std::int32_t>> out(edges_size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        auto e = edge(static_cast<std::int32_t>(i));
        out[i].assign(e.begin(), e.end());
    }
    return out;
}

std::span<const std::int32_t> hyper_graph::pair_edges(std::int32_t u, std::int32_t v) const {
    auto key = pair_key(u, v);
    auto it = std::lower_bound(pair_keys_.begin(), pair_keys_.end(), key);
    if (it == pair_keys_.end() || *it != key) return {};
    auto p = static_cast<std::size_t>(it - pair_keys_.begin());
    return {pair_edges_.data() + pair_off_[p], pair_edges_.data() + pair_off_[p + 1]};
}

bool hyper_graph::has_edge(const std::vector<std::int32_t>& sorted_edge) const {
    if (static_cast<std::int32_t>(sorted_edge.size()) != r_) return false;
    auto cands = pair_edges(sorted_edge[0], sorted_edge[1]);
    for (auto i : cands) {
        auto e = edge(i);
        if (std::equal(e.begin(), e.end(), sorted_edge.begin())) return true;
    }
    return false;
}

hyper_graph hyper_graph::with_edge(std::vector<std::int32_t> sorted_edge) const {
    auto edges = edge_lists();
    edges.push_back(std::move(sorted_edge));
    return hyper_graph(n_, r_, std::move(edges));
}

hyper_graph hyper_graph::without_edge(std::int32_t index) const {
    auto edges = edge_lists();
    edges.erase(edges.begin() + index);
    return hyper_graph(n_, r_, std::move(edges));
}

edge_subset::edge_subset(const hyper_graph& g, std::vector<std::int32_t> idx)
    : graph(&g), indices(std::move(idx)) {
    std::sort(indices.begin(), indices.end());
    if (!indices.empty() && (indices.front() < 0 || indices.back() >= g.edge_count()))
        throw error(errc::invalid_argument, "edge index out of range");
    if (std::adjacent_find(indices.begin(), indices.end()) != indices.end())
        throw error(errc::invalid_argument, "repeated edge index in subset");
}

edge_subset edge_subset::whole(const hyper_graph& g) {
    std::vector<std::int32_t> all(g.edge_count());
    for (std::int32_t i = 0; i < g.edge_count(); ++i) all[i] = i;
    return edge_subset(g, std::move(all));
}

vertex_set edge_subset::vertices() const {
    vertex_set u(graph ? graph->vertex_count() : 0);
    for (auto i : indices) u.unite(graph->edge_mask(i));
    return u;
}

int edge_subset::span() const {
    if (indices.empty()) return 0;
    return vertices().popcount();
}

namespace {

std::vector<std::int32_t> parse_int_line(const std::string& line, int lineno) {
    std::vector<std::int32_t> out;
    const char* p = line.data();
    const char* end = line.data() + line.size();
    while (p < end) {
        while (p < end && *p == ' ') ++p;
        if (p == end) break;
        std::int32_t value = 0;
        auto [next, ec] = std::from_chars(p, end, value);
        if (ec != std::errc{} || (next < end && *next != ' '))
            throw error(errc::malformed_header,
                        "line " + std::to_string(lineno) + ": expected integers");
        out.push_back(value);
        p = next;
    }
    return out;
}

} // namespace

hyper_graph parse_hypergraph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::int32_t r = -1, n = -1, m = -1;
    std::vector<std::vector<std::int32_t>> edges;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto nums = parse_int_line(line, lineno);
        if (r < 0) {
            if (nums.size() != 3)
                throw error(errc::malformed_header, "header must be \"r n m\"");
            r = nums[0];
            n = nums[1];
            m = nums[2];
            if (r < 2 || n < 0 || m < 0)
                throw error(errc::malformed_header, "header values out of range");
            continue;
        }
        if (static_cast<std::int32_t>(edges.size()) == m)
            throw error(errc::malformed_header, "more edge lines than the header announced");
        if (static_cast<std::int32_t>(nums.size()) != r)
            throw error(errc::wrong_arity,
                        "line " + std::to_string(lineno) + ": expected " + std::to_string(r) +
                            " vertices");
        for (std::size_t i = 0; i + 1 < nums.size(); ++i)
            if (nums[i] >= nums[i + 1])
                throw error(errc::wrong_arity,
                            "line " + std::to_string(lineno) + ": vertices must strictly increase");
        for (auto v : nums)
            if (v < 0 || v >= n)
                throw error(errc::vertex_out_of_range,
                            "line " + std::to_string(lineno) + ": vertex id outside [0, n)");
        edges.push_back(std::move(nums));
    }
    if (r < 0) throw error(errc::malformed_header, "missing header line");
    if (static_cast<std::int32_t>(edges.size()) != m)
        throw error(errc::malformed_header, "fewer edge lines than the header announced");

    auto sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw error(errc::duplicate_edge, "duplicate edge line");

    return hyper_graph(n, r, std::move(edges));
}

std::string serialize_hypergraph(const hyper_graph& g) {
    std::string out;
    out += std::to_string(g.uniformity());
    out += ' ';
    out += std::to_string(g.vertex_count());
    out += ' ';
    out += std::to_string(g.edge_count());
    out += '\n';
    for (std::int32_t i = 0; i < g.edge_count(); ++i) {
        auto e = g.edge(i);
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (j) out += ' ';
            out += std::to_string(e[j]);
        }
        out += '\n';
    }
    return out;
}

} // namespace besk
