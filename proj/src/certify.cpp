#include "besk/certify.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace besk {

rational weight_value(weight_class w, std::int32_t k) {
    switch (w) {
    case weight_class::zero: return rational(0);
    case weight_class::full: return rational(1);
    case weight_class::two_over_km2: return rational(2, k - 2);
    }
    return rational(0);
}

weight_certificate assign_weights(const hyper_graph& g, std::int32_t k, const partition& m2) {
    if (k % 2 != 0) throw error(errc::odd_k, "weights are defined for even k");
    if (k < 4) throw error(errc::k_too_small, "weights are defined for k >= 4");
    if (m2.stage != partition_stage::two_clusters || m2.graph != &g)
        throw error(errc::invalid_argument, "assign_weights expects the 2-cluster partition of g");

    weight_certificate cert;
    cert.r = g.uniformity();
    cert.k = k;
    cert.n = g.vertex_count();

    std::map<std::uint64_t, rational> totals;
    for (const auto& part : m2.parts) {
        cluster_weights cw;
        cw.part_id = part.front();
        cw.edges = part;
        auto levels = level_pairs(g, part);
        for (auto key : levels.ones) {
            cw.pair_weights.emplace_back(pair_from_key(key), weight_class::full);
            totals[key] += rational(1);
        }
        for (auto key : levels.twos) {
            if (std::binary_search(levels.ones.begin(), levels.ones.end(), key)) continue;
            cw.pair_weights.emplace_back(pair_from_key(key), weight_class::two_over_km2);
            totals[key] += rational(2, k - 2);
        }
        std::sort(cw.pair_weights.begin(), cw.pair_weights.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [pr, wc] : cw.pair_weights) cw.total += weight_value(wc, k);
        cert.clusters.push_back(std::move(cw));
    }
    for (const auto& [key, total] : totals) cert.pair_totals.emplace_back(pair_from_key(key), total);
    return cert;
}

namespace {

bool same_certificate(const weight_certificate& a, const weight_certificate& b) {
    if (a.r != b.r || a.k != b.k || a.n != b.n) return false;
    if (a.clusters.size() != b.clusters.size()) return false;
    for (std::size_t i = 0; i < a.clusters.size(); ++i) {
        const auto& ca = a.clusters[i];
        const auto& cb = b.clusters[i];
        if (ca.part_id != cb.part_id || ca.edges != cb.edges ||
            ca.pair_weights != cb.pair_weights || !(ca.total == cb.total))
            return false;
    }
    return a.pair_totals == b.pair_totals;
}

} // namespace

cert_report verify_certificate(const hyper_graph& g, std::int32_t k,
                               const weight_certificate& cert) {
    auto m1 = merge_1(g).first;
    auto m2 = merge_12(g, k, m1).first;
    auto fresh = assign_weights(g, k, m2);
    if (!same_certificate(cert, fresh))
        throw error(errc::cert_mismatch, "certificate is not reproducible from the graph");

    cert_report rep;
    const std::int64_t r = g.uniformity();
    const std::int64_t pairs_per_edge = r * (r - 1) / 2;

    rep.pair_lemma_ok = true;
    for (const auto& [pr, total] : cert.pair_totals)
        if (total > rational(1)) {
            rep.pair_lemma_ok = false;
            rep.findings.push_back("pair (" + std::to_string(pr.u) + "," + std::to_string(pr.v) +
                                   ") has weight " + total.str() + " > 1");
        }

    rep.cluster_lemma_ok = true;
    for (const auto& cw : cert.clusters) {
        rational needed(pairs_per_edge * static_cast<std::int64_t>(cw.edges.size()));
        if (cw.total < needed) {
            rep.cluster_lemma_ok = false;
            rep.findings.push_back("cluster " + std::to_string(cw.part_id) + " has weight " +
                                   cw.total.str() + " < " + needed.str());
        }
    }

    rep.r_threshold_ok = 2 * (r - 2) * (r - 2) >= 3 * static_cast<std::int64_t>(k) - 8;

    const std::int64_t n = g.vertex_count();
    rep.bound_num = n * (n - 1) / 2;
    rep.bound_den = pairs_per_edge;
    rep.bound = rational(rep.bound_num, rep.bound_den);
    rep.holds = rational(g.edge_count()) <= rep.bound;
    if (!rep.holds)
        rep.findings.push_back("edge count " + std::to_string(g.edge_count()) +
                               " exceeds the bound " + rep.bound.str());
    return rep;
}

pair_audit_report pair_interaction_audit(const hyper_graph& g, std::int32_t k,
                                         const partition& m2, budget bud) {
    if (m2.stage != partition_stage::two_clusters || m2.graph != &g)
        throw error(errc::invalid_argument, "audit expects the 2-cluster partition of g");
    pair_audit_report rep;

    // pair -> parts claiming it at levels 1 / 2
    std::map<std::uint64_t, std::pair<std::vector<std::int32_t>, std::vector<std::int32_t>>> idx;
    // every pair both of whose endpoints lie in one part's span; claims at
    // levels 1..k force that in a free graph, so other pairs are vacuous
    std::set<std::uint64_t> candidate_pairs;
    for (const auto& part : m2.parts) {
        auto levels = level_pairs(g, part);
        for (auto key : levels.ones) idx[key].first.push_back(part.front());
        for (auto key : levels.twos) idx[key].second.push_back(part.front());
        auto verts = edge_subset(g, part).vertices().to_list();
        for (std::size_t a = 0; a < verts.size(); ++a)
            for (std::size_t b = a + 1; b < verts.size(); ++b)
                candidate_pairs.insert(pair_key(verts[a], verts[b]));
    }

    for (auto key : candidate_pairs) {
        ++rep.pairs_checked;
        auto pr = pair_from_key(key);
        auto it = idx.find(key);
        if (it != idx.end()) {
            const auto& ones = it->second.first;
            const auto& twos = it->second.second;
            if (ones.empty() && !twos.empty()) {
                ++rep.unclaimed_pairs_with_two_claims;
                if (static_cast<std::int64_t>(twos.size()) > (k - 2) / 2)
                    rep.findings.push_back("pair (" + std::to_string(pr.u) + "," +
                                           std::to_string(pr.v) + ") is 2-claimed by " +
                                           std::to_string(twos.size()) + " clusters > (k-2)/2");
            }
            if (!ones.empty()) {
                // merging fixed point: no other cluster may claim the pair at
                // level 1 or 2, else the parts would have merged
                bool sane = ones.size() == 1 &&
                            (twos.empty() || (twos.size() == 1 && twos[0] == ones[0]));
                if (!sane)
                    rep.findings.push_back("pair (" + std::to_string(pr.u) + "," +
                                           std::to_string(pr.v) +
                                           ") is claimed by several clusters after merging");
            }
        }
        ++rep.sum_set_checks;
        auto sums = claim_sum_set(g, m2, pr, k, bud);
        if ((sums >> k) & 1)
            rep.findings.push_back("pair (" + std::to_string(pr.u) + "," + std::to_string(pr.v) +
                                   ") has per-cluster claims summing to k");
    }
    return rep;
}

} // namespace besk
