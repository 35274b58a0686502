#include "besk/reports.hpp"

namespace besk {

namespace {

const char* verdict_name(verdict v) {
    switch (v) {
    case verdict::free: return "free";
    case verdict::violated: return "not-free";
    case verdict::unknown: return "unknown";
    }
    return "unknown";
}

json pair_json(const vertex_pair& p) { return json::array({p.u, p.v}); }

} // namespace

json report_json(const rational& q) { return json{{"num", q.num()}, {"den", q.den()}}; }

json report_json(const config_witness& w) {
    return json{{"family", {{"s", w.family.s}, {"k", w.family.k}}},
                {"edges", w.edge_indices},
                {"span", w.span}};
}

json report_json(const freeness_report& rep) {
    json j{{"verdict", verdict_name(rep.verd)}, {"nodes", rep.nodes}};
    if (rep.violation) j["violation"] = report_json(*rep.violation);
    return j;
}

json report_json(const claim_set& cs) {
    json j{{"pair", pair_json(cs.pair)},
           {"claims", cs.to_list()},
           {"truncated_at", cs.i_max}};
    if (cs.any_unknown()) {
        std::vector<std::int32_t> und;
        for (std::int32_t i = 0; i <= cs.i_max; ++i)
            if (!cs.decided(i)) und.push_back(i);
        j["undecided"] = und;
    }
    return j;
}

json report_json(const partition& p) {
    const char* stage = "partial";
    switch (p.stage) {
    case partition_stage::trivial: stage = "trivial"; break;
    case partition_stage::one_clusters: stage = "1-clusters"; break;
    case partition_stage::two_clusters: stage = "2-clusters"; break;
    case partition_stage::partial: stage = "partial"; break;
    }
    return json{{"stage", stage}, {"parts", p.parts}};
}

json report_json(const merge_log& log) {
    json events = json::array();
    for (const auto& ev : log.events) {
        json e{{"part_a", ev.part_a},
               {"part_b", ev.part_b},
               {"via", pair_json(ev.via)},
               {"mode", ev.mode == merge_event::kind::connect ? "1|1" : "1|2"}};
        if (ev.mode == merge_event::kind::absorb) {
            e["one_side"] = ev.one_side;
            e["two_side"] = ev.two_side;
        }
        events.push_back(std::move(e));
    }
    return json{{"start_parts", log.start_parts}, {"events", std::move(events)}};
}

json report_json(const weight_certificate& cert) {
    json clusters = json::array();
    for (const auto& cw : cert.clusters) {
        json weights = json::array();
        for (const auto& [pr, wc] : cw.pair_weights)
            weights.push_back(json{{"pair", pair_json(pr)},
                                   {"weight", report_json(weight_value(wc, cert.k))}});
        clusters.push_back(json{{"part", cw.part_id},
                                {"edges", cw.edges},
                                {"pair_weights", std::move(weights)},
                                {"weight_total", report_json(cw.total)}});
    }
    json pairs = json::array();
    for (const auto& [pr, total] : cert.pair_totals)
        pairs.push_back(json{{"pair", pair_json(pr)}, {"total", report_json(total)}});
    return json{{"r", cert.r},
                {"k", cert.k},
                {"n", cert.n},
                {"clusters", std::move(clusters)},
                {"pairs", std::move(pairs)}};
}

json report_json(const cert_report& rep) {
    return json{{"pair_lemma_ok", rep.pair_lemma_ok},
                {"cluster_lemma_ok", rep.cluster_lemma_ok},
                {"r_threshold_ok", rep.r_threshold_ok},
                {"bound", {{"num", rep.bound_num}, {"den", rep.bound_den}}},
                {"holds", rep.holds},
                {"findings", rep.findings}};
}

json report_json(const structure_report& rep) {
    return json{{"part", rep.part_id},
                {"size", rep.size},
                {"merging_number", rep.merging_number},
                {"composition", rep.composition},
                {"one_cluster_sizes_ok", rep.one_cluster_sizes_ok},
                {"size_not_k", rep.size_not_k},
                {"size_bound_applies", rep.size_bound_applies},
                {"size_bound_ok", rep.size_bound_ok},
                {"p1_count", rep.p1_count},
                {"p1_expected", rep.p1_expected},
                {"p1_exact", rep.p1_exact},
                {"p12_count", rep.p12_count},
                {"p12_bound", rep.p12_bound},
                {"p12_bound_ok", rep.p12_bound_ok}};
}

json report_json(const pair_audit_report& rep) {
    return json{{"pairs_checked", rep.pairs_checked},
                {"unclaimed_pairs_with_two_claims", rep.unclaimed_pairs_with_two_claims},
                {"sum_set_checks", rep.sum_set_checks},
                {"findings", rep.findings}};
}

json report_json(const construction_report& rep) {
    return json{{"n", rep.graph.vertex_count()},
                {"r", rep.graph.uniformity()},
                {"edges", rep.graph.edge_count()},
                {"density_ratio", report_json(rep.density_ratio)},
                {"freeness", report_json(rep.freeness)},
                {"lower_bound_ratio", report_json(rep.bound_ratio)}};
}

std::string extremal_csv_header() { return "n,r,s,k,value,exact,nodes"; }

std::string extremal_csv_line(const extremal_record& rec) {
    std::string out;
    out += std::to_string(rec.n) + ",";
    out += std::to_string(rec.r) + ",";
    out += std::to_string(rec.s) + ",";
    out += std::to_string(rec.k) + ",";
    out += std::to_string(rec.value) + ",";
    out += rec.exact ? "true," : "false,";
    out += std::to_string(rec.nodes_explored);
    return out;
}

} // namespace besk
