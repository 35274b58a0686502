#pragma once

#include "besk/certify.hpp"
#include "besk/claims.hpp"
#include "besk/configs.hpp"
#include "besk/merging.hpp"
#include "besk/search.hpp"

#include <json.hpp>

#include <string>

namespace besk {

using nlohmann::json;

json report_json(const rational& q);
json report_json(const config_witness& w);
json report_json(const freeness_report& rep);
json report_json(const claim_set& cs);
json report_json(const partition& p);
json report_json(const merge_log& log);
json report_json(const weight_certificate& cert);
json report_json(const cert_report& rep);
json report_json(const structure_report& rep);
json report_json(const pair_audit_report& rep);
json report_json(const construction_report& rep);

std::string extremal_csv_header();
std::string extremal_csv_line(const extremal_record& rec);

} // namespace besk
