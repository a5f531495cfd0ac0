#pragma once

// Stable JSON / CSV serialization of certificates.
//
// JSON: an array of objects with exactly the keys
//   n, u, group, tier, irreducibility, criterion_prime, hajir_conditions,
//   disc_square, disc_certificate_kind, frobenius_samples
// CSV: header "n,u,group,tier,criterion_prime,disc_square".
// Integers that may exceed 64 bits are written as decimal strings.

#include "lgal/pipeline.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace lgal {

enum class ReportFormat { json, csv };

nlohmann::json to_json(const HajirConditionReport& report);
nlohmann::json to_json(const FrobeniusSample& sample);
nlohmann::json to_json(const GroupCertificate& cert);

std::string emit_report(const std::vector<GroupCertificate>& certs, ReportFormat format);

}  // namespace lgal
