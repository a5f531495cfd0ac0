#include "lgal/report.hpp"

#include <sstream>

namespace lgal {

using nlohmann::json;

json to_json(const HajirConditionReport& r) {
  return json{{"m", r.m},           {"p", r.p},           {"window_ok", r.window_ok}, {"cond_i", r.cond_i},
              {"cond_ii", r.cond_ii}, {"cond_iii", r.cond_iii}, {"cond_iv", r.cond_iv},   {"passed", r.passed}};
}

json to_json(const FrobeniusSample& s) {
  return json{{"p", s.p},
              {"cycle_type", s.cycle_type.degrees()},
              {"parity", s.cycle_type.is_even() ? "even" : "odd"}};
}

json to_json(const GroupCertificate& c) {
  json irreducibility;
  if (c.irreducibility.kind == IrreducibilityEvidence::Kind::witness)
    irreducibility = {{"kind", "witness"}, {"prime", *c.irreducibility.prime}};
  else
    irreducibility = {{"kind", "assumed"}, {"prime", nullptr}};

  json samples = json::array();
  for (const auto& s : c.frobenius_samples) samples.push_back(to_json(s));

  return json{
      {"n", c.n},
      {"u", c.u},
      {"group", to_string(c.group)},
      {"tier", to_string(c.tier)},
      {"irreducibility", irreducibility},
      {"criterion_prime", c.criterion ? json(c.criterion->prime) : json(nullptr)},
      {"hajir_conditions", c.criterion ? to_json(c.criterion->report) : json(nullptr)},
      {"disc_square", c.disc_square},
      {"disc_certificate_kind", to_string(c.disc_certificate.kind)},
      {"frobenius_samples", samples},
  };
}

std::string emit_report(const std::vector<GroupCertificate>& certs, ReportFormat format) {
  if (format == ReportFormat::json) {
    json arr = json::array();
    for (const auto& c : certs) arr.push_back(to_json(c));
    return arr.dump();
  }
  std::ostringstream os;
  os << "n,u,group,tier,criterion_prime,disc_square\n";
  for (const auto& c : certs) {
    os << c.n << ',' << c.u << ',' << to_string(c.group) << ',' << to_string(c.tier) << ',';
    if (c.criterion) os << c.criterion->prime;
    os << ',' << (c.disc_square ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace lgal
