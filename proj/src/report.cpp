#include <json.hpp>
#include <sstream>

#include "tc/certificate.hpp"

namespace tc {

namespace {

nlohmann::json report_json(const CertificateReport& r, bool include_timings) {
  nlohmann::json j;
  j["command"] = r.command;
  j["n"] = r.n;
  j["g"] = r.g;
  j["verdict"] = to_string(r.verdict);
  j["counts"] = {{"ez_terms", r.ez_terms},
                 {"aw_terms", r.aw_terms},
                 {"kunneth_terms", r.kunneth_terms}};
  j["kunneth_survivors"] = r.kunneth_survivors;
  j["projected_value"] = r.projected_value;
  j["four_block_value"] = r.four_block_value;
  j["wedge_value"] = r.wedge_value;
  j["s_route_value"] = r.s_route_value;
  j["wedge_matches_reference"] = r.wedge_matches_reference;
  j["wedge_invariance"] = nlohmann::json::object();
  for (const auto& [name, ok] : r.wedge_invariance) j["wedge_invariance"][name] = ok;
  j["residues"] = nlohmann::json::array();
  for (const auto& q : r.residues)
    j["residues"].push_back({{"m", q.m}, {"weight", q.weight}, {"nonzero", q.nonzero}});
  j["verified_m"] = r.verified_m;
  j["notes"] = r.notes;
  if (include_timings) {
    j["stages"] = nlohmann::json::array();
    for (const auto& s : r.stages) j["stages"].push_back({{"name", s.name}, {"ms", s.ms}});
  }
  j["subreports"] = nlohmann::json::array();
  for (const auto& sub : r.subreports)
    j["subreports"].push_back(report_json(sub, include_timings));
  return j;
}

void report_text(std::ostringstream& out, const CertificateReport& r, int indent) {
  const std::string pad(indent, ' ');
  out << pad << r.command << " (n=" << r.n << ", g=" << r.g
      << "): " << to_string(r.verdict) << "\n";
  if (r.ez_terms || r.aw_terms || r.kunneth_terms)
    out << pad << "  terms: ez=" << r.ez_terms << " aw=" << r.aw_terms
        << " kunneth=" << r.kunneth_terms << "\n";
  if (!r.kunneth_survivors.empty()) {
    out << pad << "  kunneth survivors:";
    for (const auto& s : r.kunneth_survivors) out << " " << s;
    out << "\n";
  }
  if (!r.projected_value.empty())
    out << pad << "  projected value: " << r.projected_value << "\n";
  if (!r.four_block_value.empty())
    out << pad << "  4-block value: " << r.four_block_value << "\n";
  if (!r.wedge_value.empty()) {
    out << pad << "  wedge value: " << r.wedge_value << "\n";
    out << pad << "  s route: " << r.s_route_value
        << (r.wedge_matches_reference ? " (matches reference)" : " (MISMATCH)") << "\n";
    out << pad << "  s-route invariance:";
    for (const auto& [name, ok] : r.wedge_invariance)
      out << " " << name << (ok ? "=ok" : "=FAIL");
    out << "\n";
  }
  for (const auto& q : r.residues)
    out << pad << "  coinvariant residue m=" << q.m << ": weight " << q.weight
        << (q.nonzero ? " (nonzero)" : " (zero)") << "\n";
  if (r.verified_m) out << pad << "  certified at quotient m=" << r.verified_m << "\n";
  for (const auto& note : r.notes) out << pad << "  note: " << note << "\n";
  for (const auto& s : r.stages)
    out << pad << "  time " << s.name << ": " << s.ms << " ms\n";
  for (const auto& sub : r.subreports) report_text(out, sub, indent + 2);
}

}  // namespace

std::string CertificateReport::to_text() const {
  std::ostringstream out;
  report_text(out, *this, 0);
  return out.str();
}

std::string CertificateReport::to_json(bool include_timings) const {
  return report_json(*this, include_timings).dump(2);
}

}  // namespace tc
