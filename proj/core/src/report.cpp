#include "m3k/report.hpp"

#include <sstream>

#include <json.hpp>

namespace m3k {

namespace {

nlohmann::ordered_json report_json(const CheckReport& rep) {
  nlohmann::ordered_json j;
  j["check_id"] = rep.check_id;
  j["scope"] = rep.scope;
  j["examined"] = rep.instances_examined;
  j["filtered"] = rep.instances_filtered;
  nlohmann::ordered_json vs = nlohmann::ordered_json::array();
  for (const Violation& v : rep.violations) {
    nlohmann::ordered_json jv;
    jv["matroid_id"] = v.matroid_id;
    jv["matroid_lex01"] = v.matroid_lex01;
    jv["detail"] = v.detail;
    vs.push_back(std::move(jv));
  }
  j["violations"] = std::move(vs);
  j["elapsed_ms"] = rep.elapsed_ms;
  return j;
}

std::string report_text(const CheckReport& rep) {
  std::ostringstream os;
  os << (rep.passed() ? "PASS " : "FAIL ") << rep.check_id
     << "  examined=" << rep.instances_examined << " filtered=" << rep.instances_filtered
     << " violations=" << rep.violations.size() << " elapsed_ms=" << rep.elapsed_ms << "\n";
  os << "  scope: " << rep.scope << "\n";
  for (const Violation& v : rep.violations) {
    os << "  VIOLATION " << v.matroid_id << ": " << v.detail << "\n";
    os << "    matroid: " << v.matroid_lex01 << "\n";
  }
  return os.str();
}

}  // namespace

std::string render_report(const CheckReport& rep, ReportFormat fmt) {
  if (fmt == ReportFormat::json) return report_json(rep).dump(2) + "\n";
  return report_text(rep);
}

std::string render_reports(const std::vector<CheckReport>& reps, ReportFormat fmt) {
  if (fmt == ReportFormat::json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const CheckReport& r : reps) arr.push_back(report_json(r));
    return arr.dump(2) + "\n";
  }
  std::ostringstream os;
  for (const CheckReport& r : reps) os << report_text(r);
  std::size_t failed = 0;
  for (const CheckReport& r : reps)
    if (!r.passed()) ++failed;
  os << (failed == 0 ? "ALL CHECKS PASSED" : std::to_string(failed) + " CHECK(S) FAILED")
     << " (" << reps.size() << " run)\n";
  return os.str();
}

}  // namespace m3k
