#include "majorana/report.hpp"

#include <cstdio>
#include <ostream>

namespace majorana {

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Reported: return "reported";
  }
  return "?";
}

const char* to_string(Suite s) {
  switch (s) {
    case Suite::HalfSpin: return "halfspin";
    case Suite::Spin1: return "spin1";
    case Suite::Fock: return "fock";
    case Suite::FieldOps: return "fieldops";
  }
  return "?";
}

std::optional<Suite> parse_suite(const std::string& name) {
  for (Suite s : kAllSuites)
    if (name == to_string(s)) return s;
  return std::nullopt;
}

std::string format_number(double x) {
  if (x == 0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

nlohmann::ordered_json to_json(const CheckResult& r) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["anchor"] = r.anchor;
  j["status"] = to_string(r.status);
  // JSON has no infinity; an unfinished check carries a null residual.
  j["residual"] = std::isfinite(r.residual) ? nlohmann::ordered_json(r.residual) : nullptr;
  j["tolerance"] = r.tolerance;
  j["measured"] = r.measured;
  return j;
}

void write_json_lines(std::ostream& os, const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results) os << to_json(r).dump() << '\n';
}

void write_text(std::ostream& os, const std::vector<CheckResult>& results) {
  std::size_t pass = 0, fail = 0, rep = 0;
  for (const CheckResult& r : results) {
    char line[256];
    std::snprintf(line, sizeof line, "%-9s %-44s residual %-12s tol %s", to_string(r.status),
                  r.id.c_str(), format_number(r.residual).c_str(),
                  format_number(r.tolerance).c_str());
    os << line << "\n          " << r.anchor << '\n';
    (r.status == Status::Pass ? pass : r.status == Status::Fail ? fail : rep)++;
  }
  os << pass << " passed, " << fail << " failed, " << rep << " reported\n";
}

void write_report(std::ostream& os, const std::vector<CheckResult>& results,
                  OutputFormat format) {
  if (format == OutputFormat::Json) {
    write_json_lines(os, results);
  } else {
    write_text(os, results);
  }
}

}  // namespace majorana
