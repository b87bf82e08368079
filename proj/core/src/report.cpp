#include "cometq/report.hpp"

#include <json.hpp>

#include <ostream>
#include <sstream>

namespace cometq {

namespace {

std::string degree_csv(const Degree& d) {
  std::ostringstream os;
  os << d.n;
  for (int m : d.m) os << ',' << m;
  return os.str();
}

nlohmann::json degree_json(const Degree& d) {
  nlohmann::json j;
  j["n"] = d.n;
  j["m"] = d.m;
  return j;
}

}  // namespace

std::string report_json_line(const IdentityReport& rep) {
  nlohmann::json j;
  j["fact"] = rep.fact;
  j["params"] = rep.params;
  j["pass"] = rep.pass;
  if (!rep.witness.empty()) j["witness"] = rep.witness;
  return j.dump();
}

std::string report_csv_header() { return "fact,params,pass"; }

std::string report_csv_line(const IdentityReport& rep) {
  std::ostringstream os;
  os << rep.fact << ',';
  for (size_t k = 0; k < rep.params.size(); ++k) {
    if (k) os << ';';
    os << rep.params[k];
  }
  os << ',' << (rep.pass ? "pass" : "FAIL");
  return os.str();
}

std::string dims_csv_header(int r) {
  std::string s = "n";
  for (int k = 1; k <= r; ++k) s += ",m" + std::to_string(k);
  return s + ",dim";
}

std::string dims_csv_line(const Degree& d, long long dim) {
  return degree_csv(d) + ',' + std::to_string(dim);
}

std::string dims_json_line(const Degree& d, long long dim) {
  nlohmann::json j = degree_json(d);
  j["dim"] = dim;
  return j.dump();
}

std::string steep_json_line(const Steep& b, int r) {
  nlohmann::json j = degree_json(steep_degree(b, r));
  j["steep"] = steep_str(b, r);
  return j.dump();
}

std::string counts_csv_header(int r) {
  std::string s = "n";
  for (int k = 1; k <= r; ++k) s += ",m" + std::to_string(k);
  return s + ",series,recursion,steep,quotient,pass";
}

std::string counts_csv_line(const CountRow& row) {
  std::ostringstream os;
  os << degree_csv(row.d) << ',' << row.series << ',' << row.recursion << ','
     << row.steep << ',';
  if (row.has_quotient) os << row.quotient;
  os << ',' << (row.pass ? "pass" : "FAIL");
  return os.str();
}

std::string counts_json_line(const CountRow& row) {
  nlohmann::json j = degree_json(row.d);
  j["series"] = row.series;
  j["recursion"] = row.recursion;
  j["steep"] = row.steep;
  if (row.has_quotient) j["quotient"] = row.quotient;
  j["pass"] = row.pass;
  return j.dump();
}

void emit_lines(std::ostream& os, const std::vector<std::string>& lines) {
  for (const std::string& line : lines) os << line << '\n';
}

}  // namespace cometq
