#pragma once

#include "cometq/charformula.hpp"
#include "cometq/crystal.hpp"
#include "cometq/identities.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace cometq {

// One JSON object per line: {"fact": ..., "params": [...], "pass": ...}
// plus "witness" when the check failed.
std::string report_json_line(const IdentityReport& rep);
// CSV row "fact,params joined by ';',pass" (witness omitted; it may contain
// arbitrary text).
std::string report_csv_line(const IdentityReport& rep);
std::string report_csv_header();

// Dimension rows "n,m1,...,mr,dim" with header "n,m1,...,mr,dim".
std::string dims_csv_header(int r);
std::string dims_csv_line(const Degree& d, long long dim);
std::string dims_json_line(const Degree& d, long long dim);

// One steep sequence with its degree as a JSON line.
std::string steep_json_line(const Steep& b, int r);

// Count-comparison rows "n,m1..mr,series,recursion,steep,quotient,pass";
// quotient prints empty when absent.
std::string counts_csv_header(int r);
std::string counts_csv_line(const CountRow& row);
std::string counts_json_line(const CountRow& row);

// Writes every line of `lines` plus trailing newlines to the stream.
void emit_lines(std::ostream& os, const std::vector<std::string>& lines);

}  // namespace cometq
