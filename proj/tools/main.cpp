// Command-line surface over the comet-quiver algebra and crystal library:
// normalization and enumeration of steep sequences, graded dimension tables,
// the verification suites, and the multi-way count comparison.
//
// Exit codes: 0 all requested checks pass, 1 a verification check failed,
// 2 usage or input error.

#include <CLI11.hpp>

#include "cometq/algfacts.hpp"
#include "cometq/charformula.hpp"
#include "cometq/crystalfacts.hpp"
#include "cometq/lattice.hpp"
#include "cometq/modular.hpp"
#include "cometq/report.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace cometq;

struct GlobalConfig {
  long omega = 2;
  int r = 1;
  int maxI = 4;
  int maxJ = 4;
  int maxLoop = 4;
  std::string format = "csv";
  std::string out;
  long grid = 0;  // 0 = per-command default
  uint64_t seed = 20260814;

  QuiverParams quiver() const {
    QuiverParams p;
    p.omega = omega;
    p.r = r;
    p.maxI = maxI;
    p.maxJ = maxJ;
    p.maxLoop = maxLoop;
    p.validate();
    return p;
  }
};

long parse_long(const std::string& s, const std::string& what) {
  size_t used = 0;
  long val = 0;
  try {
    val = std::stol(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse " + what + " from '" + s + "'");
  }
  if (used != s.size())
    throw std::invalid_argument("cannot parse " + what + " from '" + s + "'");
  return val;
}

std::vector<long> parse_long_list(const std::string& s, const std::string& what) {
  std::vector<long> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ',')) out.push_back(parse_long(cur, what));
  return out;
}

// Single-degree filter "n:m1,m2,..."; for r = 0 both "n" and "n:" work.
Degree parse_degree(const std::string& s, int r) {
  const size_t colon = s.find(':');
  const std::string head = s.substr(0, colon);
  const long n = parse_long(head, "degree");
  std::vector<int> m;
  if (colon != std::string::npos && colon + 1 < s.size())
    for (long v : parse_long_list(s.substr(colon + 1), "degree")) m.push_back((int)v);
  if ((int)m.size() != r)
    throw std::invalid_argument("degree '" + s + "' must list " + std::to_string(r) +
                                " real multiplicities as n:m1,...,m" + std::to_string(r));
  return Degree((int)n, std::move(m));
}

// Componentwise box "N" or "N,M" or "N,M1,...,Mr" (a single M broadcasts).
struct UptoBox {
  int maxN = 0;
  std::vector<int> maxM;
  int uniformM() const {
    int u = 0;
    for (int v : maxM) u = std::max(u, v);
    return u;
  }
};

UptoBox parse_upto(const std::string& s, int r, int defaultM) {
  const std::vector<long> vals = parse_long_list(s, "--upto");
  if (vals.empty()) throw std::invalid_argument("--upto needs at least a bound for n");
  UptoBox box;
  box.maxN = (int)vals[0];
  if (vals.size() == 1) {
    box.maxM.assign(r, defaultM);
  } else if (vals.size() == 2) {
    box.maxM.assign(r, (int)vals[1]);
  } else if ((int)vals.size() == 1 + r) {
    for (size_t k = 1; k < vals.size(); ++k) box.maxM.push_back((int)vals[k]);
  } else {
    throw std::invalid_argument("--upto takes N, N,M or N,M1,...,M" + std::to_string(r));
  }
  if (box.maxN < 0) throw std::invalid_argument("--upto bounds must be nonnegative");
  for (int v : box.maxM)
    if (v < 0) throw std::invalid_argument("--upto bounds must be nonnegative");
  return box;
}

bool degree_in_box(const Degree& d, const UptoBox& box) {
  if (d.n > box.maxN) return false;
  for (size_t k = 0; k < d.m.size(); ++k)
    if (d.m[k] > box.maxM[k]) return false;
  return true;
}

// Output sink honoring --out.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::invalid_argument("cannot open output file '" + path + "'");
      os_ = &file_;
    } else {
      os_ = &std::cout;
    }
  }
  std::ostream& os() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_ = nullptr;
};

int emit_reports(const std::vector<IdentityReport>& reps, const GlobalConfig& g) {
  Sink sink(g.out);
  std::vector<std::string> lines;
  bool all = true;
  if (g.format == "csv") lines.push_back(report_csv_header());
  for (const IdentityReport& rep : reps) {
    all = all && rep.pass;
    lines.push_back(g.format == "csv" ? report_csv_line(rep) : report_json_line(rep));
  }
  emit_lines(sink.os(), lines);
  if (!all && !(g.format == "json" && g.out.empty())) {
    // Failure witnesses always reach stdout as JSON, wherever the report went.
    for (const IdentityReport& rep : reps)
      if (!rep.pass) std::cout << report_json_line(rep) << '\n';
  }
  return all ? 0 : 1;
}

int run_normalize(const GlobalConfig& g, const std::string& word) {
  const OpWord w = parse_opword(word, g.r);
  Sink sink(g.out);
  sink.os() << steep_str(normalize(w, g.r), g.r) << '\n';
  return 0;
}

int run_apply(const GlobalConfig& g, const std::string& op, const std::string& steep) {
  if (op.empty() || (op[0] != 'f' && op[0] != 'e'))
    throw std::invalid_argument("operator must look like f<entry> or e<entry>, e.g. fj2 or 'e(i,1)'");
  const OpWord entry = parse_opword(op.substr(1), g.r);
  if (entry.size() != 1)
    throw std::invalid_argument("operator must name exactly one entry, e.g. fj2 or 'e(i,1)'");
  const Steep b = parse_steep(steep, g.r);
  Sink sink(g.out);
  if (op[0] == 'f') {
    sink.os() << steep_str(apply_f(entry[0], b, g.r), g.r) << '\n';
    return 0;
  }
  const std::optional<Steep> down = apply_e(entry[0], b, g.r);
  sink.os() << (down ? steep_str(*down, g.r) : std::string("none")) << '\n';
  return 0;
}

int run_enum(const GlobalConfig& g, const std::string& degree) {
  const Degree d = parse_degree(degree, g.r);
  Sink sink(g.out);
  std::vector<std::string> lines;
  for (const Steep& b : enumerate_steep(d, g.r)) {
    if (g.format == "json") {
      lines.push_back(steep_json_line(b, g.r));
    } else {
      lines.push_back(steep_str(b, g.r));
    }
  }
  emit_lines(sink.os(), lines);
  return 0;
}

// Shared by dims and compare: the box to tabulate.
UptoBox effective_box(const GlobalConfig& g, const std::string& upto) {
  if (!upto.empty()) return parse_upto(upto, g.r, g.maxJ);
  UptoBox box;
  box.maxN = g.maxI;
  box.maxM.assign(g.r, g.maxJ);
  return box;
}

DimsTable quotient_dims(const GlobalConfig& g, const UptoBox& box) {
  if (g.maxLoop < box.maxN)
    throw std::invalid_argument(
        "--max-loop must be at least the imaginary bound, otherwise the "
        "truncated alphabet undercounts dimensions");
  QuiverParams p;
  p.omega = g.omega;
  p.r = g.r;
  p.maxI = std::max(1, box.maxN);
  p.maxJ = box.uniformM();
  // Loop letters larger than the imaginary bound never fit in the box.
  p.maxLoop = (int)std::min<long>(p.maxI, g.maxLoop);
  p.validate();
  DimsOptions opt;
  opt.seed = g.seed;
  return dimension_table(p, opt);
}

int run_dims(const GlobalConfig& g, const std::string& upto, const std::string& source) {
  const UptoBox box = effective_box(g, upto);
  std::map<Degree, long long> table;
  if (source == "quotient") {
    for (const auto& [d, dim] : quotient_dims(g, box).dim)
      if (degree_in_box(d, box)) table[d] = (long long)dim;
  } else {
    const int uniM = box.uniformM();
    if (source == "series") {
      const TruncSeries c = char_series(g.r, box.maxN, uniM);
      for_each_degree(g.r, box.maxN, uniM, [&](const Degree& d) {
        if (degree_in_box(d, box)) table[d] = c.coeff(d);
      });
    } else if (source == "recursion") {
      SteepCounter counter(g.r);
      for_each_degree(g.r, box.maxN, uniM, [&](const Degree& d) {
        if (degree_in_box(d, box)) table[d] = counter.count(d);
      });
    } else {  // steep
      for_each_degree(g.r, box.maxN, uniM, [&](const Degree& d) {
        if (degree_in_box(d, box)) table[d] = (long long)enumerate_steep(d, g.r).size();
      });
    }
  }
  Sink sink(g.out);
  std::vector<std::string> lines;
  if (g.format == "csv") lines.push_back(dims_csv_header(g.r));
  for (const auto& [d, dim] : table)
    lines.push_back(g.format == "csv" ? dims_csv_line(d, dim) : dims_json_line(d, dim));
  emit_lines(sink.os(), lines);
  return 0;
}

int run_compare(const GlobalConfig& g, const std::string& upto) {
  const UptoBox box = effective_box(g, upto);
  const DimsTable dims = quotient_dims(g, box);
  std::map<Degree, size_t> qdims(dims.dim.begin(), dims.dim.end());
  std::vector<CountRow> rows = compare_counts(g.r, box.maxN, box.uniformM(), &qdims);
  Sink sink(g.out);
  std::vector<std::string> lines;
  if (g.format == "csv") lines.push_back(counts_csv_header(g.r));
  bool all = true;
  for (const CountRow& row : rows) {
    if (!degree_in_box(row.d, box)) continue;
    all = all && row.pass;
    lines.push_back(g.format == "csv" ? counts_csv_line(row) : counts_json_line(row));
  }
  emit_lines(sink.os(), lines);
  if (!all && !(g.format == "json" && g.out.empty())) {
    // Failure witnesses always reach stdout as JSON, wherever the table went.
    for (const CountRow& row : rows)
      if (degree_in_box(row.d, box) && !row.pass)
        std::cout << counts_json_line(row) << '\n';
  }
  return all ? 0 : 1;
}

std::vector<IdentityReport> identities_reports(long bound) {
  std::vector<IdentityReport> reps;
  for (const std::string& name : identity_names())
    for (const std::vector<long>& params : identity_grid(name, bound))
      reps.push_back(check_identity(name, params));
  return reps;
}

std::vector<IdentityReport> algebra_reports(const GlobalConfig& g) {
  GradedQuotient q(g.quiver());
  std::vector<IdentityReport> reps;
  for (const std::string& fact : algebra_fact_names())
    for (const std::vector<long>& params : algebra_fact_grid(q, fact))
      reps.push_back(verify_algebra_fact(q, fact, params));
  return reps;
}

int run_verify(const GlobalConfig& g, const std::string& what) {
  std::vector<IdentityReport> reps;
  if (what == "identities" || what == "all") {
    const long bound = g.grid > 0 ? g.grid : 6;
    for (IdentityReport& rep : identities_reports(bound)) reps.push_back(std::move(rep));
  }
  if (what == "algebra" || what == "all") {
    for (IdentityReport& rep : algebra_reports(g)) reps.push_back(std::move(rep));
  }
  if (what == "crystal" || what == "all") {
    const int bound = g.grid > 0 ? (int)g.grid : 3;
    for (IdentityReport& rep : crystal_coherence(g.r, bound))
      reps.push_back(std::move(rep));
  }
  return emit_reports(reps, g);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact arithmetic for the truncated comet-quiver quantum group and its "
      "crystal of steep sequences"};
  app.require_subcommand(1);

  GlobalConfig g;
  app.add_option("--omega", g.omega, "loops at the imaginary vertex (>= 2)")
      ->capture_default_str();
  app.add_option("--r", g.r, "number of real vertices")->capture_default_str();
  app.add_option("--max-i", g.maxI, "largest imaginary weight n")->capture_default_str();
  app.add_option("--max-j", g.maxJ, "largest multiplicity of each real color")
      ->capture_default_str();
  app.add_option("--max-loop", g.maxLoop, "largest loop generator size")
      ->capture_default_str();
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", g.out, "write output to this file instead of stdout");
  app.add_option("--grid", g.grid, "override the verification grid bound");
  app.add_option("--seed", g.seed, "seed for the random modular specializations")
      ->capture_default_str();

  std::string word, op, steep, degree, upto, source = "quotient", what;

  CLI::App* sc_norm = app.add_subcommand(
      "normalize", "print the steep form of an operator word, e.g. \"(i,1) j j\"");
  sc_norm->add_option("word", word, "operator word, leftmost entry applied last")
      ->required();

  CLI::App* sc_apply = app.add_subcommand(
      "apply", "apply a raising (f<entry>) or lowering (e<entry>) operator to a "
               "steep sequence; \"1\" is the empty sequence");
  sc_apply->add_option("op", op, "f<entry> or e<entry>, e.g. fj, fj2, 'e(i,1)'")
      ->required();
  sc_apply->add_option("steep", steep, "steep sequence, e.g. 'j | (i,1) j'")->required();

  CLI::App* sc_enum =
      app.add_subcommand("enum", "list the steep sequences of one degree");
  sc_enum->add_option("degree", degree, "degree as n:m1,...,mr")->required();

  CLI::App* sc_dims = app.add_subcommand("dims", "graded dimension / count table");
  sc_dims->add_option("--upto", upto, "box as N or N,M or N,M1,...,Mr");
  sc_dims->add_option("--source", source, "which count to tabulate")
      ->check(CLI::IsMember({"quotient", "series", "recursion", "steep"}))
      ->capture_default_str();

  CLI::App* sc_verify = app.add_subcommand("verify", "run a verification suite");
  sc_verify->add_option("what", what, "identities, algebra, crystal or all")
      ->required()
      ->check(CLI::IsMember({"identities", "algebra", "crystal", "all"}));

  CLI::App* sc_cmp = app.add_subcommand(
      "compare", "steep count vs series vs recursion vs quotient dimension");
  sc_cmp->add_option("--upto", upto, "box as N or N,M or N,M1,...,Mr");

  for (CLI::App* sc : {sc_norm, sc_apply, sc_enum, sc_dims, sc_verify, sc_cmp})
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (sc_norm->parsed()) return run_normalize(g, word);
    if (sc_apply->parsed()) return run_apply(g, op, steep);
    if (sc_enum->parsed()) return run_enum(g, degree);
    if (sc_dims->parsed()) return run_dims(g, upto, source);
    if (sc_verify->parsed()) return run_verify(g, what);
    if (sc_cmp->parsed()) return run_compare(g, upto);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
