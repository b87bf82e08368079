#include <catch2/catch_amalgamated.hpp>

#include "cometq/charformula.hpp"
#include "cometq/crystal.hpp"
#include "cometq/report.hpp"

#include <json.hpp>

#include <set>

using namespace cometq;

TEST_CASE("truncated series arithmetic") {
  TruncSeries a(1, 2, 2);
  a.set_coeff(Degree(0, {0}), 1);
  a.set_coeff(Degree(1, {1}), 3);
  TruncSeries b(1, 2, 2);
  b.set_coeff(Degree(0, {0}), 1);
  b.set_coeff(Degree(1, {1}), -3);
  const TruncSeries prod = a.mul(b);
  CHECK(prod.coeff(Degree(0, {0})) == 1);
  CHECK(prod.coeff(Degree(1, {1})) == 0);
  CHECK(prod.coeff(Degree(2, {2})) == -9);
  CHECK_FALSE(prod.is_delta());
  a.add_coeff(Degree(1, {1}), -3);
  CHECK(a.is_delta());
  CHECK_THROWS_AS(a.coeff(Degree(3, {0})), std::invalid_argument);
  CHECK_THROWS_AS(a.coeff(Degree(0, {0, 0})), std::invalid_argument);
  CHECK_THROWS_AS(a.mul(TruncSeries(1, 2, 3)), std::invalid_argument);
}

TEST_CASE("degree iteration is complete and respects the partial order") {
  std::vector<Degree> seen;
  for_each_degree(2, 2, 1, [&](const Degree& d) { seen.push_back(d); });
  CHECK(seen.size() == 3 * 2 * 2);
  CHECK(std::set<Degree>(seen.begin(), seen.end()).size() == seen.size());
  for (size_t x = 0; x < seen.size(); ++x)
    for (size_t y = x + 1; y < seen.size(); ++y)
      CHECK_FALSE((seen[y].leq(seen[x]) && seen[y] != seen[x]));
}

TEST_CASE("reciprocal series has the documented support") {
  const TruncSeries s = inverse_char_series(1, 4, 4);
  CHECK(s.coeff(Degree(0, {0})) == 1);
  CHECK(s.coeff(Degree(1, {0})) == -1);
  CHECK(s.coeff(Degree(2, {0})) == -1);
  CHECK(s.coeff(Degree(0, {1})) == -1);
  CHECK(s.coeff(Degree(1, {2})) == 1);
  CHECK(s.coeff(Degree(2, {3})) == 1);
  CHECK(s.coeff(Degree(3, {4})) == 1);
  CHECK(s.coeff(Degree(1, {1})) == 0);
  CHECK(s.coeff(Degree(2, {1})) == 0);
  CHECK(s.coeff(Degree(2, {2})) == 0);
  CHECK(s.coeff(Degree(0, {2})) == 0);

  const TruncSeries s2 = inverse_char_series(2, 3, 3);
  CHECK(s2.coeff(Degree(0, {1, 1})) == 1);
  CHECK(s2.coeff(Degree(0, {1, 0})) == -1);
  CHECK(s2.coeff(Degree(1, {2, 2})) == -1);
  CHECK(s2.coeff(Degree(1, {2, 0})) == 1);
  CHECK(s2.coeff(Degree(2, {3, 3})) == -1);
  CHECK(s2.coeff(Degree(1, {1, 1})) == 0);
}

TEST_CASE("character series solves the convolution and counts steeps") {
  const TruncSeries c = char_series(1, 4, 4);
  CHECK(inverse_char_series(1, 4, 4).mul(c).is_delta());
  CHECK(c.coeff(Degree(0, {0})) == 1);
  CHECK(c.coeff(Degree(0, {4})) == 1);
  CHECK(c.coeff(Degree(1, {1})) == 2);
  CHECK(c.coeff(Degree(2, {1})) == 5);
  CHECK(c.coeff(Degree(2, {2})) == 7);
  CHECK(c.coeff(Degree(3, {0})) == 4);
}

TEST_CASE("memoized recursion agrees with series and enumeration") {
  for (int r : {0, 1, 2}) {
    SteepCounter counter(r);
    const int maxN = (r == 2) ? 3 : 4;
    const int maxM = (r == 2) ? 3 : 4;
    const TruncSeries c = char_series(r, maxN, maxM);
    for_each_degree(r, maxN, maxM, [&](const Degree& d) {
      CAPTURE(r, d.str());
      const long long want = c.coeff(d);
      CHECK(counter.count(d) == want);
      CHECK((long long)enumerate_steep(d, r).size() == want);
    });
  }
}

TEST_CASE("recursion anchors and degenerate arguments") {
  SteepCounter c0(0);
  CHECK(c0.count(Degree(0, {})) == 1);
  CHECK(c0.count(Degree(3, {})) == 4);
  for (int n = 1; n <= 10; ++n)
    CHECK(c0.count(Degree(n, {})) == (1LL << (n - 1)));

  SteepCounter c1(1);
  CHECK(c1.count(Degree(1, {1})) == 2);
  CHECK(c1.count(Degree(2, {1})) == 5);

  SteepCounter c2(2);
  CHECK(c2.count(Degree(4, {4, 4})) == 922);
  // A color with multiplicity zero reduces to fewer colors.
  SteepCounter c1b(1);
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m)
      CHECK(c2.count(Degree(n, {m, 0})) == c1b.count(Degree(n, {m})));

  CHECK(c1.count(Degree(0, {-1})) == 0);
  CHECK_THROWS_AS(c1.count(Degree(0, {0, 0})), std::invalid_argument);
}

TEST_CASE("count comparison rows") {
  const auto rows = compare_counts(1, 3, 3);
  CHECK(rows.size() == 16);
  for (const CountRow& row : rows) {
    CAPTURE(row.d.str());
    CHECK(row.pass);
    CHECK_FALSE(row.has_quotient);
    CHECK(row.series == row.steep);
  }

  std::map<Degree, size_t> dims;
  dims[Degree(1, {1})] = 2;
  dims[Degree(2, {1})] = 4;  // deliberately wrong
  const auto with_q = compare_counts(1, 2, 1, &dims);
  for (const CountRow& row : with_q) {
    if (row.d == Degree(1, {1})) {
      CHECK(row.has_quotient);
      CHECK(row.pass);
    } else if (row.d == Degree(2, {1})) {
      CHECK(row.has_quotient);
      CHECK_FALSE(row.pass);
    } else {
      CHECK_FALSE(row.has_quotient);
      CHECK(row.pass);
    }
  }
}

TEST_CASE("report line formats") {
  IdentityReport rep;
  rep.fact = "triple_binom";
  rep.params = {1, 2, 3};
  rep.pass = true;
  CHECK(report_csv_header() == "fact,params,pass");
  CHECK(report_csv_line(rep) == "triple_binom,1;2;3,pass");
  rep.pass = false;
  rep.witness = "lhs != rhs";
  CHECK(report_csv_line(rep) == "triple_binom,1;2;3,FAIL");
  const auto j = nlohmann::json::parse(report_json_line(rep));
  CHECK(j.at("fact") == "triple_binom");
  CHECK(j.at("params") == std::vector<long>({1, 2, 3}));
  CHECK(j.at("pass") == false);
  CHECK(j.at("witness") == "lhs != rhs");

  CHECK(dims_csv_header(2) == "n,m1,m2,dim");
  CHECK(dims_csv_line(Degree(1, {2, 3}), 7) == "1,2,3,7");
  const auto dj = nlohmann::json::parse(dims_json_line(Degree(1, {2}), 5));
  CHECK(dj.at("n") == 1);
  CHECK(dj.at("m") == std::vector<int>({2}));
  CHECK(dj.at("dim") == 5);

  CountRow row;
  row.d = Degree(1, {1});
  row.series = row.recursion = row.steep = 2;
  row.quotient = 2;
  row.has_quotient = true;
  row.pass = true;
  CHECK(counts_csv_header(1) == "n,m1,series,recursion,steep,quotient,pass");
  CHECK(counts_csv_line(row) == "1,1,2,2,2,2,pass");
  row.has_quotient = false;
  CHECK(counts_csv_line(row) == "1,1,2,2,2,,pass");
  row.pass = false;
  CHECK(counts_csv_line(row) == "1,1,2,2,2,,FAIL");

  const Steep b = parse_steep("j | (i,1) j", 1);
  const auto sj = nlohmann::json::parse(steep_json_line(b, 1));
  CHECK(sj.at("n") == 1);
  CHECK(sj.at("steep") == "j | (i,1) j");
}
