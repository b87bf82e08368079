#include <catch2/catch_amalgamated.hpp>

#include "cometq/algfacts.hpp"
#include "cometq/lattice.hpp"

using namespace cometq;

namespace {

QuiverParams box_r1() {
  QuiverParams p;
  p.omega = 2;
  p.r = 1;
  p.maxI = 3;
  p.maxJ = 3;
  p.maxLoop = 3;
  return p;
}

QuiverParams box_r2() {
  QuiverParams p;
  p.omega = 2;
  p.r = 2;
  p.maxI = 2;
  p.maxJ = 2;
  p.maxLoop = 2;
  return p;
}

}  // namespace

TEST_CASE("operator word enumeration") {
  const QuiverParams p = box_r1();
  CHECK(enumerate_opwords(p, Degree(1, {1})).size() == 2);
  CHECK(enumerate_opwords(p, Degree(1, {2})).size() == 3);
  // Exact mode admits only the size-one loop; permissive mode admits all.
  CHECK(enumerate_opwords(p, Degree(2, {0})).size() == 1);
  CHECK(enumerate_opwords(p, Degree(2, {0}), true).size() == 2);
}

TEST_CASE("operator word images use divided powers") {
  GradedQuotient q(box_r1());
  const GenTable& tab = q.table();
  CHECK(opword_image(q, parse_opword("j j", 1)) == divided_power_real(tab, 1, 2));
  CHECK(opword_image(q, parse_opword("1", 1)) == NCPoly::unit());
  CHECK(opword_image(q, parse_opword("(i,1)", 1)) ==
        NCPoly::generator(tab, Gen::loop(1)));
}

TEST_CASE("lattice basis and membership at one mixed degree") {
  GradedQuotient q(box_r1());
  const GenTable& tab = q.table();
  const Degree d(1, {1});
  const LatticeBasis L = lattice_build(q, d);
  CHECK(L.ncoords == 2);
  CHECK(L.rank() == 2);
  CHECK(L.opwords.size() == 2);

  const NCPoly fj = NCPoly::generator(tab, Gen::real(1));
  const NCPoly fi = NCPoly::generator(tab, Gen::loop(1));
  NCPoly shifted = fj * fi;
  shifted.scale(RatFun::v_pow(-1));
  const NCPoly kernel_elt = fi * fj - shifted;

  const auto mem = lattice_member(L, q.reduce_at(d, kernel_elt));
  CHECK(mem.in_span);
  CHECK(mem.in_lattice);
  CHECK_FALSE(mem.in_vinv);

  NCPoly small = kernel_elt;
  small.scale(RatFun::v_pow(-1));
  const auto mem2 = lattice_member(L, q.reduce_at(d, small));
  CHECK(mem2.in_lattice);
  CHECK(mem2.in_vinv);

  NCPoly big = fi * fj;
  big.scale(RatFun::v_pow(1));
  const auto mem3 = lattice_member(L, q.reduce_at(d, big));
  CHECK(mem3.in_span);
  CHECK_FALSE(mem3.in_lattice);

  // Zero is everywhere.
  const auto mem0 = lattice_member(L, std::vector<RatFun>(L.ncoords, RatFun()));
  CHECK(mem0.in_vinv);
}

TEST_CASE("lattice equivalence detects the crystal rewrite") {
  GradedQuotient q(box_r1());
  // ftilde_(i,1) ftilde_j^2 and ftilde_j ftilde_(i,1) ftilde_j coincide
  // modulo v^{-1}L; at one real letter fewer the two orders differ.
  const Degree d2(1, {2});
  const LatticeBasis L2 = lattice_build(q, d2);
  const NCPoly x = opword_image(q, parse_opword("(i,1) j j", 1));
  const NCPoly y = opword_image(q, parse_opword("j (i,1) j", 1));
  CHECK(lattice_equiv(q, L2, x, y));

  const Degree d1(1, {1});
  const LatticeBasis L1 = lattice_build(q, d1);
  const NCPoly a = opword_image(q, parse_opword("(i,1) j", 1));
  const NCPoly b = opword_image(q, parse_opword("j (i,1)", 1));
  CHECK_FALSE(lattice_equiv(q, L1, a, b));

  // Arguments outside the lattice are a stability violation, not a "false".
  NCPoly big = a;
  big.scale(RatFun::v_pow(1));
  CHECK_THROWS_AS(lattice_equiv(q, L1, big, a), std::invalid_argument);
}

TEST_CASE("structural fact catalogue is exercised in full") {
  const auto names = algebra_fact_names();
  CHECK(names.size() == 17);

  GradedQuotient q1(box_r1());
  GradedQuotient q2(box_r2());
  size_t ran1 = 0, ran2 = 0;
  for (const std::string& fact : names) {
    for (const auto& params : algebra_fact_grid(q1, fact)) {
      const IdentityReport rep = verify_algebra_fact(q1, fact, params);
      CAPTURE(rep.fact, rep.params, rep.witness);
      CHECK(rep.pass);
      ++ran1;
    }
    for (const auto& params : algebra_fact_grid(q2, fact)) {
      const IdentityReport rep = verify_algebra_fact(q2, fact, params);
      CAPTURE(rep.fact, rep.params, rep.witness);
      CHECK(rep.pass);
      ++ran2;
    }
  }
  // Both parameter sets actually produced work, including the two-color facts.
  CHECK(ran1 > 10);
  CHECK(ran2 > 10);
  CHECK(algebra_fact_grid(q1, "ftilde_commute").empty());
  CHECK_FALSE(algebra_fact_grid(q2, "ftilde_commute").empty());

  CHECK_THROWS_AS(verify_algebra_fact(q1, "nonsense", {}), std::invalid_argument);
  CHECK_THROWS_AS(verify_algebra_fact(q1, "moving_fjs", {1}), std::invalid_argument);
  CHECK_THROWS_AS(verify_algebra_fact(q1, "moving_fjs", {3, 9}), std::invalid_argument);
}
