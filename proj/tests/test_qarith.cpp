#include <catch2/catch_amalgamated.hpp>

#include "cometq/identities.hpp"
#include "cometq/qarith.hpp"
#include "cometq/ratfun.hpp"

using namespace cometq;

namespace {

Laurent vp(long e) { return Laurent::v_pow(e); }

}  // namespace

TEST_CASE("quantum integers match frozen values") {
  CHECK(qint(0).is_zero());
  CHECK(qint(1) == Laurent(1));
  CHECK(qint(2) == vp(1) + vp(-1));
  CHECK(qint(3) == vp(2) + Laurent(1) + vp(-2));
  CHECK(qint(-3) == -qint(3));
  CHECK(qint(5).eval(Rat(2)) == Rat(341, 16));
}

TEST_CASE("quantum factorials match frozen values") {
  CHECK(qfact(0) == Laurent(1));
  CHECK(qfact(1) == Laurent(1));
  CHECK(qfact(2) == qint(2));
  CHECK(qfact(3) == vp(3) + Laurent::term(2, 1) + Laurent::term(2, -1) + vp(-3));
}

TEST_CASE("gaussian binomials match frozen values") {
  CHECK(qbinom(4, 2) == vp(4) + vp(2) + Laurent::term(2, 0) + vp(-2) + vp(-4));
  CHECK(qbinom(3, 0) == Laurent(1));
  CHECK(qbinom(3, 5).is_zero());
  CHECK(qbinom(2, -1).is_zero());
  for (long s = 0; s <= 5; ++s) {
    const Laurent want(s % 2 == 0 ? 1 : -1);
    CHECK(qbinom(-1, s) == want);
  }
}

TEST_CASE("binomials are bar invariant and symmetric") {
  for (long n = 0; n <= 8; ++n)
    for (long k = 0; k <= n; ++k) {
      CAPTURE(n, k);
      CHECK(qbinom(n, k).bar() == qbinom(n, k));
      CHECK(qbinom(n, k) == qbinom(n, n - k));
    }
}

TEST_CASE("balanced binomial equals the q-analogue under q = v^2") {
  for (long n = -4; n <= 8; ++n)
    for (long k = 0; k <= 8; ++k) {
      CAPTURE(n, k);
      CHECK(qbinom(n, k) == qbinom_from_q_analogue(n, k));
    }
}

TEST_CASE("symbolic arithmetic agrees with direct rational evaluation") {
  const std::vector<Rat> points{Rat(3, 2), Rat(-7, 5), Rat(5)};
  for (const Rat& t : points) {
    for (long n = -5; n <= 7; ++n) {
      CHECK(qint(n).eval(t) == qint_eval(n, t));
      for (long k = 0; k <= 7; ++k) CHECK(qbinom(n, k).eval(t) == qbinom_eval(n, k, t));
    }
    for (long n = 0; n <= 7; ++n) CHECK(qfact(n).eval(t) == qfact_eval(n, t));
  }
}

TEST_CASE("laurent exact division and throwing behavior") {
  CHECK(qfact(3).div_exact(qint(3)) == qfact(2));
  CHECK((qint(2) * qint(5)).div_exact(qint(2)) == qint(5));
  CHECK_THROWS_AS(qint(3).div_exact(qint(2)), std::domain_error);
}

TEST_CASE("rational functions canonicalize and detect lattice membership") {
  CHECK(RatFun(qint(4), qint(4)) == RatFun(1));
  CHECK(RatFun(qint(4) * qint(2), qint(2)) == RatFun(qint(4)));

  const RatFun unit1(Laurent(1));
  CHECK(unit1.order() == 0);
  CHECK(unit1.regular_at_vinv());
  CHECK_FALSE(unit1.in_vinv_ideal());

  CHECK(RatFun::v_pow(-1).order() == -1);
  CHECK(RatFun::v_pow(-1).in_vinv_ideal());
  CHECK_FALSE(RatFun::v_pow(1).regular_at_vinv());

  // 1 / (v + 1): top degrees 0 and 1, so order -1.
  const RatFun f(Laurent(1), vp(1) + Laurent(1));
  CHECK(f.order() == -1);
  CHECK(f.in_vinv_ideal());

  // (v^2 + 1) / (v + 3) has order 1: a pole at v^{-1} = 0.
  const RatFun g(vp(2) + Laurent(1), vp(1) + Laurent(3));
  CHECK(g.order() == 1);
  CHECK_FALSE(g.regular_at_vinv());

  CHECK(RatFun().order() == std::nullopt);
  CHECK(RatFun().regular_at_vinv());
  CHECK(RatFun().in_vinv_ideal());
}

TEST_CASE("field arithmetic in Q(v) round-trips") {
  const RatFun a(qint(3), qint(2));
  const RatFun b(qint(5), qfact(3));
  CHECK((a / b) * b == a);
  CHECK(a * a.inv() == RatFun(1));
  CHECK((a + b) - b == a);
  const Rat t(11, 3);
  CHECK((a * b).eval(t) == a.eval(t) * b.eval(t));
}

TEST_CASE("every identity family passes on its documented grid") {
  for (const std::string& name : identity_names()) {
    size_t count = 0;
    for (const std::vector<long>& params : identity_grid(name)) {
      const IdentityReport rep = check_identity(name, params);
      if (!rep.pass) {
        CAPTURE(name, params, rep.witness);
        REQUIRE(rep.pass);
      }
      ++count;
    }
    CHECK(count > 0);
  }
}

TEST_CASE("identity grids honor the documented acceptance sizes") {
  CHECK(identity_grid("triple_binom").size() == 343);
  CHECK(identity_grid("q_triple").size() == 343);
  CHECK(identity_grid("triple_binom", 2).size() == 27);
}

TEST_CASE("numeric specialization confirms the symbolic identities") {
  const std::vector<Rat> points{Rat(4, 3), Rat(-3, 2)};
  for (const std::string& name : identity_names())
    for (const std::vector<long>& params : identity_grid(name, 3))
      for (const Rat& t : points) {
        CAPTURE(name, params, t);
        CHECK(check_identity_at(name, params, t));
      }
}

TEST_CASE("unknown identities and bad arity are rejected") {
  CHECK_THROWS_AS(check_identity("no_such_fact", {}), std::invalid_argument);
  CHECK_THROWS_AS(check_identity("pascal", {1}), std::invalid_argument);
  CHECK_THROWS_AS(identity_grid("no_such_fact"), std::invalid_argument);
}
