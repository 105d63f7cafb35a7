#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cliffcert/monomial.hpp"
#include "test_oracles.hpp"

using namespace cliffcert;

TEST_CASE("standard generators at p = 3 have the expected entries") {
  CycCtx ctx(3);
  const Generators g = standard_generators(ctx);

  CHECK(g.shift.perm() == std::vector<std::int32_t>{1, 2, 0, 5, 3, 4});
  CHECK(g.shift.phases() == std::vector<std::int32_t>{0, 0, 0, 0, 0, 0});

  CHECK(g.clock.perm() == std::vector<std::int32_t>{0, 1, 2, 3, 4, 5});
  CHECK(g.clock.phases() == std::vector<std::int32_t>{3, 7, 11, 9, 5, 1});

  CHECK(g.flip.perm() == std::vector<std::int32_t>{3, 4, 5, 0, 1, 2});
  CHECK(g.flip.phases() == std::vector<std::int32_t>{6, 6, 6, 0, 0, 0});
}

TEST_CASE("generator orders") {
  for (long p : {3L, 5L, 7L}) {
    CycCtx ctx(p);
    const Generators g = standard_generators(ctx);
    CHECK(g.shift.order() == p);
    CHECK(g.clock.order() == 4 * p);
    CHECK(g.flip.order() == 4);
    CHECK(Monomial::identity(ctx).order() == 1);
    CHECK(Monomial::identity(ctx).scaled(1).order() == 4 * p);

    CHECK(g.flip * g.flip == Monomial::identity(ctx).scaled(2 * p));
  }
}

TEST_CASE("commutation of shift and clock") {
  for (long p : {3L, 5L, 7L}) {
    CycCtx ctx(p);
    const Generators g = standard_generators(ctx);
    CHECK(g.shift.inverse() * g.clock * g.shift == g.clock.scaled(4));
    CHECK(g.shift * g.clock * g.shift.inverse() == g.clock.scaled(4 * p - 4));
  }
}

TEST_CASE("traces") {
  CycCtx ctx(3);
  const Generators g = standard_generators(ctx);
  CHECK(Monomial::identity(ctx).trace() == Cyc(6));
  CHECK(g.clock.trace().is_zero());
  CHECK(g.shift.trace().is_zero());
  CHECK(Monomial::identity(ctx).scaled(6).trace() == Cyc(-6));

  for (const Monomial& m : {g.shift, g.clock, g.flip}) {
    CHECK(m.trace() == m.to_dense().trace());
  }
}

TEST_CASE("product and inverse match the dense matrices") {
  std::mt19937 rng(42);
  CycCtx ctx(3);
  for (int round = 0; round < 15; ++round) {
    const Monomial m = testref::random_monomial(ctx, rng);
    const Monomial n = testref::random_monomial(ctx, rng);
    CHECK(exactly_equal((m * n).to_dense(),
                        testref::naive_product(m.to_dense(), n.to_dense())));
    CHECK(m * m.inverse() == Monomial::identity(ctx));
    CHECK(m.inverse() * m == Monomial::identity(ctx));
  }
}

TEST_CASE("apply agrees with the dense action") {
  std::mt19937 rng(43);
  CycCtx ctx(3);
  for (int round = 0; round < 10; ++round) {
    const Monomial m = testref::random_monomial(ctx, rng);
    const CycVector v = testref::random_vector(ctx, m.dim(), rng);
    const CycVector lhs = m.apply(v);
    const CycVector rhs = m.to_dense() * v;
    CHECK(exactly_equal(lhs, rhs));
  }

  const Generators g = standard_generators(ctx);
  CycVector e0(6);
  e0.setZero();
  e0(0) = Cyc(1);
  const CycVector shifted = g.shift.apply(e0);
  CHECK(shifted(1).is_one());
  CHECK(shifted(0).is_zero());
  const CycVector flipped = g.flip.apply(e0);
  CHECK(flipped(3) == Cyc(-1));
}

TEST_CASE("scaling and powering") {
  CycCtx ctx(3);
  const Generators g = standard_generators(ctx);
  const Cyc w4 = Cyc::omega_pow(ctx, 4);
  CHECK(exactly_equal(g.shift.scaled(4).to_dense(), CycMatrix(w4 * g.shift.to_dense())));
  CHECK(g.shift.scaled(4).scaled(8) == g.shift);  // w^12 = 1

  CHECK(g.clock.powered(0) == Monomial::identity(ctx));
  CHECK(g.clock.powered(1) == g.clock);
  Monomial acc = Monomial::identity(ctx);
  for (int k = 0; k < 5; ++k) acc = acc * g.clock;
  CHECK(g.clock.powered(5) == acc);
}

TEST_CASE("constructor validation and phase normalization") {
  CycCtx ctx(3);
  std::vector<std::int32_t> id{0, 1, 2, 3, 4, 5};

  CHECK_THROWS_AS(Monomial(ctx, {0, 1, 2}, {0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Monomial(ctx, {0, 0, 2, 3, 4, 5}, std::vector<std::int32_t>(6, 0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(Monomial(ctx, id, {0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Monomial(ctx, {0, 1, 2, 3, 4, 6}, std::vector<std::int32_t>(6, 0)),
                  std::invalid_argument);

  const Monomial m(ctx, id, std::vector<std::int32_t>(6, -1));
  CHECK(m.phases() == std::vector<std::int32_t>(6, 11));
  const Monomial n(ctx, id, std::vector<std::int32_t>(6, 12));
  CHECK(n == Monomial::identity(ctx));
}

TEST_CASE("canonical keys separate distinct matrices") {
  CycCtx ctx(3);
  const Generators g = standard_generators(ctx);
  CHECK(g.shift.canonical_key() != g.clock.canonical_key());
  CHECK(g.clock.canonical_key() != g.clock.scaled(1).canonical_key());
  CHECK(g.shift.canonical_key() == standard_generators(ctx).shift.canonical_key());
}

TEST_CASE("printing") {
  CycCtx ctx(3);
  std::ostringstream os;
  os << standard_generators(ctx).flip;
  CHECK_FALSE(os.str().empty());
}
