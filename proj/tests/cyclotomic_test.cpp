#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cliffcert/cyclotomic.hpp"
#include "test_oracles.hpp"

using namespace cliffcert;

TEST_CASE("odd prime recognition") {
  for (long p : {3, 5, 7, 11, 13, 97}) CHECK(is_odd_prime(p));
  for (long p : {-3, 0, 1, 2, 4, 9, 15, 21, 91}) CHECK_FALSE(is_odd_prime(p));
}

TEST_CASE("context construction and modulus") {
  CycCtx ctx(3);
  CHECK(ctx.prime() == 3);
  CHECK(ctx.root_order() == 12);
  CHECK(ctx.degree() == 4);
  const std::vector<Rational> want{Rational(1), Rational(0), Rational(-1),
                                   Rational(0), Rational(1)};
  CHECK(ctx.modulus() == want);

  CHECK(CycCtx(5).degree() == 8);
  CHECK(CycCtx(7).modulus().size() == 13);

  CHECK_THROWS_AS(CycCtx(2), std::invalid_argument);
  CHECK_THROWS_AS(CycCtx(4), std::invalid_argument);
  CHECK_THROWS_AS(CycCtx(9), std::invalid_argument);
  CHECK_THROWS_AS(CycCtx(1), std::invalid_argument);
  CHECK_THROWS_AS(CycCtx(-3), std::invalid_argument);
}

TEST_CASE("root of unity identities") {
  for (long p : {3L, 5L, 7L}) {
    CycCtx ctx(p);
    const Cyc w = Cyc::omega_pow(ctx, 1);
    CHECK(Cyc::omega_pow(ctx, 4 * p).is_one());
    CHECK(Cyc::omega_pow(ctx, 2 * p) == Cyc(-1));
    CHECK(Cyc::omega_pow(ctx, -1) == Cyc::omega_pow(ctx, 4 * p - 1));

    const Cyc i = Cyc::omega_pow(ctx, p);
    CHECK(i * i == Cyc(-1));
    CHECK(imag(i) == Cyc(1));
    CHECK(real(i).is_zero());

    // The primitive p-th root lambda = w^4 sums to zero over a full cycle.
    Cyc acc(0);
    for (long k = 0; k < p; ++k) acc += Cyc::omega_pow(ctx, 4 * k);
    CHECK(acc.is_zero());

    CHECK((conj(w) * w).is_one());
    CHECK(conj(w) == Cyc::omega_pow(ctx, -1));
  }
}

TEST_CASE("numeric value of lambda at p = 3") {
  CycCtx ctx(3);
  const auto lam = Cyc::omega_pow(ctx, 4).approx();
  CHECK(lam.real() == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(lam.imag() == doctest::Approx(0.8660254037844387).epsilon(1e-12));
}

TEST_CASE("reduction agrees with unreduced numeric evaluation") {
  std::mt19937 rng(20240816);
  std::uniform_int_distribution<long> coeff(-5, 5);
  for (long p : {3L, 5L, 7L}) {
    CycCtx ctx(p);
    for (int round = 0; round < 20; ++round) {
      std::vector<long> raw(4 * p);
      for (auto& c : raw) c = coeff(rng);
      Cyc exact(0);
      for (long k = 0; k < 4 * p; ++k) {
        exact += Cyc(raw[k]) * Cyc::omega_pow(ctx, k);
      }
      CHECK(testref::close(exact.approx(), testref::eval_power_sum(p, raw), 1e-9));
    }
  }
}

TEST_CASE("field arithmetic properties on random elements") {
  std::mt19937 rng(7);
  CycCtx ctx(5);
  for (int round = 0; round < 25; ++round) {
    const Cyc a = testref::random_attached(ctx, rng);
    const Cyc b = testref::random_attached(ctx, rng);
    const Cyc c = testref::random_attached(ctx, rng);

    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(conj(a * b) == conj(a) * conj(b));
    CHECK(conj(conj(a)) == a);
    CHECK(imag(a * conj(a)).is_zero());

    CHECK(testref::close((a * b).approx(), a.approx() * b.approx(), 1e-9));
    CHECK(testref::close((a + b).approx(), a.approx() + b.approx(), 1e-9));
    CHECK(testref::close(conj(a).approx(), std::conj(a.approx()), 1e-9));

    if (!a.is_zero()) {
      CHECK((a * a.inverse()).is_one());
      CHECK((b / a) * a == b);
    }
  }
}

TEST_CASE("inverse closed forms and failure on zero") {
  CycCtx ctx(3);
  const Cyc i = Cyc::omega_pow(ctx, 3);
  const Cyc one_plus_i = Cyc(1) + i;
  CHECK(one_plus_i.inverse() == (Cyc(1) - i) * Cyc(Rational(1, 2)));

  CHECK(Cyc(5).inverse() == Cyc(Rational(1, 5)));
  CHECK_THROWS_AS(Cyc(0).inverse(), std::domain_error);
  CHECK_THROWS_AS(Cyc::zero(ctx).inverse(), std::domain_error);
}

TEST_CASE("literal and attached interplay") {
  CycCtx ctx(3);
  CHECK(Cyc(2).is_literal());
  CHECK_FALSE(Cyc::one(ctx).is_literal());
  CHECK(Cyc(2) + Cyc::one(ctx) == Cyc(3));
  CHECK((Cyc(2) + Cyc::one(ctx)).context() == &ctx);
  CHECK(Cyc(Rational(1, 2)) * Cyc(2) == Cyc(1));

  const Cyc r = Cyc::rational(ctx, Rational(5, 3));
  CHECK(r.is_rational());
  CHECK(r.rational_value() == Rational(5, 3));
  CHECK_FALSE(r.is_integer());
  CHECK(Cyc(7).is_integer());
  CHECK(Cyc(7).as_integer() == 7);
  CHECK_FALSE(Cyc::omega_pow(ctx, 1).is_rational());

  CHECK(Cyc(0).is_zero());
  CHECK(Cyc(1).is_one());
  CHECK(Cyc::zero(ctx).is_zero());

  const std::vector<Rational> coeffs = Cyc(Rational(3, 4)).coeffs(ctx);
  CHECK(coeffs.size() == static_cast<std::size_t>(ctx.degree()));
  CHECK(coeffs[0] == Rational(3, 4));
  CHECK(coeffs[1] == Rational(0));
}

TEST_CASE("values from different contexts refuse to combine") {
  CycCtx ctx3(3);
  CycCtx ctx5(5);
  const Cyc a = Cyc::omega_pow(ctx3, 1);
  const Cyc b = Cyc::omega_pow(ctx5, 1);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("from_coeffs validates the length") {
  CycCtx ctx(3);
  CHECK_THROWS_AS(Cyc::from_coeffs(ctx, {Rational(1)}), std::invalid_argument);
  const Cyc z = Cyc::from_coeffs(
      ctx, {Rational(1), Rational(2), Rational(0), Rational(0)});
  CHECK(z == Cyc(1) + Cyc(2) * Cyc::omega_pow(ctx, 1));
}

TEST_CASE("rational string round trips") {
  CHECK(rational_to_string(Rational(3, 4)) == "3/4");
  CHECK(rational_to_string(Rational(-2)) == "-2/1");
  CHECK(rational_from_string("3/4") == Rational(3, 4));
  CHECK(rational_from_string("-2") == Rational(-2));
  CHECK(rational_from_string("6/8") == Rational(3, 4));
  CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("abc"), std::invalid_argument);
}

TEST_CASE("printing") {
  CycCtx ctx(3);
  CHECK_FALSE(Cyc::omega_pow(ctx, 1).to_string().empty());
  std::ostringstream os;
  os << (Cyc(1) + Cyc::omega_pow(ctx, 1));
  CHECK_FALSE(os.str().empty());
}

TEST_CASE("Eigen plumbing with the exact scalar") {
  CycCtx ctx(3);
  const Cyc i = Cyc::omega_pow(ctx, 3);

  CycVector v(2);
  v << Cyc(1), i;
  CHECK(v.dot(v) == Cyc(2));  // dot conjugates its left argument

  CycMatrix m(2, 2);
  m << Cyc::omega_pow(ctx, 1), Cyc(0), Cyc(0), Cyc::omega_pow(ctx, -1);
  const CycMatrix sq = m * m;
  CHECK(sq(0, 0) == Cyc::omega_pow(ctx, 2));
  CHECK(exactly_equal(sq, testref::naive_product(m, m)));

  const CycMatrix eye = CycMatrix::Identity(3, 3);
  CHECK(eye(0, 0).is_one());
  CHECK(eye(0, 1).is_zero());
  CHECK(exactly_equal(CycMatrix(m.adjoint() * m), CycMatrix(CycMatrix::Identity(2, 2))));

  CycVector z(4);
  z.setZero();
  CHECK(z(3).is_zero());
}

TEST_CASE("random matrix products match the schoolbook rule") {
  std::mt19937 rng(99);
  CycCtx ctx(3);
  for (int round = 0; round < 5; ++round) {
    CycMatrix a(3, 3), b(3, 3);
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) {
        a(r, c) = testref::random_attached(ctx, rng);
        b(r, c) = testref::random_attached(ctx, rng);
      }
    }
    CHECK(exactly_equal(a * b, testref::naive_product(a, b)));
  }
}
