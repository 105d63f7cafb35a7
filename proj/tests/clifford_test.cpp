#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cliffcert/clifford.hpp"
#include "cliffcert/repspace.hpp"

using namespace cliffcert;

TEST_CASE("scalar action detection") {
  CycCtx ctx(3);
  const Generators g = standard_generators(ctx);
  const auto basis = code_basis(ctx, CodeSign::Minus);

  const auto on_identity = scalar_action(Monomial::identity(ctx), basis);
  REQUIRE(on_identity.has_value());
  CHECK(on_identity->is_one());

  const auto on_scalar = scalar_action(Monomial::identity(ctx).scaled(2), basis);
  REQUIRE(on_scalar.has_value());
  CHECK(*on_scalar == Cyc::omega_pow(ctx, 2));

  CHECK_FALSE(scalar_action(g.shift, basis).has_value());
  CHECK_FALSE(scalar_action(g.clock, basis).has_value());

  // B^4 acts diagonally but with distinct eigenvalues, so it is not scalar.
  CHECK_FALSE(scalar_action(g.clock.powered(4), basis).has_value());
}

TEST_CASE("quasikernel equals the center on the code space") {
  CycCtx ctx(3);
  const Generators gen = standard_generators(ctx);
  const Group g = Group::closure({gen.shift, gen.clock, gen.flip});
  const Group q = quasikernel(g, code_basis(ctx, CodeSign::Minus));
  const Group z = center(g);

  CHECK(q.order() == 6);
  CHECK(q.contains_all(z));
  CHECK(z.contains_all(q));
}

TEST_CASE("workspace computes and caches the structure") {
  Workspace ws(3);
  CHECK(ws.ctx().prime() == 3);
  const Group* first = &ws.full_group();
  CHECK(first == &ws.full_group());
  CHECK(ws.full_group().order() == 216);
  CHECK(ws.diag_group().order() == 108);
  CHECK(ws.code_group().order() == 108);
  CHECK(ws.center_group().order() == 6);
  CHECK(ws.basis(CodeSign::Minus).size() == 3);
  CHECK(ws.norm_phi_G() == 1);
  CHECK(ws.norm_phi_N() == 2);
  CHECK(ws.norm_chi(CodeSign::Minus) == 1);
  CHECK(ws.norm_chi(CodeSign::Plus) == 1);
  CHECK(ws.cross_norm_chi() == 0);
  CHECK(ws.multiplicity_chi_minus() == 1);
  CHECK(ws.quasikernel_group().order() == 6);
  CHECK(ws.invariance(CodeSign::Minus).invariant);
  CHECK(ws.invariance(CodeSign::Plus).invariant);
}

TEST_CASE("stabilizer comparison rejects the code space") {
  Workspace ws(3);
  const StabilizerVerdict& v = ws.stabilizer(CodeSign::Minus);
  CHECK(v.quasikernel_order == 6);
  CHECK(v.chi_one == 3);
  CHECK(v.deg_rho == 6);
  REQUIRE(v.candidates.size() == 1);
  CHECK(v.candidates[0].order == 6);
  CHECK(v.candidates[0].n_over_h == 18);
  CHECK(v.candidates[0].chi_one_sq == 9);
  CHECK_FALSE(v.candidates[0].stabilizer_match);
  CHECK_FALSE(v.candidates[0].deg_rho_match);
  CHECK_FALSE(v.is_stabilizer);
  CHECK_FALSE(v.aux_is_stabilizer);
  CHECK(v.criteria_agree);
}

TEST_CASE("stabilizer test accepts a genuine scalar-group code") {
  // Control scenario: the group of scalar matrices lambda^a I fixing a single
  // coordinate line.  The primary criterion reports a stabilizer code while
  // the ambient-degree comparison disagrees, and the disagreement is surfaced
  // rather than resolved.
  CycCtx ctx(3);
  const Group g = Group::closure({Monomial::identity(ctx).scaled(4)});
  REQUIRE(g.order() == 3);

  CycVector e0(6);
  e0.setZero();
  e0(0) = Cyc::one(ctx);
  const std::vector<CycVector> basis{e0};
  const Character chi = restricted_character(g, projector(basis));

  const StabilizerVerdict v = stabilizer_test(g, g, basis, chi);
  CHECK(v.quasikernel_order == 3);
  CHECK(v.chi_one == 1);
  REQUIRE(v.candidates.size() == 1);
  CHECK(v.candidates[0].n_over_h == 1);
  CHECK(v.is_stabilizer);
  CHECK_FALSE(v.aux_is_stabilizer);
  CHECK_FALSE(v.criteria_agree);
}

TEST_CASE("stabilizer test preconditions") {
  Workspace ws(3);
  const Group& g = ws.full_group();
  const Generators gen = ws.gens();
  const auto& basis = ws.basis(CodeSign::Minus);
  const Character& chi = ws.chi(CodeSign::Minus);

  const Group flip_only = Group::closure({gen.flip});
  CHECK_THROWS_AS(stabilizer_test(g, flip_only, basis, chi), std::invalid_argument);

  const Group shifts = Group::closure({gen.shift});  // misses the center
  CHECK_THROWS_AS(stabilizer_test(g, shifts, basis, chi), std::invalid_argument);

  const Character& phi = ws.natural_char();  // norm two on the code subgroup
  CHECK_THROWS_AS(stabilizer_test(g, ws.code_group(), basis, phi),
                  std::invalid_argument);
}

TEST_CASE("certification runs every check") {
  const Certification cert = certify(3);
  const CliffordCodeReport& rep = cert.report;

  CHECK(rep.p == 3);
  CHECK(rep.order_G == 216);
  CHECK(rep.order_ZG == 6);
  CHECK(rep.order_N == 108);
  CHECK(rep.order_AB == 108);
  CHECK(rep.index_G_N == 2);
  CHECK(rep.norm_phi_G == 1);
  CHECK(rep.norm_phi_N == 2);
  CHECK(rep.norm_chi1_N == 1);
  CHECK(rep.multiplicity_chi1_phiN == 1);
  CHECK(rep.invariance_V1);
  CHECK(rep.invariance_V2);
  CHECK(rep.quasikernel_order == 6);
  CHECK_FALSE(rep.stabilizer.is_stabilizer);
  CHECK(rep.timing_ms > 0.0);

  REQUIRE(rep.checks.size() == known_check_ids().size());
  for (std::size_t i = 0; i < rep.checks.size(); ++i) {
    CHECK(rep.checks[i].id == known_check_ids()[i]);
    CHECK(rep.checks[i].pass);
    CHECK_FALSE(rep.checks[i].detail.empty());
  }
  CHECK_FALSE(rep.oracle_checks.empty());
  for (const auto& c : rep.oracle_checks) CHECK(c.pass);
  CHECK(rep.all_pass());
}

TEST_CASE("certification options") {
  CertifyOptions options;
  options.oracle = false;
  const Certification cert = certify(3, options);
  CHECK(cert.report.oracle_checks.empty());
  CHECK(cert.report.all_pass());

  CHECK_THROWS_AS(certify(4), std::invalid_argument);
  CHECK_THROWS_AS(certify(1), std::invalid_argument);
  CHECK_THROWS_AS(certify(-3), std::invalid_argument);

  CertifyOptions tiny;
  tiny.cap = 10;
  CHECK_THROWS_AS(certify(3, tiny), CapExceededError);
}

TEST_CASE("verifying a subset of checks") {
  const auto single = verify_propositions(3, {"L3.1"});
  REQUIRE(single.size() == 1);
  CHECK(single[0].id == "L3.1");
  CHECK(single[0].pass);

  // results come back in registry order regardless of request order
  const auto pair = verify_propositions(3, {"P5.1", "L3.2"});
  REQUIRE(pair.size() == 2);
  CHECK(pair[0].id == "L3.2");
  CHECK(pair[1].id == "P5.1");

  CHECK_THROWS_AS(verify_propositions(3, {"X9.9"}), std::invalid_argument);
  CHECK_THROWS_AS(verify_propositions(9, {"L3.1"}), std::invalid_argument);
}

TEST_CASE("known check ids are stable") {
  const auto& ids = known_check_ids();
  REQUIRE(ids.size() == 13);
  CHECK(ids.front() == "L3.1");
  CHECK(ids.back() == "P5.2");
}
