#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cliffcert/serialize.hpp"
#include "test_oracles.hpp"

using namespace cliffcert;
using nlohmann::json;

TEST_CASE("cyclotomic values round trip through json") {
  std::mt19937 rng(17);
  CycCtx ctx(5);
  for (int round = 0; round < 10; ++round) {
    const Cyc z = testref::random_attached(ctx, rng);
    CHECK(cyc_from_json(ctx, cyc_to_json(ctx, z)) == z);
  }

  const auto j = cyc_to_json(ctx, Cyc(Rational(3, 4)));
  REQUIRE(j.size() == static_cast<std::size_t>(ctx.degree()));
  CHECK(j[0] == "3/4");
  CHECK(j[1] == "0/1");
}

TEST_CASE("cyclotomic json validation") {
  CycCtx ctx(3);
  CHECK_THROWS_AS(cyc_from_json(ctx, json::array({"1"})), std::invalid_argument);
  CHECK_THROWS_AS(cyc_from_json(ctx, json::array({1, 2, 3, 4})),
                  std::invalid_argument);
  CHECK_THROWS_AS(cyc_from_json(ctx, json::array({"1", "2", "x", "4"})),
                  std::invalid_argument);
}

TEST_CASE("monomials round trip through json") {
  std::mt19937 rng(18);
  CycCtx ctx(3);
  for (int round = 0; round < 10; ++round) {
    const Monomial m = testref::random_monomial(ctx, rng);
    CHECK(monomial_from_json(ctx, monomial_to_json(m)) == m);
  }

  const auto j = monomial_to_json(standard_generators(ctx).flip);
  CHECK(j["n"] == 6);
  CHECK(j["perm"].size() == 6);
  CHECK(j["phase"].size() == 6);
}

TEST_CASE("monomial json validation") {
  CycCtx ctx3(3);
  CycCtx ctx5(5);
  const auto j = monomial_to_json(standard_generators(ctx3).shift);
  CHECK_THROWS_AS(monomial_from_json(ctx5, j), std::invalid_argument);
  CHECK_THROWS_AS(monomial_from_json(ctx3, json::object()), std::invalid_argument);

  auto broken = j;
  broken["perm"] = json::array({0, 0, 2, 3, 4, 5});
  CHECK_THROWS_AS(monomial_from_json(ctx3, broken), std::invalid_argument);
}

TEST_CASE("group serialization carries generators") {
  CycCtx ctx(3);
  const Generators gen = standard_generators(ctx);
  const Group g = Group::closure({gen.shift, gen.clock, gen.flip});
  const auto j = group_to_json(g);
  CHECK(j["p"] == 3);
  CHECK(j["order"] == 216);
  REQUIRE(j["generators"].size() == 3);

  // closure stores its generators in canonical key order
  int matched = 0;
  for (const auto& gj : j["generators"]) {
    const Monomial m = monomial_from_json(ctx, gj);
    if (m == gen.shift || m == gen.clock || m == gen.flip) ++matched;
  }
  CHECK(matched == 3);
}

TEST_CASE("report serialization is schema valid") {
  const Certification cert = certify(3);
  const auto j = report_to_json(cert.report);

  std::string error;
  CHECK(validate_report_json(j, &error));
  CHECK(error.empty());

  CHECK(j["schema_version"] == 1);
  CHECK(j["p"] == 3);
  CHECK(j["orders"]["G"] == 216);
  CHECK(j["orders"]["ZG"] == 6);
  CHECK(j["orders"]["N"] == 108);
  CHECK(j["orders"]["AB"] == 108);
  CHECK(j["index_G_N"] == 2);
  CHECK(j["norms"]["phi_G"] == 1);
  CHECK(j["norms"]["phi_N"] == 2);
  CHECK(j["norms"]["chi1_N"] == 1);
  CHECK(j["multiplicity_chi1_phiN"] == 1);
  CHECK(j["invariance"]["V1"] == true);
  CHECK(j["invariance"]["V2"] == true);
  CHECK(j["quasikernel_order"] == 6);
  CHECK(j["verdict"] == "non-stabilizer");
  CHECK(j["checks"].size() == 13);
  CHECK(j["oracle"].size() == 16);
  REQUIRE(j["candidates"].size() == 1);
  CHECK(j["candidates"][0]["order"] == 6);
  CHECK(j["candidates"][0]["N_over_H"] == 18);
  CHECK(j["candidates"][0]["chi1_sq"] == 9);
  CHECK(j["candidates"][0]["deg_rho"] == 6);
  CHECK(j["candidates"][0]["stabilizer_match"] == false);
  CHECK(j["candidates"][0]["deg_rho_match"] == false);
}

TEST_CASE("schema validation catches tampering") {
  const Certification cert = certify(3);
  const auto good = report_to_json(cert.report);
  std::string error;

  auto bad = good;
  bad["schema_version"] = 2;
  CHECK_FALSE(validate_report_json(bad, &error));
  CHECK_FALSE(error.empty());

  bad = good;
  bad.erase("norms");
  CHECK_FALSE(validate_report_json(bad));

  bad = good;
  bad["verdict"] = "maybe";
  CHECK_FALSE(validate_report_json(bad));

  bad = good;
  bad["candidates"][0].erase("N_over_H");
  CHECK_FALSE(validate_report_json(bad));

  bad = good;
  bad["checks"][0].erase("detail");
  CHECK_FALSE(validate_report_json(bad));

  bad = good;
  bad["orders"].erase("ZG");
  CHECK_FALSE(validate_report_json(bad));

  CHECK_FALSE(validate_report_json(json::array()));
}

TEST_CASE("reports are reproducible apart from timing") {
  auto first = report_to_json(certify(3).report);
  auto second = report_to_json(certify(3).report);
  first.erase("timing_ms");
  second.erase("timing_ms");
  CHECK(first.dump() == second.dump());
}

TEST_CASE("text report mentions the verdict and the checks") {
  const Certification cert = certify(3);
  const std::string text = report_to_text(cert.report);
  CHECK(text.find("verdict: non-stabilizer") != std::string::npos);
  CHECK(text.find("all checks passed") != std::string::npos);
  CHECK(text.find("L3.1") != std::string::npos);
  CHECK(text.find("O.generator_unitarity") != std::string::npos);
}

TEST_CASE("code data export") {
  Workspace ws(3);
  const auto j = export_code_data(ws);
  const CycCtx& ctx = ws.ctx();

  CHECK(j["schema_version"] == 1);
  CHECK(j["p"] == 3);
  REQUIRE(j["labels"].size() == 6);
  CHECK(j["labels"][3]["qupit"] == 0);
  CHECK(j["labels"][3]["qubit"] == 1);
  CHECK(j["labels"][2]["qupit"] == 2);
  CHECK(j["labels"][2]["qubit"] == 0);

  REQUIRE(j["basis"]["V1"].size() == 3);
  REQUIRE(j["basis"]["V1"][0].size() == 6);
  CHECK(cyc_from_json(ctx, j["basis"]["V1"][0][0]) == Cyc(1));
  CHECK(cyc_from_json(ctx, j["basis"]["V1"][0][3]) ==
        -Cyc::omega_pow(ctx, 3));

  REQUIRE(j["projectors"]["V1"].size() == 6);
  REQUIRE(j["projectors"]["V1"][0].size() == 6);
  const Cyc half = Cyc(Rational(1, 2));
  CHECK(cyc_from_json(ctx, j["projectors"]["V1"][0][0]) == half);
}
