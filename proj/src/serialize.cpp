#include "cliffcert/serialize.hpp"

#include <sstream>

namespace cliffcert {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json vector_to_json(const CycCtx& ctx, const CycVector& v) {
  ordered_json arr = ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(cyc_to_json(ctx, v(i)));
  return arr;
}

ordered_json matrix_to_json(const CycCtx& ctx, const CycMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(cyc_to_json(ctx, m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json checks_to_json(const std::vector<CheckResult>& checks) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : checks) {
    ordered_json item;
    item["id"] = c.id;
    item["title"] = c.title;
    item["pass"] = c.pass;
    item["detail"] = c.detail;
    arr.push_back(std::move(item));
  }
  return arr;
}

bool expect(bool cond, const char* what, std::string* error) {
  if (!cond && error) *error = what;
  return cond;
}

bool is_uint_field(const json& j, const char* key) {
  return j.contains(key) && j[key].is_number_unsigned();
}

bool is_int_field(const json& j, const char* key) {
  return j.contains(key) && j[key].is_number_integer();
}

bool is_bool_field(const json& j, const char* key) {
  return j.contains(key) && j[key].is_boolean();
}

bool valid_check_array(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) return false;
  for (const auto& item : j[key]) {
    if (!item.is_object() || !item.contains("id") || !item["id"].is_string() ||
        !item.contains("title") || !item["title"].is_string() ||
        !is_bool_field(item, "pass") || !item.contains("detail") ||
        !item["detail"].is_string()) {
      return false;
    }
  }
  return true;
}

}  // namespace

ordered_json cyc_to_json(const CycCtx& ctx, const Cyc& z) {
  ordered_json arr = ordered_json::array();
  for (const auto& coeff : z.coeffs(ctx)) arr.push_back(rational_to_string(coeff));
  return arr;
}

Cyc cyc_from_json(const CycCtx& ctx, const json& j) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(ctx.degree())) {
    throw std::invalid_argument("cyclotomic value needs one coefficient per degree");
  }
  std::vector<Rational> coeffs;
  coeffs.reserve(j.size());
  for (const auto& item : j) {
    if (!item.is_string()) {
      throw std::invalid_argument("cyclotomic coefficients must be strings");
    }
    coeffs.push_back(rational_from_string(item.get<std::string>()));
  }
  return Cyc::from_coeffs(ctx, coeffs);
}

ordered_json monomial_to_json(const Monomial& m) {
  ordered_json j;
  j["n"] = m.dim();
  j["perm"] = m.perm();
  j["phase"] = m.phases();
  return j;
}

Monomial monomial_from_json(const CycCtx& ctx, const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("perm") ||
      !j.contains("phase")) {
    throw std::invalid_argument("monomial needs fields n, perm, phase");
  }
  if (j["n"].get<long>() != 2 * ctx.prime()) {
    throw std::invalid_argument("monomial dimension does not match the context");
  }
  return Monomial(ctx, j["perm"].get<std::vector<std::int32_t>>(),
                  j["phase"].get<std::vector<std::int32_t>>());
}

ordered_json group_to_json(const Group& g) {
  ordered_json j;
  j["p"] = g.context().prime();
  j["order"] = g.order();
  ordered_json gens = ordered_json::array();
  for (const auto& m : g.generators()) gens.push_back(monomial_to_json(m));
  j["generators"] = std::move(gens);
  return j;
}

ordered_json report_to_json(const CliffordCodeReport& report) {
  ordered_json j;
  j["schema_version"] = 1;
  j["p"] = report.p;
  {
    ordered_json orders;
    orders["G"] = report.order_G;
    orders["ZG"] = report.order_ZG;
    orders["N"] = report.order_N;
    orders["AB"] = report.order_AB;
    j["orders"] = std::move(orders);
  }
  j["index_G_N"] = report.index_G_N;
  {
    ordered_json norms;
    norms["phi_G"] = report.norm_phi_G;
    norms["phi_N"] = report.norm_phi_N;
    norms["chi1_N"] = report.norm_chi1_N;
    j["norms"] = std::move(norms);
  }
  j["multiplicity_chi1_phiN"] = report.multiplicity_chi1_phiN;
  {
    ordered_json inv;
    inv["V1"] = report.invariance_V1;
    inv["V2"] = report.invariance_V2;
    j["invariance"] = std::move(inv);
  }
  j["quasikernel_order"] = report.quasikernel_order;
  {
    ordered_json cands = ordered_json::array();
    for (const auto& c : report.stabilizer.candidates) {
      ordered_json item;
      item["order"] = c.order;
      item["N_over_H"] = c.n_over_h;
      item["chi1_sq"] = c.chi_one_sq;
      item["deg_rho"] = c.deg_rho;
      item["stabilizer_match"] = c.stabilizer_match;
      item["deg_rho_match"] = c.deg_rho_match;
      cands.push_back(std::move(item));
    }
    j["candidates"] = std::move(cands);
  }
  j["verdict"] = report.stabilizer.is_stabilizer ? "stabilizer" : "non-stabilizer";
  j["checks"] = checks_to_json(report.checks);
  j["oracle"] = checks_to_json(report.oracle_checks);
  j["timing_ms"] = report.timing_ms;
  return j;
}

bool validate_report_json(const json& j, std::string* error) {
  if (!expect(j.is_object(), "report must be an object", error)) return false;
  if (!expect(j.contains("schema_version") && j["schema_version"] == 1,
              "schema_version must be 1", error)) {
    return false;
  }
  if (!expect(is_int_field(j, "p"), "p must be an integer", error)) return false;
  if (!expect(j.contains("orders") && j["orders"].is_object(),
              "orders must be an object", error)) {
    return false;
  }
  for (const char* key : {"G", "ZG", "N", "AB"}) {
    if (!expect(is_uint_field(j["orders"], key), "orders needs fields G, ZG, N, AB",
                error)) {
      return false;
    }
  }
  if (!expect(is_uint_field(j, "index_G_N"), "index_G_N must be unsigned", error)) {
    return false;
  }
  if (!expect(j.contains("norms") && j["norms"].is_object(), "norms must be an object",
              error)) {
    return false;
  }
  for (const char* key : {"phi_G", "phi_N", "chi1_N"}) {
    if (!expect(is_int_field(j["norms"], key), "norms needs phi_G, phi_N, chi1_N",
                error)) {
      return false;
    }
  }
  if (!expect(is_int_field(j, "multiplicity_chi1_phiN"),
              "multiplicity_chi1_phiN must be an integer", error)) {
    return false;
  }
  if (!expect(j.contains("invariance") && is_bool_field(j["invariance"], "V1") &&
                  is_bool_field(j["invariance"], "V2"),
              "invariance needs booleans V1, V2", error)) {
    return false;
  }
  if (!expect(is_uint_field(j, "quasikernel_order"),
              "quasikernel_order must be unsigned", error)) {
    return false;
  }
  if (!expect(j.contains("candidates") && j["candidates"].is_array(),
              "candidates must be an array", error)) {
    return false;
  }
  for (const auto& c : j["candidates"]) {
    const bool ok = c.is_object() && is_uint_field(c, "order") &&
                    is_uint_field(c, "N_over_H") && is_uint_field(c, "chi1_sq") &&
                    is_uint_field(c, "deg_rho") && is_bool_field(c, "stabilizer_match") &&
                    is_bool_field(c, "deg_rho_match");
    if (!expect(ok, "candidate entry malformed", error)) return false;
  }
  if (!expect(j.contains("verdict") &&
                  (j["verdict"] == "stabilizer" || j["verdict"] == "non-stabilizer"),
              "verdict must be stabilizer or non-stabilizer", error)) {
    return false;
  }
  if (!expect(valid_check_array(j, "checks"), "checks array malformed", error)) {
    return false;
  }
  if (!expect(valid_check_array(j, "oracle"), "oracle array malformed", error)) {
    return false;
  }
  if (!expect(j.contains("timing_ms") && j["timing_ms"].is_number(),
              "timing_ms must be a number", error)) {
    return false;
  }
  return true;
}

std::string report_to_text(const CliffordCodeReport& report) {
  std::ostringstream os;
  os << "certification report for p = " << report.p << "\n";
  os << "  orders: |G| = " << report.order_G << ", |Z(G)| = " << report.order_ZG
     << ", |N| = " << report.order_N << ", |<A,B>| = " << report.order_AB
     << ", (G:N) = " << report.index_G_N << "\n";
  os << "  norms: (phi,phi)_G = " << report.norm_phi_G
     << ", (phi,phi)_N = " << report.norm_phi_N
     << ", (chi1,chi1)_N = " << report.norm_chi1_N
     << ", mult(chi1, phi|N) = " << report.multiplicity_chi1_phiN << "\n";
  os << "  invariance: V1 " << (report.invariance_V1 ? "yes" : "NO") << ", V2 "
     << (report.invariance_V2 ? "yes" : "NO") << "\n";
  os << "  quasikernel order: " << report.quasikernel_order << "\n";
  os << "  stabilizer comparison: chi(1) = " << report.stabilizer.chi_one
     << ", deg rho = " << report.stabilizer.deg_rho << "\n";
  for (const auto& c : report.stabilizer.candidates) {
    os << "    H of order " << c.order << ": |N|/|H| = " << c.n_over_h
       << ", chi(1)^2 = " << c.chi_one_sq
       << (c.stabilizer_match ? " (match)" : " (no match)") << ", deg = " << c.deg_rho
       << (c.deg_rho_match ? " (match)" : " (no match)") << "\n";
  }
  os << "  verdict: "
     << (report.stabilizer.is_stabilizer ? "stabilizer" : "non-stabilizer") << "\n";
  os << "  checks:\n";
  for (const auto& c : report.checks) {
    os << "    [" << (c.pass ? "PASS" : "FAIL") << "] " << c.id << " " << c.title
       << ": " << c.detail << "\n";
  }
  if (!report.oracle_checks.empty()) {
    os << "  oracle:\n";
    for (const auto& c : report.oracle_checks) {
      os << "    [" << (c.pass ? "PASS" : "FAIL") << "] " << c.id << ": " << c.detail
         << "\n";
    }
  }
  std::size_t failed = 0;
  for (const auto& c : report.checks) failed += c.pass ? 0 : 1;
  for (const auto& c : report.oracle_checks) failed += c.pass ? 0 : 1;
  if (failed == 0) {
    os << "  all checks passed\n";
  } else {
    os << "  " << failed << " check(s) FAILED\n";
  }
  os << "  time: " << report.timing_ms << " ms\n";
  return os.str();
}

ordered_json export_code_data(Workspace& ws) {
  const CycCtx& ctx = ws.ctx();
  const long p = ctx.prime();
  ordered_json j;
  j["schema_version"] = 1;
  j["p"] = p;
  {
    // Basis index m + p*s carries qupit digit m and qubit digit s.
    ordered_json labels = ordered_json::array();
    for (long idx = 0; idx < 2 * p; ++idx) {
      ordered_json item;
      item["index"] = idx;
      item["qupit"] = idx % p;
      item["qubit"] = idx / p;
      labels.push_back(std::move(item));
    }
    j["labels"] = std::move(labels);
  }
  {
    ordered_json basis;
    ordered_json v1 = ordered_json::array();
    for (const auto& v : ws.basis(CodeSign::Minus)) v1.push_back(vector_to_json(ctx, v));
    ordered_json v2 = ordered_json::array();
    for (const auto& v : ws.basis(CodeSign::Plus)) v2.push_back(vector_to_json(ctx, v));
    basis["V1"] = std::move(v1);
    basis["V2"] = std::move(v2);
    j["basis"] = std::move(basis);
  }
  {
    ordered_json projectors;
    projectors["V1"] = matrix_to_json(ctx, ws.code_projector(CodeSign::Minus));
    projectors["V2"] = matrix_to_json(ctx, ws.code_projector(CodeSign::Plus));
    j["projectors"] = std::move(projectors);
  }
  return j;
}

}  // namespace cliffcert
