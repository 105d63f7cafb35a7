#include "cliffcert/clifford.hpp"

#include <chrono>
#include <sstream>

#include "cliffcert/oracle.hpp"

namespace cliffcert {

std::optional<Cyc> scalar_action(const Monomial& m,
                                 const std::vector<CycVector>& basis) {
  if (basis.empty()) {
    throw std::invalid_argument("scalar_action needs a nonempty basis");
  }
  const CycVector& v0 = basis.front();
  Eigen::Index lead = -1;
  for (Eigen::Index i = 0; i < v0.size(); ++i) {
    if (!v0(i).is_zero()) {
      lead = i;
      break;
    }
  }
  if (lead < 0) throw std::invalid_argument("scalar_action basis contains zero vector");

  const CycVector w0 = m.apply(v0);
  const Cyc mu = w0(lead) * v0(lead).inverse();
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const CycVector w = k == 0 ? w0 : m.apply(basis[k]);
    for (Eigen::Index i = 0; i < w.size(); ++i) {
      if (w(i) != mu * basis[k](i)) return std::nullopt;
    }
  }
  return mu;
}

Group quasikernel(const Group& g, const std::vector<CycVector>& basis) {
  std::vector<Monomial> members;
  for (const auto& m : g.elements()) {
    if (scalar_action(m, basis)) members.push_back(m);
  }
  Group q = Group::from_elements(members, members);
  if (!q.verify_closed()) {
    throw std::logic_error("quasikernel failed the subgroup check");
  }
  return q;
}

StabilizerVerdict stabilizer_test(const Group& g, const Group& n,
                                  const std::vector<CycVector>& basis,
                                  const Character& chi) {
  if (!is_normal(n, g)) {
    throw std::invalid_argument("stabilizer_test: n is not normal in g");
  }
  const Group z = center(g);
  if (!n.contains_all(z)) {
    throw std::invalid_argument("stabilizer_test: n does not contain the center");
  }
  if (inner_product_int(chi, chi, n) != 1) {
    throw std::invalid_argument("stabilizer_test: chi is not irreducible on n");
  }

  const Group q = quasikernel(g, basis);
  if (!q.contains_all(z)) {
    throw std::logic_error("stabilizer_test: center does not act by scalars");
  }

  StabilizerVerdict verdict;
  verdict.quasikernel_order = q.order();
  verdict.chi_one = chi.value(Monomial::identity(g.context())).as_integer();
  verdict.deg_rho = 2 * g.context().prime();

  for (const Group& h : subgroups_between(z, q, /*abelian_only=*/true)) {
    CandidateComparison cand;
    cand.order = h.order();
    if (n.order() % h.order() != 0) {
      throw std::logic_error("stabilizer_test: candidate order does not divide |n|");
    }
    cand.n_over_h = n.order() / h.order();
    cand.chi_one_sq = static_cast<unsigned long long>(verdict.chi_one) *
                      static_cast<unsigned long long>(verdict.chi_one);
    cand.deg_rho = static_cast<unsigned long long>(verdict.deg_rho);
    cand.stabilizer_match = cand.chi_one_sq == cand.n_over_h;
    cand.deg_rho_match = cand.deg_rho == cand.n_over_h;
    verdict.is_stabilizer = verdict.is_stabilizer || cand.stabilizer_match;
    verdict.aux_is_stabilizer = verdict.aux_is_stabilizer || cand.deg_rho_match;
    verdict.candidates.push_back(cand);
  }
  verdict.criteria_agree = verdict.is_stabilizer == verdict.aux_is_stabilizer;
  return verdict;
}

Workspace::Workspace(long p, std::size_t cap)
    : ctx_(p), gens_(standard_generators(ctx_)), cap_(cap) {}

const Group& Workspace::full_group() {
  if (!full_) full_ = Group::closure({gens_.shift, gens_.clock, gens_.flip}, cap_);
  return *full_;
}

const Group& Workspace::diag_group() {
  if (!diag_) diag_ = Group::closure({gens_.shift, gens_.clock}, cap_);
  return *diag_;
}

const std::vector<Monomial>& Workspace::code_generators() {
  if (!code_gens_) {
    code_gens_ = std::vector<Monomial>{gens_.shift, gens_.clock.powered(4), gens_.flip};
  }
  return *code_gens_;
}

const Group& Workspace::code_group() {
  if (!code_) code_ = Group::closure(code_generators(), cap_);
  return *code_;
}

const Group& Workspace::center_group() {
  if (!center_) center_ = center(full_group());
  return *center_;
}

const std::vector<CycVector>& Workspace::basis(CodeSign sign) {
  auto& slot = sign == CodeSign::Minus ? basis_minus_ : basis_plus_;
  if (!slot) slot = code_basis(ctx_, sign);
  return *slot;
}

const CycMatrix& Workspace::code_projector(CodeSign sign) {
  auto& slot = sign == CodeSign::Minus ? proj_minus_ : proj_plus_;
  if (!slot) slot = projector(basis(sign));
  return *slot;
}

const InvarianceResult& Workspace::invariance(CodeSign sign) {
  auto& slot = sign == CodeSign::Minus ? inv_minus_ : inv_plus_;
  if (!slot) slot = is_invariant(basis(sign), code_generators());
  return *slot;
}

const Character& Workspace::natural_char() {
  if (!phi_) phi_ = natural_character(full_group());
  return *phi_;
}

const Character& Workspace::chi(CodeSign sign) {
  auto& slot = sign == CodeSign::Minus ? chi_minus_ : chi_plus_;
  if (!slot) slot = restricted_character(code_group(), code_projector(sign));
  return *slot;
}

long Workspace::norm_phi_G() {
  if (!norm_phi_G_) {
    norm_phi_G_ = inner_product_int(natural_char(), natural_char(), full_group());
  }
  return *norm_phi_G_;
}

long Workspace::norm_phi_N() {
  if (!norm_phi_N_) {
    norm_phi_N_ = inner_product_int(natural_char(), natural_char(), code_group());
  }
  return *norm_phi_N_;
}

long Workspace::norm_chi(CodeSign sign) {
  auto& slot = sign == CodeSign::Minus ? norm_chi_minus_ : norm_chi_plus_;
  if (!slot) slot = inner_product_int(chi(sign), chi(sign), code_group());
  return *slot;
}

long Workspace::cross_norm_chi() {
  if (!cross_norm_) {
    cross_norm_ = inner_product_int(chi(CodeSign::Minus), chi(CodeSign::Plus),
                                    code_group());
  }
  return *cross_norm_;
}

long Workspace::multiplicity_chi_minus() {
  if (!multiplicity_) {
    multiplicity_ = inner_product_int(chi(CodeSign::Minus), natural_char(),
                                      code_group());
  }
  return *multiplicity_;
}

const Group& Workspace::quasikernel_group() {
  if (!quasi_) quasi_ = quasikernel(full_group(), basis(CodeSign::Minus));
  return *quasi_;
}

const StabilizerVerdict& Workspace::stabilizer(CodeSign sign) {
  auto& slot = sign == CodeSign::Minus ? stab_minus_ : stab_plus_;
  if (!slot) {
    slot = stabilizer_test(full_group(), code_group(), basis(sign), chi(sign));
  }
  return *slot;
}

namespace {

using CheckOutcome = std::pair<bool, std::string>;

std::string num(unsigned long long v) { return std::to_string(v); }

CheckOutcome check_commutation(Workspace& ws) {
  const long p = ws.ctx().prime();
  const Monomial& a = ws.gens().shift;
  const Monomial& b = ws.gens().clock;
  const bool forward = (a.inverse() * b * a) == b.scaled(4);
  const bool backward = (a * b * a.inverse()) == b.scaled(4 * p - 4);
  std::ostringstream os;
  os << "conjugating the clock by the shift scales it by a primitive p-th root: "
     << "shift^-1*clock*shift = w^4*clock ("  << (forward ? "ok" : "FAIL")
     << "), shift*clock*shift^-1 = w^-4*clock (" << (backward ? "ok" : "FAIL") << ")";
  return {forward && backward, os.str()};
}

CheckOutcome check_diag_group(Workspace& ws) {
  const long p = ws.ctx().prime();
  const Group& d = ws.diag_group();
  const unsigned long long expect = 4ull * p * p * p;
  if (d.order() != expect) {
    return {false, "order " + num(d.order()) + ", expected " + num(expect)};
  }
  for (const auto& m : d.elements()) {
    if (parameterize(m).kind != BlockKind::Diagonal) {
      return {false, "element outside the diagonal family found"};
    }
  }
  std::size_t covered = 0;
  for (long a = 0; a < p; ++a) {
    for (long b = 0; b < 4 * p; ++b) {
      for (long c = 0; c < p; ++c) {
        if (!d.contains(decode(ws.ctx(), {a, b, c, BlockKind::Diagonal}))) {
          return {false, "normal form tuple missing from the closure"};
        }
        ++covered;
      }
    }
  }
  return {covered == expect,
          "order " + num(expect) + "; all elements diagonal, all " + num(covered) +
              " exponent triples realized"};
}

CheckOutcome check_full_group(Workspace& ws) {
  const long p = ws.ctx().prime();
  const Group& g = ws.full_group();
  const unsigned long long expect = 8ull * p * p * p;
  if (g.order() != expect) {
    return {false, "order " + num(g.order()) + ", expected " + num(expect)};
  }
  const Monomial minus_one = Monomial::identity(ws.ctx()).scaled(2 * p);
  if (!(ws.gens().flip * ws.gens().flip == minus_one)) {
    return {false, "flip generator does not square to -identity"};
  }
  for (const auto& m : g.elements()) {
    if (!(decode(ws.ctx(), parameterize(m)) == m)) {
      return {false, "normal form round trip failed"};
    }
  }
  std::size_t covered = 0;
  for (int kind = 0; kind < 2; ++kind) {
    for (long a = 0; a < p; ++a) {
      for (long b = 0; b < 4 * p; ++b) {
        for (long c = 0; c < p; ++c) {
          const SymbolicElement s{a, b, c,
                                  kind ? BlockKind::Antidiagonal : BlockKind::Diagonal};
          if (!g.contains(decode(ws.ctx(), s))) {
            return {false, "normal form tuple missing from the closure"};
          }
          ++covered;
        }
      }
    }
  }
  return {covered == expect,
          "order " + num(expect) + "; flip^2 = -1; normal form is a bijection over " +
              num(covered) + " tuples"};
}

CheckOutcome check_phi_norm(Workspace& ws) {
  const long n = ws.norm_phi_G();
  return {n == 1, "(phi, phi) over the full group = " + std::to_string(n) +
                      (n == 1 ? "; the ambient representation is irreducible" : "")};
}

CheckOutcome check_center(Workspace& ws) {
  const long p = ws.ctx().prime();
  const Group& z = ws.center_group();
  if (z.order() != static_cast<std::size_t>(2 * p)) {
    return {false, "center order " + num(z.order()) + ", expected " + num(2 * p)};
  }
  for (long k = 0; k < 2 * p; ++k) {
    if (!z.contains(Monomial::identity(ws.ctx()).scaled(2 * k))) {
      return {false, "scalar w^" + std::to_string(2 * k) + " missing from the center"};
    }
  }
  return {true, "center = the " + num(2 * p) + " scalar matrices w^{2k} I"};
}

CheckOutcome check_degree(Workspace& ws) {
  const long p = ws.ctx().prime();
  const unsigned long long idx = index_in(ws.full_group(), ws.center_group());
  const unsigned long long deg = 2ull * p;
  std::ostringstream os;
  os << "representation degree " << deg << ", center index " << idx
     << ", degree^2 " << deg * deg;
  return {deg * deg == idx, os.str()};
}

CheckOutcome check_code_group(Workspace& ws) {
  const long p = ws.ctx().prime();
  const Group& n = ws.code_group();
  const unsigned long long expect = 4ull * p * p * p;
  if (n.order() != expect) {
    return {false, "order " + num(n.order()) + ", expected " + num(expect)};
  }
  for (const auto& m : n.elements()) {
    if (parameterize(m).clock_exp % 2 != 0) {
      return {false, "element with an odd clock exponent found"};
    }
  }
  std::size_t covered = 0;
  for (int kind = 0; kind < 2; ++kind) {
    for (long a = 0; a < p; ++a) {
      for (long b = 0; b < 4 * p; b += 2) {
        for (long c = 0; c < p; ++c) {
          const SymbolicElement s{a, b, c,
                                  kind ? BlockKind::Antidiagonal : BlockKind::Diagonal};
          if (!n.contains(decode(ws.ctx(), s))) {
            return {false, "even clock tuple missing from the code subgroup"};
          }
          ++covered;
        }
      }
    }
  }
  return {covered == expect,
          "order " + num(expect) + "; exactly the elements with even clock exponent"};
}

CheckOutcome check_normality(Workspace& ws) {
  const bool normal = is_normal(ws.code_group(), ws.full_group());
  const unsigned long long idx = index_in(ws.full_group(), ws.code_group());
  const bool has_center = ws.code_group().contains_all(ws.center_group());
  std::ostringstream os;
  os << "normal: " << (normal ? "yes" : "NO") << ", index " << idx
     << ", contains the center: " << (has_center ? "yes" : "NO");
  return {normal && idx == 2 && has_center, os.str()};
}

CheckOutcome check_invariance(Workspace& ws) {
  const InvarianceResult& minus = ws.invariance(CodeSign::Minus);
  const InvarianceResult& plus = ws.invariance(CodeSign::Plus);
  std::ostringstream os;
  os << "minus space invariant: " << (minus.invariant ? "yes" : "NO")
     << ", plus space invariant: " << (plus.invariant ? "yes" : "NO");
  if (minus.witness) {
    os << "; witness basis index " << minus.witness->basis_index;
  }
  return {minus.invariant && plus.invariant, os.str()};
}

CheckOutcome check_restricted(Workspace& ws) {
  const long p = ws.ctx().prime();
  const long nphi = ws.norm_phi_N();
  const long nm = ws.norm_chi(CodeSign::Minus);
  const long np = ws.norm_chi(CodeSign::Plus);
  const long cross = ws.cross_norm_chi();
  const long chi_one =
      ws.chi(CodeSign::Minus).value(Monomial::identity(ws.ctx())).as_integer();

  bool pointwise = true;
  const Group& n = ws.code_group();
  for (std::size_t i = 0; i < n.order(); ++i) {
    const Cyc sum = ws.chi(CodeSign::Minus).value_at(i) + ws.chi(CodeSign::Plus).value_at(i);
    if (sum != ws.natural_char().value(n.elements()[i])) {
      pointwise = false;
      break;
    }
  }

  std::ostringstream os;
  os << "(phi,phi)_N=" << nphi << " (chi-,chi-)=" << nm << " (chi+,chi+)=" << np
     << " (chi-,chi+)=" << cross << " chi-(1)=" << chi_one
     << " chi- + chi+ = phi on N: " << (pointwise ? "yes" : "NO");
  return {nphi == 2 && nm == 1 && np == 1 && cross == 0 && chi_one == p && pointwise,
          os.str()};
}

CheckOutcome check_clifford_conditions(Workspace& ws) {
  const long p = ws.ctx().prime();
  const bool irreducible = ws.norm_phi_G() == 1;
  const unsigned long long deg = 2ull * p;
  const bool degree_ok = deg * deg == index_in(ws.full_group(), ws.center_group());
  const bool normal = is_normal(ws.code_group(), ws.full_group());
  const bool invariant = ws.invariance(CodeSign::Minus).invariant;
  const bool chi_irred = ws.norm_chi(CodeSign::Minus) == 1;
  const long mult = ws.multiplicity_chi_minus();
  std::ostringstream os;
  os << "ambient irreducible: " << (irreducible ? "yes" : "NO")
     << ", degree matches center index: " << (degree_ok ? "yes" : "NO")
     << ", code subgroup normal: " << (normal ? "yes" : "NO")
     << ", code space invariant: " << (invariant ? "yes" : "NO")
     << ", restricted character irreducible: " << (chi_irred ? "yes" : "NO")
     << ", multiplicity in the restriction: " << mult;
  return {irreducible && degree_ok && normal && invariant && chi_irred && mult == 1,
          os.str()};
}

CheckOutcome check_quasikernel(Workspace& ws) {
  const long p = ws.ctx().prime();
  const Group& q = ws.quasikernel_group();
  const Group& z = ws.center_group();
  const bool match = q.order() == z.order() && q.contains_all(z) && z.contains_all(q);
  std::ostringstream os;
  os << "quasikernel order " << q.order() << ", center order " << z.order()
     << ", elementwise equal: " << (match ? "yes" : "NO");
  return {match && q.order() == static_cast<std::size_t>(2 * p), os.str()};
}

CheckOutcome check_stabilizer(Workspace& ws) {
  const StabilizerVerdict& minus = ws.stabilizer(CodeSign::Minus);
  const StabilizerVerdict& plus = ws.stabilizer(CodeSign::Plus);
  std::ostringstream os;
  os << "candidates: " << minus.candidates.size();
  for (const auto& cand : minus.candidates) {
    os << " [|H|=" << cand.order << " |N|/|H|=" << cand.n_over_h
       << " chi(1)^2=" << cand.chi_one_sq << " deg=" << cand.deg_rho << "]";
  }
  os << "; minus space: " << (minus.is_stabilizer ? "stabilizer" : "non-stabilizer")
     << ", plus space: " << (plus.is_stabilizer ? "stabilizer" : "non-stabilizer");
  if (!minus.criteria_agree || !plus.criteria_agree) {
    os << "; note: the degree criterion disagrees with the primary criterion";
  }
  return {!minus.is_stabilizer && !plus.is_stabilizer &&
              !minus.candidates.empty() && !plus.candidates.empty(),
          os.str()};
}

struct CheckSpec {
  const char* id;
  const char* title;
  CheckOutcome (*fn)(Workspace&);
};

const std::vector<CheckSpec>& registry() {
  static const std::vector<CheckSpec> specs{
      {"L3.1", "generator commutation relation", check_commutation},
      {"L3.2", "diagonal subgroup order and normal form", check_diag_group},
      {"P3.3", "full group order and normal form coverage", check_full_group},
      {"C3.4", "natural character norm", check_phi_norm},
      {"C3.5", "center is the scalar subgroup", check_center},
      {"C3.6", "representation degree matches the center index", check_degree},
      {"P4.1", "code subgroup order and even clock form", check_code_group},
      {"C4.2", "code subgroup is normal of index two", check_normality},
      {"P4.3", "code spaces are invariant under the code subgroup", check_invariance},
      {"P4.4", "restricted character norms and decomposition", check_restricted},
      {"T4.5", "code space satisfies the Clifford code conditions",
       check_clifford_conditions},
      {"P5.1", "quasikernel equals the center", check_quasikernel},
      {"P5.2", "stabilizer comparison rejects both code spaces", check_stabilizer},
  };
  return specs;
}

CheckResult run_one(Workspace& ws, const CheckSpec& spec) {
  try {
    auto [pass, detail] = spec.fn(ws);
    return CheckResult{spec.id, spec.title, pass, std::move(detail)};
  } catch (const std::exception& e) {
    return CheckResult{spec.id, spec.title, false, std::string("error: ") + e.what()};
  }
}

template <typename F, typename T>
T safely(F&& f, T fallback) {
  try {
    return static_cast<T>(f());
  } catch (...) {
    return fallback;
  }
}

}  // namespace

bool CliffordCodeReport::all_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  for (const auto& c : oracle_checks) {
    if (!c.pass) return false;
  }
  return true;
}

const std::vector<std::string>& known_check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& spec : registry()) v.emplace_back(spec.id);
    return v;
  }();
  return ids;
}

Certification certify(long p, const CertifyOptions& options) {
  if (!is_odd_prime(p)) {
    throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
  }
  const unsigned long long expected = 8ull * p * p * p;
  if (expected > options.cap) throw CapExceededError(options.cap);

  const auto t0 = std::chrono::steady_clock::now();
  Certification cert;
  cert.workspace = std::make_shared<Workspace>(p, options.cap);
  Workspace& ws = *cert.workspace;

  CliffordCodeReport& rep = cert.report;
  rep.p = p;
  for (const auto& spec : registry()) rep.checks.push_back(run_one(ws, spec));

  rep.order_G = safely([&] { return ws.full_group().order(); }, 0ull);
  rep.order_ZG = safely([&] { return ws.center_group().order(); }, 0ull);
  rep.order_N = safely([&] { return ws.code_group().order(); }, 0ull);
  rep.order_AB = safely([&] { return ws.diag_group().order(); }, 0ull);
  rep.index_G_N =
      safely([&] { return index_in(ws.full_group(), ws.code_group()); }, 0ull);
  rep.norm_phi_G = safely([&] { return ws.norm_phi_G(); }, 0l);
  rep.norm_phi_N = safely([&] { return ws.norm_phi_N(); }, 0l);
  rep.norm_chi1_N = safely([&] { return ws.norm_chi(CodeSign::Minus); }, 0l);
  rep.multiplicity_chi1_phiN = safely([&] { return ws.multiplicity_chi_minus(); }, 0l);
  rep.invariance_V1 =
      safely([&] { return ws.invariance(CodeSign::Minus).invariant; }, false);
  rep.invariance_V2 =
      safely([&] { return ws.invariance(CodeSign::Plus).invariant; }, false);
  rep.quasikernel_order = safely([&] { return ws.quasikernel_group().order(); }, 0ull);
  rep.stabilizer =
      safely([&] { return ws.stabilizer(CodeSign::Minus); }, StabilizerVerdict{});

  if (options.oracle) {
    for (const auto& check : cross_check(ws)) {
      std::ostringstream os;
      os << "residual " << check.residual << ", tolerance " << check.tol;
      rep.oracle_checks.push_back(
          CheckResult{"O." + check.name, check.name, check.pass, os.str()});
    }
  }

  rep.timing_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  return cert;
}

std::vector<CheckResult> verify_propositions(long p,
                                             const std::vector<std::string>& ids,
                                             const CertifyOptions& options) {
  if (!is_odd_prime(p)) {
    throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
  }
  for (const auto& id : ids) {
    bool known = false;
    for (const auto& spec : registry()) known = known || id == spec.id;
    if (!known) throw std::invalid_argument("unknown check id: " + id);
  }
  Workspace ws(p, options.cap);
  std::vector<CheckResult> results;
  for (const auto& spec : registry()) {
    for (const auto& id : ids) {
      if (id == spec.id) {
        results.push_back(run_one(ws, spec));
        break;
      }
    }
  }
  return results;
}

}  // namespace cliffcert
