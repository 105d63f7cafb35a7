#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cliffcert/repspace.hpp"

namespace cliffcert {

// The scalar by which m acts on the span of basis, when it acts as one.
std::optional<Cyc> scalar_action(const Monomial& m,
                                 const std::vector<CycVector>& basis);

// Subgroup of g acting as scalars on the span of basis.  The result is
// rechecked for closure; a failure there would mean the input was not a
// group or the basis not invariant.
Group quasikernel(const Group& g, const std::vector<CycVector>& basis);

struct CandidateComparison {
  unsigned long long order = 0;
  unsigned long long n_over_h = 0;
  unsigned long long chi_one_sq = 0;
  unsigned long long deg_rho = 0;
  bool stabilizer_match = false;  // chi(1)^2 == |N|/|H|, the primary criterion
  bool deg_rho_match = false;     // deg rho  == |N|/|H|, reported alongside
};

struct StabilizerVerdict {
  unsigned long long quasikernel_order = 0;
  long chi_one = 0;
  long deg_rho = 0;
  std::vector<CandidateComparison> candidates;
  bool is_stabilizer = false;      // by the primary criterion
  bool aux_is_stabilizer = false;  // by the degree criterion
  bool criteria_agree = true;
};

/**
 * Decides whether the code defined by (g, n, basis, chi) is a stabilizer
 * code: some abelian H between center(g) and the quasikernel must satisfy
 * chi(1)^2 = |n|/|H|.  The degree criterion deg rho = |n|/|H| is evaluated
 * for every candidate as well and any disagreement between the two criteria
 * is reported, never resolved silently.
 *
 * Preconditions (violations throw std::invalid_argument): n is normal in g,
 * n contains center(g), and chi is an irreducible character of n.
 */
StabilizerVerdict stabilizer_test(const Group& g, const Group& n,
                                  const std::vector<CycVector>& basis,
                                  const Character& chi);

/**
 * Lazily computed session for one prime: context, generators, the groups
 * they generate, code bases, projectors, characters, quasikernel, and the
 * stabilizer verdicts.  Each piece is built once on first use, so partial
 * verification runs only what the requested checks need.
 */
class Workspace {
 public:
  explicit Workspace(long p, std::size_t cap = kDefaultClosureCap);
  Workspace(const Workspace&) = delete;
  Workspace& operator=(const Workspace&) = delete;

  const CycCtx& ctx() const { return ctx_; }
  const Generators& gens() const { return gens_; }

  const Group& full_group();    // <shift, clock, flip>
  const Group& diag_group();    // <shift, clock>
  const Group& code_group();    // <shift, clock^4, flip>
  const Group& center_group();

  const std::vector<Monomial>& code_generators();

  const std::vector<CycVector>& basis(CodeSign sign);
  const CycMatrix& code_projector(CodeSign sign);
  const InvarianceResult& invariance(CodeSign sign);

  const Character& natural_char();       // on the full group
  const Character& chi(CodeSign sign);   // on the code subgroup

  long norm_phi_G();
  long norm_phi_N();
  long norm_chi(CodeSign sign);
  long cross_norm_chi();                 // (chi_minus, chi_plus) over N
  long multiplicity_chi_minus();         // (chi_minus, phi restricted) over N

  const Group& quasikernel_group();      // against the Minus basis
  const StabilizerVerdict& stabilizer(CodeSign sign);

 private:
  CycCtx ctx_;
  Generators gens_;
  std::size_t cap_;

  std::optional<Group> full_, diag_, code_, center_, quasi_;
  std::optional<std::vector<Monomial>> code_gens_;
  std::optional<std::vector<CycVector>> basis_minus_, basis_plus_;
  std::optional<CycMatrix> proj_minus_, proj_plus_;
  std::optional<InvarianceResult> inv_minus_, inv_plus_;
  std::optional<Character> phi_, chi_minus_, chi_plus_;
  std::optional<long> norm_phi_G_, norm_phi_N_, norm_chi_minus_, norm_chi_plus_,
      cross_norm_, multiplicity_;
  std::optional<StabilizerVerdict> stab_minus_, stab_plus_;
};

struct CheckResult {
  std::string id;
  std::string title;
  bool pass = false;
  std::string detail;
};

struct CertifyOptions {
  std::size_t cap = kDefaultClosureCap;
  bool oracle = true;
};

struct CliffordCodeReport {
  long p = 0;
  unsigned long long order_G = 0, order_ZG = 0, order_N = 0, order_AB = 0;
  unsigned long long index_G_N = 0;
  long norm_phi_G = 0, norm_phi_N = 0, norm_chi1_N = 0;
  long multiplicity_chi1_phiN = 0;
  bool invariance_V1 = false, invariance_V2 = false;
  unsigned long long quasikernel_order = 0;
  StabilizerVerdict stabilizer;
  std::vector<CheckResult> checks;
  std::vector<CheckResult> oracle_checks;
  double timing_ms = 0.0;

  bool all_pass() const;
};

struct Certification {
  CliffordCodeReport report;
  std::shared_ptr<Workspace> workspace;
};

// Identifiers accepted by verify_propositions, in canonical run order.
const std::vector<std::string>& known_check_ids();

// Runs every check (plus numeric cross checks unless disabled) and fills
// the report.  Throws std::invalid_argument for a non-prime p and
// CapExceededError when the group would outgrow options.cap.
Certification certify(long p, const CertifyOptions& options = {});

// Runs the named checks only; prerequisites are pulled in lazily by the
// workspace.  Unknown identifiers throw std::invalid_argument.
std::vector<CheckResult> verify_propositions(long p,
                                             const std::vector<std::string>& ids,
                                             const CertifyOptions& options = {});

}  // namespace cliffcert
