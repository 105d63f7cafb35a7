#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cliffcert/cyclotomic.hpp"

namespace cliffcert {

/**
 * A monomial (generalized permutation) matrix of size 2p x 2p whose nonzero
 * entries are powers of w.  Column j carries the single entry
 *
 *     M e_j = w^{phase[j]} e_{perm[j]},
 *
 * with phases kept in [0, 4p).  -1 is the phase exponent 2p.
 */
class Monomial {
 public:
  Monomial(const CycCtx& ctx, std::vector<std::int32_t> perm,
           std::vector<std::int32_t> phase);

  static Monomial identity(const CycCtx& ctx);

  const CycCtx& context() const { return *ctx_; }
  long dim() const { return static_cast<long>(perm_.size()); }
  const std::vector<std::int32_t>& perm() const { return perm_; }
  const std::vector<std::int32_t>& phases() const { return phase_; }

  // Matrix product; (M*N) e_j = M (N e_j).
  friend Monomial operator*(const Monomial& m, const Monomial& n);

  Monomial inverse() const;
  Monomial scaled(long k) const;   // w^k * M
  Monomial powered(long k) const;  // M^k, k >= 0
  long order() const;              // least k >= 1 with M^k = I

  Cyc trace() const;
  CycVector apply(const CycVector& v) const;
  CycMatrix to_dense() const;

  // Injective byte encoding; equal keys iff equal matrices over the same p.
  std::string canonical_key() const;

  friend bool operator==(const Monomial& a, const Monomial& b);
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

 private:
  const CycCtx* ctx_;
  std::vector<std::int32_t> perm_;
  std::vector<std::int32_t> phase_;
};

/**
 * The three generators of the certified matrix group, by their roles:
 *
 *   shift  block diagonal pair of opposite cyclic shifts,
 *   clock  block diagonal pair (i tau, (i tau)^{-1}) with tau the diagonal
 *          of consecutive powers of the primitive p-th root w^4,
 *   flip   antidiagonal involution-like swap with a sign, squaring to -I.
 */
struct Generators {
  Monomial shift;
  Monomial clock;
  Monomial flip;
};

Generators standard_generators(const CycCtx& ctx);

std::ostream& operator<<(std::ostream& os, const Monomial& m);

}  // namespace cliffcert
