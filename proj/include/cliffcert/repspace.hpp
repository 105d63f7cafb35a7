#pragma once

#include <optional>
#include <vector>

#include "cliffcert/group.hpp"

namespace cliffcert {

/**
 * The two candidate code spaces.  For x in Z_p the basis vector of the Minus
 * space has a +1 at index x and a -i at index p + (-x mod p); the Plus space
 * carries +i instead.  The spaces are orthogonal complements of each other
 * and each basis is pairwise orthogonal with squared length 2.
 */
enum class CodeSign { Minus, Plus };

std::vector<CycVector> code_basis(const CycCtx& ctx, CodeSign sign);

// Orthogonal projector sum_k v_k v_k^dagger / (v_k^dagger v_k).  Requires a
// pairwise orthogonal basis of nonzero vectors.
CycMatrix projector(const std::vector<CycVector>& basis);

// Exact Gaussian elimination; pivots are the first nonzero entries in
// column order, which is deterministic and needs no stability analysis.
// Returns the coefficient vector when v lies in the span.
std::optional<CycVector> span_membership(const CycVector& v,
                                         const std::vector<CycVector>& basis);

struct InvarianceWitness {
  Monomial element;
  std::size_t basis_index;
  CycVector image;
};

struct InvarianceResult {
  bool invariant = false;
  std::optional<InvarianceWitness> witness;
};

InvarianceResult is_invariant(const std::vector<CycVector>& basis,
                              const std::vector<Monomial>& elements);

// tr(m * p) using the single nonzero entry per column of m.
Cyc trace_product(const Monomial& m, const CycMatrix& p);

/**
 * A character (or any element-indexed class function) of a finite monomial
 * group, stored densely over the domain's element order.  The domain group
 * must outlive the character.
 */
class Character {
 public:
  Character(const Group* domain, std::vector<Cyc> values);

  const Group& domain() const { return *domain_; }
  const Cyc& value_at(std::size_t index) const { return values_[index]; }

  // Throws std::invalid_argument when the element is outside the domain.
  const Cyc& value(const Monomial& m) const;

 private:
  const Group* domain_;
  std::vector<Cyc> values_;
};

Character natural_character(const Group& g);
Character restricted_character(const Group& s, const CycMatrix& projector);

// (1/|over|) sum_{g in over} chi(g) * conj(psi(g)).  Both characters must be
// defined on every element of over.  For genuine characters the result is a
// nonnegative rational integer; anything else throws std::logic_error.
Cyc inner_product(const Character& chi, const Character& psi, const Group& over);
long inner_product_int(const Character& chi, const Character& psi, const Group& over);

}  // namespace cliffcert
