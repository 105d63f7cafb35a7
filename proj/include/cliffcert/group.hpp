#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cliffcert/monomial.hpp"

namespace cliffcert {

struct CapExceededError : std::runtime_error {
  explicit CapExceededError(std::size_t cap)
      : std::runtime_error("group closure exceeded the element cap of " +
                           std::to_string(cap)) {}
};

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

/**
 * A finite group of monomial matrices, stored extensionally.
 *
 * Element order is deterministic: breadth-first discovery from the identity,
 * applying generators sorted by canonical key, new elements obtained by left
 * multiplication.  Lookup is by canonical key.
 */
class Group {
 public:
  static Group closure(std::vector<Monomial> generators,
                       std::size_t cap = kDefaultClosureCap);
  static Group trivial(const CycCtx& ctx);

  // Wraps a set already known to be closed (center, quasikernel filters).
  // Callers that cannot guarantee closure must run verify_closed().
  static Group from_elements(std::vector<Monomial> elements,
                             std::vector<Monomial> generators);

  const CycCtx& context() const { return elements_.front().context(); }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Monomial>& elements() const { return elements_; }
  const std::vector<Monomial>& generators() const { return generators_; }

  bool contains(const Monomial& m) const;
  std::optional<std::size_t> index_of(const Monomial& m) const;
  bool contains_all(const Group& other) const;

  // Exhaustive check that the element set is a subgroup: identity present,
  // closed under products, closed under inverses.  Quadratic; meant for the
  // small groups produced by filtering.
  bool verify_closed() const;

 private:
  Group() = default;
  void index_elements();

  std::vector<Monomial> elements_;
  std::vector<Monomial> generators_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

Group center(const Group& g);
bool is_abelian(const Group& g);

// Both require sub to be contained in g and throw std::invalid_argument
// otherwise.  index_in additionally insists the order divides.
bool is_normal(const Group& sub, const Group& g);
std::size_t index_in(const Group& g, const Group& sub);

// All subgroups H with z <= H <= q, optionally only abelian ones, returned
// in a deterministic order.  Brute force over subsets of coset
// representatives; refuses indexes (q:z) above 16.
std::vector<Group> subgroups_between(const Group& z, const Group& q,
                                     bool abelian_only = false);

/**
 * Normal form of a group element as exponents of the three generator roles:
 *
 *   diagonal      lambda^{scalar} * diag(K^{clock} S^{shift}, K^{-clock} S^{-shift})
 *   antidiagonal  the diagonal form times the flip generator
 *
 * with lambda = w^4, K = i*tau the clock block and S the shift block.
 * scalar and shift live in Z_p, clock in Z_{4p}.
 */
enum class BlockKind { Diagonal, Antidiagonal };

struct SymbolicElement {
  long scalar_exp = 0;  // exponent of lambda, mod p
  long clock_exp = 0;   // exponent of the clock block, mod 4p
  long shift_exp = 0;   // exponent of the shift block, mod p
  BlockKind kind = BlockKind::Diagonal;
};

bool operator==(const SymbolicElement& a, const SymbolicElement& b);
std::ostream& operator<<(std::ostream& os, const SymbolicElement& s);

// Throws std::invalid_argument when m is not of the normal form family.
SymbolicElement parameterize(const Monomial& m);
Monomial decode(const CycCtx& ctx, const SymbolicElement& s);
SymbolicElement symbolic_mul(const CycCtx& ctx, const SymbolicElement& a,
                             const SymbolicElement& b);

}  // namespace cliffcert
