#include "cliffcert/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <ostream>
#include <set>

namespace cliffcert {

namespace {

long mod(long a, long m) {
  return ((a % m) + m) % m;
}

}  // namespace

void Group::index_elements() {
  index_.clear();
  index_.reserve(elements_.size() * 2);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    index_.emplace(elements_[i].canonical_key(), static_cast<std::uint32_t>(i));
  }
  if (index_.size() != elements_.size()) {
    throw std::logic_error("duplicate elements in group construction");
  }
}

Group Group::closure(std::vector<Monomial> generators, std::size_t cap) {
  if (generators.empty()) {
    throw std::invalid_argument("closure requires at least one generator");
  }
  const CycCtx& ctx = generators.front().context();
  for (const auto& g : generators) {
    if (g.context().prime() != ctx.prime()) {
      throw std::invalid_argument("generators live in different contexts");
    }
  }
  std::sort(generators.begin(), generators.end(),
            [](const Monomial& a, const Monomial& b) {
              return a.canonical_key() < b.canonical_key();
            });
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());

  Group g;
  g.generators_ = generators;
  g.elements_.push_back(Monomial::identity(ctx));
  g.index_.emplace(g.elements_.front().canonical_key(), 0);

  std::deque<std::size_t> worklist{0};
  while (!worklist.empty()) {
    const std::size_t at = worklist.front();
    worklist.pop_front();
    for (const auto& gen : generators) {
      Monomial next = gen * g.elements_[at];
      std::string key = next.canonical_key();
      if (g.index_.contains(key)) continue;
      if (g.elements_.size() >= cap) throw CapExceededError(cap);
      g.index_.emplace(std::move(key), static_cast<std::uint32_t>(g.elements_.size()));
      g.elements_.push_back(std::move(next));
      worklist.push_back(g.elements_.size() - 1);
    }
  }
  return g;
}

Group Group::trivial(const CycCtx& ctx) {
  return from_elements({Monomial::identity(ctx)}, {Monomial::identity(ctx)});
}

Group Group::from_elements(std::vector<Monomial> elements,
                           std::vector<Monomial> generators) {
  if (elements.empty()) {
    throw std::invalid_argument("a group needs at least the identity");
  }
  Group g;
  g.elements_ = std::move(elements);
  g.generators_ = std::move(generators);
  g.index_elements();
  return g;
}

bool Group::contains(const Monomial& m) const {
  return index_.contains(m.canonical_key());
}

std::optional<std::size_t> Group::index_of(const Monomial& m) const {
  auto it = index_.find(m.canonical_key());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Group::contains_all(const Group& other) const {
  for (const auto& m : other.elements()) {
    if (!contains(m)) return false;
  }
  return true;
}

bool Group::verify_closed() const {
  if (!contains(Monomial::identity(context()))) return false;
  for (const auto& a : elements_) {
    if (!contains(a.inverse())) return false;
    for (const auto& b : elements_) {
      if (!contains(a * b)) return false;
    }
  }
  return true;
}

Group center(const Group& g) {
  std::vector<Monomial> central;
  for (const auto& x : g.elements()) {
    bool commutes = true;
    for (const auto& gen : g.generators()) {
      if (!(x * gen == gen * x)) {
        commutes = false;
        break;
      }
    }
    if (commutes) central.push_back(x);
  }
  return Group::from_elements(central, central);
}

bool is_abelian(const Group& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!(gens[i] * gens[j] == gens[j] * gens[i])) return false;
    }
  }
  return true;
}

namespace {

void require_subgroup(const Group& sub, const Group& g, const char* what) {
  if (!g.contains_all(sub)) {
    throw std::invalid_argument(std::string(what) +
                                ": first argument is not contained in the group");
  }
}

}  // namespace

bool is_normal(const Group& sub, const Group& g) {
  require_subgroup(sub, g, "is_normal");
  // Conjugating the generators of sub by the generators of g is enough:
  // conjugation by a fixed element is an automorphism, and in a finite group
  // g S g^{-1} <= S already forces equality.
  for (const auto& gen : g.generators()) {
    const Monomial inv = gen.inverse();
    for (const auto& s : sub.generators()) {
      if (!sub.contains(gen * s * inv)) return false;
    }
  }
  return true;
}

std::size_t index_in(const Group& g, const Group& sub) {
  require_subgroup(sub, g, "index_in");
  if (g.order() % sub.order() != 0) {
    throw std::logic_error("subgroup order does not divide the group order");
  }
  return g.order() / sub.order();
}

std::vector<Group> subgroups_between(const Group& z, const Group& q,
                                     bool abelian_only) {
  require_subgroup(z, q, "subgroups_between");
  // Coset representatives of z in q, in element order, identity coset first.
  std::vector<Monomial> reps;
  std::set<std::string> covered;
  for (const auto& x : q.elements()) {
    if (covered.contains(x.canonical_key())) continue;
    reps.push_back(x);
    for (const auto& s : z.elements()) {
      covered.insert((x * s).canonical_key());
    }
  }
  // reps[0] is the identity coset; only proper extensions vary.
  if (reps.size() > 16) {
    throw std::invalid_argument("subgroups_between: index (q:z) is too large (" +
                                std::to_string(reps.size()) + " cosets)");
  }

  std::map<std::vector<std::string>, Group> found;
  const std::size_t extra = reps.size() - 1;
  for (std::size_t mask = 0; mask < (std::size_t{1} << extra); ++mask) {
    std::vector<Monomial> gens = z.elements();
    for (std::size_t bit = 0; bit < extra; ++bit) {
      if (mask & (std::size_t{1} << bit)) gens.push_back(reps[bit + 1]);
    }
    Group h = Group::closure(gens, q.order() + 1);
    if (!q.contains_all(h)) continue;  // cannot happen for genuine subgroup input
    if (abelian_only && !is_abelian(h)) continue;
    std::vector<std::string> signature;
    signature.reserve(h.order());
    for (const auto& m : h.elements()) signature.push_back(m.canonical_key());
    std::sort(signature.begin(), signature.end());
    found.emplace(std::move(signature), std::move(h));
  }

  std::vector<Group> out;
  out.reserve(found.size());
  for (auto& [sig, grp] : found) out.push_back(std::move(grp));
  std::stable_sort(out.begin(), out.end(), [](const Group& a, const Group& b) {
    return a.order() < b.order();
  });
  return out;
}

bool operator==(const SymbolicElement& a, const SymbolicElement& b) {
  return a.scalar_exp == b.scalar_exp && a.clock_exp == b.clock_exp &&
         a.shift_exp == b.shift_exp && a.kind == b.kind;
}

std::ostream& operator<<(std::ostream& os, const SymbolicElement& s) {
  return os << "(scalar=" << s.scalar_exp << ", clock=" << s.clock_exp
            << ", shift=" << s.shift_exp << ", "
            << (s.kind == BlockKind::Diagonal ? "diagonal" : "antidiagonal") << ")";
}

Monomial decode(const CycCtx& ctx, const SymbolicElement& s) {
  const long p = ctx.prime();
  const long a = mod(s.scalar_exp, p);
  const long b = mod(s.clock_exp, 4 * p);
  const long c = mod(s.shift_exp, p);
  const std::size_t n = static_cast<std::size_t>(2 * p);
  std::vector<std::int32_t> perm(n), phase(n);
  for (long j = 0; j < p; ++j) {
    const long up = mod(j + c, p);    // image under the shift block
    const long dn = mod(j - c, p);    // image under its inverse
    const long up_phase = mod(4 * a + p * b + 4 * b * up, 4 * p);
    const long dn_phase = mod(4 * a - p * b - 4 * b * dn, 4 * p);
    if (s.kind == BlockKind::Diagonal) {
      perm[j] = static_cast<std::int32_t>(up);
      phase[j] = static_cast<std::int32_t>(up_phase);
      perm[p + j] = static_cast<std::int32_t>(p + dn);
      phase[p + j] = static_cast<std::int32_t>(dn_phase);
    } else {
      perm[j] = static_cast<std::int32_t>(p + dn);
      phase[j] = static_cast<std::int32_t>(mod(dn_phase + 2 * p, 4 * p));
      perm[p + j] = static_cast<std::int32_t>(up);
      phase[p + j] = static_cast<std::int32_t>(up_phase);
    }
  }
  return Monomial(ctx, std::move(perm), std::move(phase));
}

SymbolicElement parameterize(const Monomial& m) {
  const CycCtx& ctx = m.context();
  const long p = ctx.prime();
  const auto fail = [&]() -> SymbolicElement {
    throw std::invalid_argument("monomial is not in the generated family");
  };

  const bool anti = m.perm()[0] >= p;
  const Monomial diag_part =
      anti ? m * standard_generators(ctx).flip.inverse() : m;

  const auto& perm = diag_part.perm();
  const auto& phase = diag_part.phases();
  if (perm[0] >= p) return fail();
  const long c = perm[0];

  // First block phases follow 4a + pb + 4b*((j+c) mod p); solve for a and b
  // from the columns landing on rows 0 and 1 and the second block's row 0.
  const long j_row0 = mod(-c, p);
  const long j_row1 = mod(1 - c, p);
  const long base_up = phase[j_row0];
  const long base_dn = phase[p + c];

  const long d = mod(phase[j_row1] - base_up, 4 * p);
  if (d % 4 != 0) return fail();
  const long b_mod_p = (d / 4) % p;

  const long s = mod(base_up + base_dn, 4 * p);
  if (s % 4 != 0) return fail();
  const long inv2 = (p + 1) / 2;  // inverse of 2 mod p
  const long a = mod((s / 4) * inv2, p);

  const long t = mod(base_up - 4 * a, 4 * p);
  if (t % p != 0) return fail();
  const long b_mod_4 = mod(t / p, 4);
  const long k = mod((b_mod_4 - b_mod_p) * (p % 4), 4);
  const long b = mod(b_mod_p + p * k, 4 * p);

  SymbolicElement result{a, b, c, anti ? BlockKind::Antidiagonal : BlockKind::Diagonal};
  if (!(decode(ctx, result) == m)) return fail();
  return result;
}

SymbolicElement symbolic_mul(const CycCtx& ctx, const SymbolicElement& x,
                             const SymbolicElement& y) {
  const long p = ctx.prime();
  // Moving the right factor's clock block through the left factor's shift
  // block costs lambda^{-clock_y * shift_x}; the flip conjugates a diagonal
  // form to the one with negated exponents, and flip^2 = -1 = clock^{2p}.
  SymbolicElement r;
  if (x.kind == BlockKind::Diagonal) {
    r.scalar_exp = mod(x.scalar_exp + y.scalar_exp - y.clock_exp * x.shift_exp, p);
    r.clock_exp = mod(x.clock_exp + y.clock_exp, 4 * p);
    r.shift_exp = mod(x.shift_exp + y.shift_exp, p);
    r.kind = y.kind;
  } else {
    r.scalar_exp = mod(x.scalar_exp + y.scalar_exp + y.clock_exp * x.shift_exp, p);
    r.clock_exp = mod(x.clock_exp - y.clock_exp, 4 * p);
    r.shift_exp = mod(x.shift_exp - y.shift_exp, p);
    if (y.kind == BlockKind::Antidiagonal) {
      r.clock_exp = mod(r.clock_exp + 2 * p, 4 * p);
      r.kind = BlockKind::Diagonal;
    } else {
      r.kind = BlockKind::Antidiagonal;
    }
  }
  return r;
}

}  // namespace cliffcert
