#include "cliffcert/monomial.hpp"

#include <algorithm>
#include <ostream>

namespace cliffcert {

namespace {

long mod(long a, long m) {
  return ((a % m) + m) % m;
}

}  // namespace

Monomial::Monomial(const CycCtx& ctx, std::vector<std::int32_t> perm,
                   std::vector<std::int32_t> phase)
    : ctx_(&ctx), perm_(std::move(perm)), phase_(std::move(phase)) {
  const std::size_t n = static_cast<std::size_t>(2 * ctx.prime());
  if (perm_.size() != n || phase_.size() != n) {
    throw std::invalid_argument("monomial data must have length 2p");
  }
  std::vector<bool> seen(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    if (perm_[j] < 0 || static_cast<std::size_t>(perm_[j]) >= n || seen[perm_[j]]) {
      throw std::invalid_argument("perm is not a permutation of 0..2p-1");
    }
    seen[perm_[j]] = true;
    phase_[j] = static_cast<std::int32_t>(mod(phase_[j], ctx.root_order()));
  }
}

Monomial Monomial::identity(const CycCtx& ctx) {
  const std::size_t n = static_cast<std::size_t>(2 * ctx.prime());
  std::vector<std::int32_t> perm(n), phase(n, 0);
  for (std::size_t j = 0; j < n; ++j) perm[j] = static_cast<std::int32_t>(j);
  return Monomial(ctx, std::move(perm), std::move(phase));
}

Monomial operator*(const Monomial& m, const Monomial& n) {
  if (m.ctx_->prime() != n.ctx_->prime()) {
    throw std::invalid_argument("monomial dimension mismatch");
  }
  const std::size_t sz = m.perm_.size();
  std::vector<std::int32_t> perm(sz), phase(sz);
  const long order = m.ctx_->root_order();
  for (std::size_t j = 0; j < sz; ++j) {
    const std::int32_t k = n.perm_[j];
    perm[j] = m.perm_[k];
    phase[j] = static_cast<std::int32_t>(mod(n.phase_[j] + m.phase_[k], order));
  }
  return Monomial(*m.ctx_, std::move(perm), std::move(phase));
}

Monomial Monomial::inverse() const {
  const std::size_t n = perm_.size();
  std::vector<std::int32_t> perm(n), phase(n);
  for (std::size_t j = 0; j < n; ++j) {
    perm[perm_[j]] = static_cast<std::int32_t>(j);
    phase[perm_[j]] = static_cast<std::int32_t>(mod(-phase_[j], ctx_->root_order()));
  }
  return Monomial(*ctx_, std::move(perm), std::move(phase));
}

Monomial Monomial::scaled(long k) const {
  Monomial r = *this;
  for (auto& ph : r.phase_) {
    ph = static_cast<std::int32_t>(mod(ph + k, ctx_->root_order()));
  }
  return r;
}

Monomial Monomial::powered(long k) const {
  if (k < 0) throw std::invalid_argument("powered expects k >= 0");
  Monomial acc = identity(*ctx_);
  Monomial base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

long Monomial::order() const {
  const Monomial id = identity(*ctx_);
  Monomial acc = *this;
  long k = 1;
  const long bound = 8 * ctx_->prime() * ctx_->prime() * ctx_->prime();
  while (!(acc == id)) {
    acc = acc * *this;
    ++k;
    if (k > bound) throw std::logic_error("element order exceeds group bound");
  }
  return k;
}

Cyc Monomial::trace() const {
  Cyc acc = Cyc::zero(*ctx_);
  for (std::size_t j = 0; j < perm_.size(); ++j) {
    if (perm_[j] == static_cast<std::int32_t>(j)) {
      acc += Cyc::omega_pow(*ctx_, phase_[j]);
    }
  }
  return acc;
}

CycVector Monomial::apply(const CycVector& v) const {
  const auto n = static_cast<Eigen::Index>(perm_.size());
  if (v.size() != n) {
    throw std::invalid_argument("vector length does not match monomial dimension");
  }
  CycVector out(n);
  out.setZero();
  for (Eigen::Index j = 0; j < n; ++j) {
    if (v(j).is_zero()) continue;
    out(perm_[j]) += Cyc::omega_pow(*ctx_, phase_[j]) * v(j);
  }
  return out;
}

CycMatrix Monomial::to_dense() const {
  const auto n = static_cast<Eigen::Index>(perm_.size());
  CycMatrix m(n, n);
  m.setZero();
  for (Eigen::Index j = 0; j < n; ++j) {
    m(perm_[j], j) = Cyc::omega_pow(*ctx_, phase_[j]);
  }
  return m;
}

std::string Monomial::canonical_key() const {
  std::string key;
  key.reserve(perm_.size() * 8);
  auto push32 = [&key](std::uint32_t v) {
    key.push_back(static_cast<char>(v & 0xff));
    key.push_back(static_cast<char>((v >> 8) & 0xff));
    key.push_back(static_cast<char>((v >> 16) & 0xff));
    key.push_back(static_cast<char>((v >> 24) & 0xff));
  };
  for (std::size_t j = 0; j < perm_.size(); ++j) {
    push32(static_cast<std::uint32_t>(perm_[j]));
    push32(static_cast<std::uint32_t>(phase_[j]));
  }
  return key;
}

bool operator==(const Monomial& a, const Monomial& b) {
  return a.ctx_->prime() == b.ctx_->prime() && a.perm_ == b.perm_ &&
         a.phase_ == b.phase_;
}

Generators standard_generators(const CycCtx& ctx) {
  const long p = ctx.prime();
  const std::size_t n = static_cast<std::size_t>(2 * p);

  std::vector<std::int32_t> perm(n), phase(n, 0);
  // shift: e_j -> e_{j+1 mod p} on the first block, the opposite shift on
  // the second block.
  for (long j = 0; j < p; ++j) {
    perm[j] = static_cast<std::int32_t>(mod(j + 1, p));
    perm[p + j] = static_cast<std::int32_t>(p + mod(j - 1, p));
  }
  Monomial shift(ctx, perm, phase);

  // clock: e_j -> w^{p + 4j} e_j, with inverse phases on the second block.
  for (long j = 0; j < p; ++j) {
    perm[j] = static_cast<std::int32_t>(j);
    perm[p + j] = static_cast<std::int32_t>(p + j);
    phase[j] = static_cast<std::int32_t>(mod(p + 4 * j, 4 * p));
    phase[p + j] = static_cast<std::int32_t>(mod(-(p + 4 * j), 4 * p));
  }
  Monomial clock(ctx, perm, phase);

  // flip: e_j -> -e_{p+j}, e_{p+j} -> e_j; squares to -I.
  for (long j = 0; j < p; ++j) {
    perm[j] = static_cast<std::int32_t>(p + j);
    perm[p + j] = static_cast<std::int32_t>(j);
    phase[j] = static_cast<std::int32_t>(2 * p);
    phase[p + j] = 0;
  }
  Monomial flip(ctx, perm, phase);

  return Generators{std::move(shift), std::move(clock), std::move(flip)};
}

std::ostream& operator<<(std::ostream& os, const Monomial& m) {
  os << "monomial[";
  for (std::size_t j = 0; j < m.perm().size(); ++j) {
    if (j) os << ", ";
    os << j << "->" << m.perm()[j] << ":" << m.phases()[j];
  }
  return os << "]";
}

}  // namespace cliffcert
