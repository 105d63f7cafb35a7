#include "cliffcert/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace cliffcert {

bool is_odd_prime(long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (long d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

CycCtx::CycCtx(long p) : p_(p) {
  if (!is_odd_prime(p)) {
    throw std::invalid_argument("cyclotomic context requires an odd prime, got " +
                                std::to_string(p));
  }
  // Phi(x) = sum_{k=0}^{p-1} (-1)^k x^{2k}
  modulus_.assign(static_cast<std::size_t>(degree()) + 1, Rational(0));
  long sign = 1;
  for (long k = 0; k < p_; ++k) {
    modulus_[static_cast<std::size_t>(2 * k)] = Rational(sign);
    sign = -sign;
  }
}

namespace {

// Folds a coefficient buffer of length 2p (degrees 0..2p-1) into the
// canonical basis of length 2p-2, using
//   x^{2p-2} = -(1 - x^2 + ... + (-1)^{p-2} x^{2(p-2)})  (mod Phi).
void reduce_top(const CycCtx& ctx, std::vector<Rational>& c) {
  const long p = ctx.prime();
  const long deg = ctx.degree();
  for (long e = 2 * p - 1; e >= deg; --e) {
    Rational t = c[static_cast<std::size_t>(e)];
    if (t == 0) continue;
    c[static_cast<std::size_t>(e)] = 0;
    const long off = e - deg;
    long sign = 1;
    for (long k = 0; k <= p - 2; ++k) {
      auto& slot = c[static_cast<std::size_t>(2 * k + off)];
      if (sign > 0) {
        slot -= t;
      } else {
        slot += t;
      }
      sign = -sign;
    }
  }
  c.resize(static_cast<std::size_t>(deg));
}

const CycCtx* common_context(const Cyc& a, const Cyc& b) {
  const CycCtx* ca = a.context();
  const CycCtx* cb = b.context();
  if (ca && cb && ca->prime() != cb->prime()) {
    throw std::invalid_argument("cyclotomic context mismatch: p=" +
                                std::to_string(ca->prime()) + " vs p=" +
                                std::to_string(cb->prime()));
  }
  return ca ? ca : cb;
}

using Poly = std::vector<Rational>;  // dense, lowest degree first

void poly_trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// f -= q * g for a monomial q = c x^k, used by poly_divmod.
void poly_submul(Poly& f, const Rational& c, std::size_t k, const Poly& g) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    f[i + k] -= c * g[i];
  }
}

// Remainder and quotient of f by g, g nonzero.
void poly_divmod(Poly f, const Poly& g, Poly& quot, Poly& rem) {
  quot.assign(f.size() > g.size() ? f.size() - g.size() + 1 : 1, Rational(0));
  while (f.size() >= g.size() && !f.empty()) {
    poly_trim(f);
    if (f.size() < g.size()) break;
    Rational c = f.back() / g.back();
    std::size_t k = f.size() - g.size();
    quot[k] = c;
    poly_submul(f, c, k, g);
    f.pop_back();
  }
  poly_trim(f);
  rem = std::move(f);
  poly_trim(quot);
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  poly_trim(r);
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

}  // namespace

Cyc Cyc::zero(const CycCtx& ctx) {
  return rational(ctx, Rational(0));
}

Cyc Cyc::one(const CycCtx& ctx) {
  return rational(ctx, Rational(1));
}

Cyc Cyc::rational(const CycCtx& ctx, const Rational& v) {
  std::vector<Rational> c(static_cast<std::size_t>(ctx.degree()), Rational(0));
  c[0] = v;
  return from_coeffs(ctx, std::move(c));
}

Cyc Cyc::omega_pow(const CycCtx& ctx, long k) {
  const long m = ctx.root_order();
  long e = ((k % m) + m) % m;
  bool negate = false;
  if (e >= 2 * ctx.prime()) {
    e -= 2 * ctx.prime();
    negate = true;
  }
  std::vector<Rational> c(static_cast<std::size_t>(2 * ctx.prime()), Rational(0));
  c[static_cast<std::size_t>(e)] = negate ? Rational(-1) : Rational(1);
  reduce_top(ctx, c);
  return from_coeffs(ctx, std::move(c));
}

Cyc Cyc::from_coeffs(const CycCtx& ctx, std::vector<Rational> coeffs) {
  if (coeffs.size() != static_cast<std::size_t>(ctx.degree())) {
    throw std::invalid_argument("coefficient vector has length " +
                                std::to_string(coeffs.size()) + ", expected " +
                                std::to_string(ctx.degree()));
  }
  Cyc z;
  z.ctx_ = &ctx;
  z.coeffs_ = std::move(coeffs);
  return z;
}

std::vector<Rational> Cyc::coeffs(const CycCtx& ctx) const {
  if (ctx_ && ctx_->prime() != ctx.prime()) {
    throw std::invalid_argument("cyclotomic context mismatch");
  }
  if (!ctx_) {
    std::vector<Rational> c(static_cast<std::size_t>(ctx.degree()), Rational(0));
    c[0] = coeffs_[0];
    return c;
  }
  return coeffs_;
}

bool Cyc::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool Cyc::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

bool Cyc::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

Rational Cyc::rational_value() const {
  if (!is_rational()) {
    throw std::logic_error("value is not rational: " + to_string());
  }
  return coeffs_[0];
}

bool Cyc::is_integer() const {
  return is_rational() && coeffs_[0].get_den() == 1;
}

long Cyc::as_integer() const {
  Rational v = rational_value();
  if (v.get_den() != 1 || !v.get_num().fits_slong_p()) {
    throw std::logic_error("value is not an integer fitting in long: " + to_string());
  }
  return v.get_num().get_si();
}

Cyc Cyc::conjugated() const {
  if (!ctx_) return *this;
  const long p = ctx_->prime();
  const long deg = ctx_->degree();
  // w^{-j} = -w^{2p-j} for 1 <= j <= 2p-3, and w^0 stays put.
  std::vector<Rational> c(static_cast<std::size_t>(2 * p), Rational(0));
  c[0] = coeffs_[0];
  for (long j = 1; j < deg; ++j) {
    c[static_cast<std::size_t>(2 * p - j)] -= coeffs_[static_cast<std::size_t>(j)];
  }
  reduce_top(*ctx_, c);
  return from_coeffs(*ctx_, std::move(c));
}

Cyc Cyc::inverse() const {
  if (is_zero()) {
    throw std::domain_error("division by zero in cyclotomic field");
  }
  if (!ctx_) {
    return Cyc(Rational(1) / coeffs_[0]);
  }
  if (is_rational()) {
    return rational(*ctx_, Rational(1) / coeffs_[0]);
  }
  // Extended Euclid against the (irreducible) modulus: u*f + v*Phi = g with
  // g a nonzero constant, so f^{-1} = u/g mod Phi.
  Poly r0 = ctx_->modulus();
  Poly r1 = coeffs_;
  poly_trim(r1);
  Poly u0;           // zero
  Poly u1{Rational(1)};
  while (!r1.empty()) {
    Poly q, rem;
    poly_divmod(r0, r1, q, rem);
    r0 = std::move(r1);
    r1 = std::move(rem);
    Poly unext = poly_sub(u0, poly_mul(q, u1));
    u0 = std::move(u1);
    u1 = std::move(unext);
  }
  if (r0.size() != 1) {
    throw std::logic_error("modulus is not coprime to a nonzero element");
  }
  const Rational g = r0[0];
  Poly q, rem;
  poly_divmod(u0, ctx_->modulus(), q, rem);
  rem.resize(static_cast<std::size_t>(ctx_->degree()), Rational(0));
  for (auto& c : rem) c /= g;
  return from_coeffs(*ctx_, std::move(rem));
}

std::complex<double> Cyc::approx() const {
  if (!ctx_) return {coeffs_[0].get_d(), 0.0};
  const double theta = 2.0 * std::numbers::pi / static_cast<double>(ctx_->root_order());
  const std::complex<double> w = std::polar(1.0, theta);
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * w + std::complex<double>(coeffs_[i].get_d(), 0.0);
  }
  return acc;
}

std::string Cyc::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    os << coeffs_[i].get_str();
    if (i > 0) os << "*w^" << i;
    first = false;
  }
  return os.str();
}

Cyc Cyc::operator-() const {
  Cyc r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyc& Cyc::operator+=(const Cyc& rhs) {
  const CycCtx* ctx = common_context(*this, rhs);
  if (!ctx) {
    coeffs_[0] += rhs.coeffs_[0];
    return *this;
  }
  if (!ctx_) *this = rational(*ctx, coeffs_[0]);
  if (rhs.is_literal()) {
    coeffs_[0] += rhs.coeffs_[0];
  } else {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  }
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& rhs) {
  const CycCtx* ctx = common_context(*this, rhs);
  if (!ctx) {
    coeffs_[0] -= rhs.coeffs_[0];
    return *this;
  }
  if (!ctx_) *this = rational(*ctx, coeffs_[0]);
  if (rhs.is_literal()) {
    coeffs_[0] -= rhs.coeffs_[0];
  } else {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  }
  return *this;
}

Cyc& Cyc::operator*=(const Cyc& rhs) {
  const CycCtx* ctx = common_context(*this, rhs);
  if (!ctx) {
    coeffs_[0] *= rhs.coeffs_[0];
    return *this;
  }
  if (is_literal() || is_rational()) {
    Rational s = coeffs_[0];
    *this = rhs.is_literal() ? rational(*ctx, rhs.coeffs_[0]) : rhs;
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  if (rhs.is_literal() || rhs.is_rational()) {
    const Rational& s = rhs.coeffs_[0];
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  // Negacyclic convolution modulo x^{2p} + 1, then canonical reduction.
  const long p = ctx->prime();
  const std::size_t n = static_cast<std::size_t>(2 * p);
  std::vector<Rational> prod(n, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      if (rhs.coeffs_[j] == 0) continue;
      std::size_t e = i + j;
      if (e >= n) {
        prod[e - n] -= coeffs_[i] * rhs.coeffs_[j];
      } else {
        prod[e] += coeffs_[i] * rhs.coeffs_[j];
      }
    }
  }
  reduce_top(*ctx, prod);
  coeffs_ = std::move(prod);
  return *this;
}

bool operator==(const Cyc& lhs, const Cyc& rhs) {
  const CycCtx* ctx = common_context(lhs, rhs);
  if (!ctx) return lhs.coeffs_[0] == rhs.coeffs_[0];
  if (lhs.is_literal()) return rhs.is_rational() && rhs.coeffs_[0] == lhs.coeffs_[0];
  if (rhs.is_literal()) return lhs.is_rational() && lhs.coeffs_[0] == rhs.coeffs_[0];
  return lhs.coeffs_ == rhs.coeffs_;
}

Cyc real(const Cyc& z) {
  return (z + conj(z)) * Cyc(Rational(1, 2));
}

Cyc imag(const Cyc& z) {
  if (z.is_literal()) return Cyc(0);
  const CycCtx& ctx = *z.context();
  // (z - conj z) / (2i) = -i/2 * (z - conj z)
  Cyc minus_half_i = Cyc::omega_pow(ctx, 3 * ctx.prime()) * Cyc(Rational(1, 2));
  return (z - conj(z)) * minus_half_i;
}

std::ostream& operator<<(std::ostream& os, const Cyc& z) {
  return os << z.to_string();
}

std::string rational_to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational string");
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0) {
    throw std::invalid_argument("malformed rational string: " + s);
  }
  if (q.get_den() == 0) {
    throw std::invalid_argument("zero denominator in rational string: " + s);
  }
  q.canonicalize();
  return q;
}

bool exactly_equal(const CycMatrix& a, const CycMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (a(i, j) != b(i, j)) return false;
    }
  }
  return true;
}

bool exactly_equal(const CycVector& a, const CycVector& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) != b(i)) return false;
  }
  return true;
}

}  // namespace cliffcert
